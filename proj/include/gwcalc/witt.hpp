/*
   Copyright 2026 The gwcalc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GWCALC_WITT_HPP
#define GWCALC_WITT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

#include "gwcalc/gwclass.hpp"

namespace gwcalc {

/// Element of W(F_p). For odd p the class is fixed by the rank parity and
/// whether the signed discriminant (-1)^{n(n-1)/2} d is a square, which gives
/// the four elements of Z/2 x Z/2 or Z/4. For p = 2 only the parity is kept.
struct ResidueClass {
    mpz_class prime;
    bool odd_rank = false;
    bool square_disc = true;

    bool is_zero() const noexcept { return !odd_rank && square_disc; }
    /// Anisotropic representative: "0", "<1>", "<n>", "<1,1>" or "<1,n>".
    std::string to_string() const;

    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

/// Complete Witt-ring invariants of a class over one field.
///   Q: signature, second residues at odd primes (finite support), residue at 2
///   R: signature
///   C: rank mod 2
///   F_p: the local ResidueClass
struct WittClass {
    Field field = Field::rationals();
    std::int64_t signature = 0;
    std::map<mpz_class, ResidueClass> residues;
    bool dyadic = false;
    ResidueClass local;
    bool odd_rank = false;

    bool is_zero() const;
    /// signature * <1> when every residue vanishes over Q.
    bool is_integer_multiple() const;

    friend bool operator==(const WittClass&, const WittClass&) = default;
};

/// Second residue homomorphism W(Q) -> W(F_p): <u p^e> maps to <u mod p> for
/// odd e and to zero for even e. At p = 2 it is the parity of v_2(disc).
ResidueClass second_residue(const QForm& q, const mpz_class& p);

WittClass witt_class(const QForm& q);
WittClass witt_class(const GWClass& x);

bool witt_equal(const GWClass& x, const GWClass& y);
/// Equality in GW(k): same rank and same Witt class.
bool gw_equal(const GWClass& x, const GWClass& y);

/// Deterministic representative of the ring element: the anisotropic Witt
/// representative padded with hyperbolic planes to the right rank.
GWClass canonical(const GWClass& x);

/// "3<1>" / "-5<1>" for integer multiples over Q and R, otherwise the
/// anisotropic representative in multiplicity notation.
std::string witt_string(const GWClass& x);

/// Inverse of a rank-one, signature-one class in GW(Q) via
/// v = 1 - t + t^2 with t = u - 1. The product u*v is checked before
/// returning. Throws NotAUnit or VerificationFailed.
GWClass invert_unit(const GWClass& u);

}  // namespace gwcalc

#endif
