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

#ifndef GWCALC_ARITH_HPP
#define GWCALC_ARITH_HPP

// Integer helpers shared by the quadratic-form layer: factorization,
// square-free parts, valuations and quadratic residues.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace gwcalc::arith {

using Factorization = std::vector<std::pair<mpz_class, unsigned>>;

bool is_prime(const mpz_class& n);

/// Prime factorization of |n| in ascending prime order. Trial division up to
/// 10^6, Pollard-Brent rho for whatever cofactor remains. factor(0) throws.
Factorization factor(const mpz_class& n);

/// Distinct primes dividing |n|, ascending.
std::vector<mpz_class> prime_divisors(const mpz_class& n);

/// sign(n) * product of primes dividing n to an odd power.
mpz_class squarefree_part(const mpz_class& n);

/// Square-free integer in the same class of Q*/Q*^2 as q (q != 0).
mpz_class square_class(const mpq_class& q);

/// Exponent of the prime p in n (n != 0).
unsigned valuation(const mpz_class& n, const mpz_class& p);

/// Legendre symbol (a/p) for an odd prime p; returns 0 when p | a.
int legendre(const mpz_class& a, const mpz_class& p);

/// Smallest positive quadratic non-residue modulo the odd prime p.
std::uint64_t smallest_nonresidue(std::uint64_t p);

/// a mod m in [0, m).
std::uint64_t mod(const mpz_class& a, std::uint64_t m);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

}  // namespace gwcalc::arith

#endif
