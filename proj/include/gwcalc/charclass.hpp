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

#ifndef GWCALC_CHARCLASS_HPP
#define GWCALC_CHARCLASS_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gwcalc/gwclass.hpp"

namespace gwcalc {

enum class CoefficientRing { Witt, GW };

/// Commutative polynomials in degree-2 Euler class generators with
/// coefficients in W(k) or GW(k). Coefficients are kept in canonical form,
/// so structural equality is equality in the ring.
class WittPoly {
   public:
    using Monomial = std::vector<unsigned>;

    explicit WittPoly(Field field = Field::rationals(), CoefficientRing ring = CoefficientRing::Witt);

    static WittPoly constant(const GWClass& c, CoefficientRing ring = CoefficientRing::Witt);
    static WittPoly integer(std::int64_t n, Field field = Field::rationals(),
                            CoefficientRing ring = CoefficientRing::Witt);
    static WittPoly generator(const std::string& name, Field field = Field::rationals(),
                              CoefficientRing ring = CoefficientRing::Witt);

    const Field& field() const noexcept { return field_; }
    CoefficientRing ring() const noexcept { return ring_; }
    const std::vector<std::string>& generators() const noexcept { return gens_; }
    const std::map<Monomial, GWClass>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of prod name_i^{exp_i}; zero when absent.
    GWClass coefficient(const std::map<std::string, unsigned>& exponents) const;

    /// Sum of the terms of cohomological degree deg (2 per generator power).
    WittPoly graded_part(unsigned deg) const;

    WittPoly substitute(const std::string& name, const WittPoly& value) const;

    WittPoly operator+(const WittPoly& o) const;
    WittPoly operator-(const WittPoly& o) const;
    WittPoly operator-() const;
    WittPoly operator*(const WittPoly& o) const;
    WittPoly pow(unsigned k) const;

    /// "1 + 9*e1^2", coefficients printed as integers when they are multiples of <1>.
    std::string to_string() const;

    friend bool operator==(const WittPoly& a, const WittPoly& b);

   private:
    void add_term(Monomial mono, const GWClass& c);
    GWClass normalize(const GWClass& c) const;
    WittPoly aligned(const std::vector<std::string>& gens) const;
    static std::vector<std::string> merged(const WittPoly& a, const WittPoly& b);

    Field field_;
    CoefficientRing ring_;
    std::vector<std::string> gens_;
    std::map<Monomial, GWClass> terms_;
};

std::string coefficient_string(const GWClass& c, CoefficientRing ring);

struct BundleExpr {
    enum class Kind { Gen, Sum, Tensor, Sym, DetTwist };

    Kind kind = Kind::Gen;
    unsigned index = 1;  // generator index, or the power of Sym
    int sign = 1;        // DetTwist only
    std::vector<BundleExpr> children;

    static BundleExpr gen(unsigned i);
    static BundleExpr sum(std::vector<BundleExpr> parts);
    static BundleExpr tensor(BundleExpr a, BundleExpr b);
    static BundleExpr sym(unsigned m, BundleExpr a);
    static BundleExpr twist(int sign, BundleExpr a);

    unsigned rank() const;
    std::string to_string() const;

    friend bool operator==(const BundleExpr&, const BundleExpr&) = default;
};

struct EvalOptions {
    Field field = Field::rationals();
    CoefficientRing ring = CoefficientRing::Witt;
};

/// Generator of the Euler class of a rank-2 bundle over BN.
enum class BNGenerator { PullbackE, ETilde };

struct OtildeClass {
    unsigned weight = 1;
    int sign = 1;
    std::int64_t coefficient = 0;
    BNGenerator generator = BNGenerator::PullbackE;

    /// coefficient * generator in the ring with generators "pe" and "et".
    WittPoly as_poly(Field field = Field::rationals(), CoefficientRing ring = CoefficientRing::Witt) const;
};

OtildeClass euler_Otilde(unsigned m, int sign, const Field& field = Field::rationals());

/// Rewrites et^2 -> 4 pe^2.
WittPoly bn_reduce(const WittPoly& x);

std::vector<std::pair<unsigned, int>> decompose_sym_N(unsigned m);

WittPoly euler(const BundleExpr& expr, const EvalOptions& opts = {});
WittPoly pontryagin_total(const BundleExpr& expr, const EvalOptions& opts = {});

/// Summands of Sym^a (x) Sym^b for SL2.
std::vector<unsigned> clebsch_gordan(unsigned a, unsigned b);

bool check_sym_consistency(unsigned m);

mpz_class double_factorial(unsigned m);

}  // namespace gwcalc

#endif
