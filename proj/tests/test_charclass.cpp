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

#include "doctest.h"
#include "gwcalc/charclass.hpp"
#include "gwcalc/error.hpp"
#include "gwcalc/syntax.hpp"
#include "gwcalc/witt.hpp"

using namespace gwcalc;

namespace {

const Field Q = Field::rationals();
const auto E1 = BundleExpr::gen(1);
const auto E2 = BundleExpr::gen(2);

WittPoly e(unsigned i) { return WittPoly::generator("e" + std::to_string(i)); }
WittPoly n(std::int64_t k) { return WittPoly::integer(k); }

template <class F>
ErrorKind kind_of(F f) {
    try {
        f();
    } catch (const Error& x) {
        return x.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("double factorial") {
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(3) == 3);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(9) == 945);
    CHECK(double_factorial(8) == 384);
}

TEST_CASE("Otilde table") {
    auto c = euler_Otilde(3, 1);
    CHECK(c.coefficient == -3);
    CHECK(c.generator == BNGenerator::PullbackE);
    c = euler_Otilde(2, 1);
    CHECK(c.coefficient == 1);
    CHECK(c.generator == BNGenerator::ETilde);
    CHECK(euler_Otilde(4, 1).coefficient == -2);
    CHECK(euler_Otilde(5, 1).coefficient == 5);
    CHECK(euler_Otilde(5, -1).coefficient == -5);
    CHECK(euler_Otilde(6, -1).coefficient == -3);
    CHECK(kind_of([] { euler_Otilde(6, 1, Field::finite(3)); }) == ErrorKind::CharacteristicConstraint);
    CHECK(euler_Otilde(5, 1, Field::finite(3)).coefficient == 5);
}

TEST_CASE("et squared rewrites to 4 pe^2") {
    const WittPoly pe = WittPoly::generator("pe");
    for (unsigned m : {2u, 4u, 6u, 10u}) {
        const WittPoly x = euler_Otilde(m, 1).as_poly();
        CHECK(bn_reduce(x * x) == n(static_cast<std::int64_t>(m * m)) * pe.pow(2));
    }
    const WittPoly et = WittPoly::generator("et");
    const WittPoly a = n(2) * et + pe, b = et - n(3) * pe, c = n(5) * et;
    CHECK(bn_reduce(bn_reduce(a * b) * c) == bn_reduce(a * bn_reduce(b * c)));
    CHECK(bn_reduce(et.pow(3)) == n(4) * pe.pow(2) * et);
}

TEST_CASE("Sym decomposition over N") {
    using V = std::vector<std::pair<unsigned, int>>;
    CHECK(decompose_sym_N(3) == V{{3, 1}, {1, -1}});
    CHECK(decompose_sym_N(1) == V{{1, 1}});
    CHECK(decompose_sym_N(4) == V{{4, 1}, {2, -1}, {0, 1}});
    CHECK(decompose_sym_N(2) == V{{2, 1}, {0, -1}});
    CHECK(decompose_sym_N(6) == V{{6, 1}, {4, -1}, {2, 1}, {0, -1}});
}

TEST_CASE("Euler classes of symmetric powers") {
    CHECK(euler(BundleExpr::sym(3, E1)) == n(3) * e(1).pow(2));
    CHECK(euler(BundleExpr::sym(5, E1)) == n(15) * e(1).pow(3));
    CHECK(euler(BundleExpr::sym(1, E1)) == e(1));
    CHECK(euler(BundleExpr::sym(7, E1)) == n(105) * e(1).pow(4));
    for (unsigned m : {2u, 4u, 6u}) CHECK(euler(BundleExpr::sym(m, E1)).is_zero());
    CHECK(euler(BundleExpr::twist(-1, BundleExpr::sym(3, E1))) == n(-3) * e(1).pow(2));
    CHECK(euler(BundleExpr::sym(3, E1)).to_string() == "3*e1^2");
}

TEST_CASE("Sym Euler class through the N-decomposition") {
    // e(Sym^m) is the product of the Otilde Euler classes, pe <-> e1.
    for (unsigned m : {1u, 3u, 5u, 7u, 9u}) {
        WittPoly prod = n(1);
        for (const auto& [w, s] : decompose_sym_N(m)) prod = prod * euler_Otilde(w, s).as_poly();
        CHECK(prod.substitute("pe", e(1)) == euler(BundleExpr::sym(m, E1)));
    }
    for (unsigned m : {3u, 5u, 7u, 9u}) CHECK(check_sym_consistency(m));
}

TEST_CASE("Pontryagin classes of symmetric powers") {
    CHECK(pontryagin_total(BundleExpr::sym(3, E1)) == (n(1) + n(9) * e(1).pow(2)) * (n(1) + e(1).pow(2)));
    CHECK(pontryagin_total(BundleExpr::sym(2, E1)) == n(1) + n(4) * e(1).pow(2));
    for (unsigned m = 1; m <= 7; ++m) {
        // Through N: each nonzero weight w contributes 1 + e(Otilde(w))^2 = 1 + w^2 pe^2.
        WittPoly viaN = n(1);
        for (const auto& [w, s] : decompose_sym_N(m)) {
            if (w == 0) continue;
            const WittPoly ew = euler_Otilde(w, s).as_poly();
            viaN = viaN * (n(1) + bn_reduce(ew * ew));
        }
        CHECK(viaN.substitute("pe", e(1)) == pontryagin_total(BundleExpr::sym(m, E1)));
    }
    CHECK(pontryagin_total(BundleExpr::twist(-1, E1)) == pontryagin_total(E1));
    const WittPoly p = pontryagin_total(E1);
    CHECK(p.graded_part(4) == euler(E1).pow(2));
}

TEST_CASE("tensor products of rank-2 bundles") {
    const auto t = BundleExpr::tensor(E1, E2);
    CHECK(euler(t) == e(1).pow(2) - e(2).pow(2));
    const WittPoly p = pontryagin_total(t);
    CHECK(p.graded_part(4) == n(2) * (e(1).pow(2) + e(2).pow(2)));
    CHECK(p.graded_part(8) == (e(1).pow(2) - e(2).pow(2)).pow(2));
    CHECK(p.substitute("e2", WittPoly(Q)) == (n(1) + e(1).pow(2)).pow(2));
    CHECK(p.substitute("e2", e(1)) == n(1) + n(4) * e(1).pow(2));
    // E (x) E = Sym^2 E (+) O
    CHECK(pontryagin_total(BundleExpr::tensor(E1, E1)) == pontryagin_total(BundleExpr::sym(2, E1)));
    CHECK(euler(BundleExpr::tensor(E1, E1)).is_zero());
}

TEST_CASE("unsupported constructions") {
    CHECK(kind_of([] { euler(BundleExpr::tensor(BundleExpr::sym(2, E1), E2)); }) == ErrorKind::UnsupportedTensor);
    CHECK(kind_of([] { euler(BundleExpr::sym(2, BundleExpr::sum({E1, E2}))); }) == ErrorKind::UnsupportedSym);
    const EvalOptions f3{Field::finite(3), CoefficientRing::Witt};
    CHECK(kind_of([&] { euler(BundleExpr::sym(3, E1), f3); }) == ErrorKind::CharacteristicConstraint);
    CHECK(kind_of([&] { pontryagin_total(BundleExpr::sym(9, E1), f3); }) == ErrorKind::CharacteristicConstraint);
    CHECK_FALSE(euler(BundleExpr::sym(5, E1), f3).is_zero());
    CHECK(euler(BundleExpr::sym(2, E1), f3).is_zero());
}

TEST_CASE("coefficient rings") {
    const EvalOptions gw{Q, CoefficientRing::GW};
    const WittPoly x = euler(BundleExpr::sym(5, E1), gw);
    CHECK(x.coefficient({{"e1", 3}}) == gw_scalar(15));
    const WittPoly h = WittPoly::constant(GWClass::hyperbolic(Q));
    CHECK(h.is_zero());
    CHECK_FALSE(WittPoly::constant(GWClass::hyperbolic(Q), CoefficientRing::GW).is_zero());
    const EvalOptions f7{Field::finite(7), CoefficientRing::Witt};
    // 15 = 3 mod 4 in W(F_7) = Z/4.
    CHECK(euler(BundleExpr::sym(5, E1), f7) ==
          WittPoly::integer(3, Field::finite(7)) * WittPoly::generator("e1", Field::finite(7)).pow(3));
}

TEST_CASE("Clebsch-Gordan") {
    CHECK(clebsch_gordan(1, 1) == std::vector<unsigned>{2, 0});
    CHECK(clebsch_gordan(5, 0) == std::vector<unsigned>{5});
    CHECK(clebsch_gordan(2, 1) == std::vector<unsigned>{3, 1});
}

TEST_CASE("bundle syntax") {
    CHECK(parse_bundle("E1") == E1);
    CHECK(parse_bundle("Sym(3,E1)") == BundleExpr::sym(3, E1));
    CHECK(parse_bundle("E1 (+) E2") == BundleExpr::sum({E1, E2}));
    CHECK(parse_bundle("E1 (x) E2") == BundleExpr::tensor(E1, E2));
    CHECK(parse_bundle("det-(Sym(2,E1))") == BundleExpr::twist(-1, BundleExpr::sym(2, E1)));
    CHECK(parse_bundle("E1 (+) E2 (x) E3") == BundleExpr::sum({E1, BundleExpr::tensor(E2, BundleExpr::gen(3))}));
    for (const char* s : {"Sym(3,E1) (+) E1 (x) E2", "det+(E1 (+) E2)", "(E1 (+) E2) (x) E3"}) {
        const BundleExpr x = parse_bundle(s);
        CHECK(parse_bundle(x.to_string()) == x);
    }
    CHECK(kind_of([] { parse_bundle("Sym(3,E1"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_bundle("F1"); }) == ErrorKind::ParseError);
    CHECK(BundleExpr::sym(3, E1).rank() == 4);
    CHECK(BundleExpr::tensor(E1, E2).rank() == 4);
}
