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
#include "gwcalc/arith.hpp"
#include "gwcalc/error.hpp"
#include "gwcalc/traceform.hpp"
#include "gwcalc/witt.hpp"
#include "oracles.hpp"

using namespace gwcalc;

namespace {

const Field Q = Field::rationals();

QForm form(std::initializer_list<long> entries) {
    std::vector<mpq_class> e;
    for (long a : entries) e.emplace_back(a);
    return QForm(Q, e);
}

mpq_class det(RationalMatrix m) {
    mpq_class d = 1;
    const std::size_t n = m.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            d = -d;
        }
        d *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const mpq_class f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return d;
}

}  // namespace

TEST_CASE("real cyclotomic minimal polynomials") {
    CHECK(real_cyclotomic_minpoly(8) == ZPoly{-2, 0, 1});
    CHECK(real_cyclotomic_minpoly(12) == ZPoly{-3, 0, 1});
    CHECK(real_cyclotomic_minpoly(20) == ZPoly{5, 0, -5, 0, 1});
    CHECK(cyclotomic(12) == ZPoly{1, 0, -1, 0, 1});
    for (unsigned n = 3; n <= 200; ++n) {
        INFO("n = " << n);
        CHECK(real_cyclotomic_minpoly(n).degree() == static_cast<long>(oracle::euler_phi(n) / 2));
    }
    for (unsigned n = 3; n <= 60; ++n) {
        INFO("n = " << n);
        const auto expected = oracle::real_cyclotomic_numeric(n);
        const auto got = real_cyclotomic_minpoly(n);
        REQUIRE(static_cast<long>(expected.size()) == got.degree() + 1);
        for (std::size_t i = 0; i < expected.size(); ++i) CHECK(got.coeff(i) == expected[i]);
    }
}

TEST_CASE("trace Gram matrices") {
    auto gram = trace_gram(ZPoly{-3, 0, 1});
    CHECK(gram == RationalMatrix{{2, 0}, {0, 6}});
    CHECK(trace_gram(ZPoly{-2, 0, 1}) == RationalMatrix{{2, 0}, {0, 4}});
    CHECK(trace_gram(ZPoly{-1, 1}) == RationalMatrix{{1}});
    CHECK(det(trace_gram(real_cyclotomic_minpoly(8))) == 8);
    CHECK(det(trace_gram(real_cyclotomic_minpoly(12))) == 12);
    for (unsigned n : {20u, 28u, 44u, 52u, 60u}) {
        const ZPoly f = real_cyclotomic_minpoly(n);
        const auto g = trace_gram(f);
        const auto sums = oracle::power_sums_companion(f, 2 * g.size() - 1);
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j) CHECK(g[i][j] == sums[i + j]);
    }
    try {
        trace_gram(ZPoly{1, 2, 1});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InseparablePolynomial);
    }
}

TEST_CASE("Q_4p and T_p") {
    CHECK(trace_form_Q4p(3) == form({2, 6}));
    for (unsigned p : {3u, 5u, 7u, 11u, 13u}) {
        INFO("p = " << p);
        const QForm q = trace_form_Q4p(p);
        CHECK(q.rank() == p - 1);
        CHECK(*q.signature() == static_cast<std::int64_t>(p - 1));
        CHECK(verify_Tp(p));
    }
    for (unsigned p : {17u, 19u, 23u}) CHECK(verify_Tp(p));
    CHECK_THROWS_AS(trace_form_Q4p(4), Error);
}

TEST_CASE("A-lattice route") {
    CHECK(a_lattice_gram(2) == RationalMatrix{{2}});
    CHECK(a_lattice_gram(3) == RationalMatrix{{2, -1}, {-1, 2}});
    CHECK(diagonalize(a_lattice_gram(3)) == form({2, 6}));
    CHECK(is_isometric(form({2, 2}), form({1, 1})));
    for (unsigned p : {3u, 5u, 7u, 11u, 13u}) {
        INFO("p = " << p);
        CHECK(verify_bayer_suarez(p));
        CHECK(verify_bayer_suarez(p) == verify_Tp(p));
    }
}

TEST_CASE("Serre w2 check") {
    CHECK(diagonalize(trace_gram(real_cyclotomic_minpoly(7))) == form({1, 1, 1}));
    CHECK(is_isometric(diagonalize(trace_gram(real_cyclotomic_minpoly(5))), form({2, 10})));
    for (unsigned p : {3u, 5u, 7u, 11u, 13u, 17u, 19u}) {
        INFO("p = " << p);
        CHECK(serre_w2_check(p));
    }
}
