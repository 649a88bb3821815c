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

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gwcalc/charclass.hpp"
#include "gwcalc/enumgeo.hpp"
#include "gwcalc/error.hpp"
#include "gwcalc/syntax.hpp"
#include "gwcalc/witt.hpp"
#include "oracles.hpp"

using namespace gwcalc;

namespace {

const Field Q = Field::rationals();

std::map<unsigned, mpz_class> frozen_line_counts() {
    std::ifstream in(GWCALC_FIXTURE_DIR "/line_counts.txt");
    REQUIRE(in.good());
    std::map<unsigned, mpz_class> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        unsigned d;
        std::string n;
        row >> d >> n;
        out[d] = mpz_class(n);
    }
    return out;
}

}  // namespace

TEST_CASE("SymPoly2") {
    CHECK(SymPoly2::weight_product(3) == SymPoly2({0, 18, 45, 18, 0}));
    CHECK(SymPoly2::weight_product(3).to_string() == "18*x^3*y + 45*x^2*y^2 + 18*x*y^3");
    CHECK_THROWS_AS(SymPoly2({1, 2}), Error);
}

TEST_CASE("integration over Gr(2,n)") {
    CHECK(integrate_gr2(1, SymPoly2({0, 1, 0})) == 1);
    CHECK(integrate_gr2(2, SymPoly2::weight_product(3)) == 27);
    CHECK(integrate_gr2(2, SymPoly2::sigma1_power(4)) == 2);
    for (unsigned d = 1; d <= 10; ++d) CHECK(integrate_gr2(d, SymPoly2::sigma1_power(2 * d)) == oracle::catalan(d));
    try {
        integrate_gr2(2, SymPoly2::sigma1_power(3));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::WrongDegree);
    }
}

TEST_CASE("line counts") {
    CHECK(lines_count(2) == 27);
    for (const auto& [d, n] : frozen_line_counts()) {
        INFO("d = " << d);
        CHECK(lines_count(d) == n);
    }
    for (unsigned d = 2; d <= 4; ++d) {
        const unsigned top = 2 * d - 1;
        const mpq_class loc = oracle::localize_gr2(d + 2, [&](const mpq_class& x, const mpq_class& y) {
            mpq_class r = 1;
            for (unsigned i = 0; i <= top; ++i) r *= mpq_class(top - i) * x + mpq_class(i) * y;
            return r;
        });
        CHECK(loc == mpq_class(lines_count(d)));
    }
}

TEST_CASE("quadratic line counts") {
    const GWClass q2 = quadratic_lines_class(2);
    CHECK(q2.to_string() == "15<1> + 12<-1>");
    CHECK(q2.signature() == 3);
    const GWClass q3 = quadratic_lines_class(3);
    CHECK(q3.rank() == 2875);
    CHECK(q3.signature() == 15);
    CHECK(gw_equal(q3, gw_scalar(15) + gw_scalar(1430) * GWClass::hyperbolic(Q)));
    for (unsigned d = 2; d <= 4; ++d) {
        const GWClass q = quadratic_lines_class(d);
        CHECK(mpz_class(q.rank()) == lines_count(d));
        CHECK(mpz_class(*q.signature()) == double_factorial(2 * d - 1));
    }
}

TEST_CASE("cellular Euler characteristics") {
    CHECK(cellular_euler(CellularSpace::projective(2)).to_string() == "2<1> + <-1>");
    CHECK(cellular_euler(CellularSpace::grassmannian2(4)).to_string() == "4<1> + 2<-1>");
    CHECK(cellular_euler(CellularSpace::projective(1)).to_string() == "<1> + <-1>");
    CHECK(real_euler(CellularSpace::grassmannian2(4)) == 2);
    CHECK(real_euler(CellularSpace::grassmannian2(6)) == 3);
    CHECK(flag_chi_top(3) == 6);
    for (unsigned m = 1; m <= 6; ++m) {
        CHECK(real_euler(CellularSpace::grassmannian2(2 * m)) == m);
        mpz_class fact = 1;
        for (unsigned k = 2; k <= m; ++k) fact *= k;
        CHECK(flag_chi_top(m) == fact);
        CHECK(real_euler(CellularSpace::flag(m)) == fact);
    }
    for (unsigned m = 2; m <= 6; ++m)
        CHECK(real_euler(CellularSpace::grassmannian2(2 * m)) - real_euler(CellularSpace::grassmannian2(2 * m - 2)) == 1);
    CHECK(cellular_euler(CellularSpace::explicit_cells({0, 1, 1, 2})).to_string() == "2<1> + 2<-1>");
    CHECK(cellular_euler(CellularSpace::projective(3), Field::reals()).to_string() == "2<1> + 2<-1>");
}

TEST_CASE("chi of the torus normalizer quotient of GL2") {
    const GWClass chi = chi_NT_GL2();
    CHECK(chi == GWClass::unit(Q, 1));
    CHECK(chi.rank() == 1);
    CHECK(chi.signature() == 1);
    CHECK(chi_NT_GL2(Field::finite(5)) == GWClass::unit(Field::finite(5), 1));
}

TEST_CASE("space syntax") {
    CHECK(parse_space("P2").cell_counts() == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(parse_space("Gr2,4").cell_counts() == std::vector<std::uint64_t>{1, 1, 2, 1, 1});
    CHECK(parse_space("Fl2").cell_counts() == parse_space("Gr2,4").cell_counts());
    CHECK_THROWS_AS(parse_space("Q3"), Error);
}
