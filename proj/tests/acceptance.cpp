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

// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <exception>
#include <functional>
#include <iostream>
#include <string>

#include "gwcalc/a1deg.hpp"
#include "gwcalc/charclass.hpp"
#include "gwcalc/cli.hpp"
#include "gwcalc/enumgeo.hpp"
#include "gwcalc/traceform.hpp"
#include "gwcalc/witt.hpp"
#include "properties.hpp"

using namespace gwcalc;

namespace {

const Field Q = Field::rationals();

std::string cli_out(std::vector<std::string> args) {
    const auto r = cli::run(args);
    return r.exit_code == 0 ? r.human : "<exit " + std::to_string(r.exit_code) + ">";
}

bool lines_two() {
    return cli_out({"lines", "--d", "2"}) == "27" &&
           cli_out({"lines", "--d", "2", "--quadratic"}) == "15<1> + 12<-1>  (rank 27, signature 3)" &&
           lines_count(2) == 27 && quadratic_lines_class(2).to_string() == "15<1> + 12<-1>";
}

bool g_degrees() {
    for (unsigned p : {3u, 5u, 7u}) {
        const GWClass plus = a1_degree(build_G(p, +1));
        const GWClass minus = a1_degree(build_G(p, -1));
        if (plus.rank() != p) return false;
        if (!witt_equal(plus, gw_scalar(p))) return false;
        if (!witt_equal(minus, gw_scalar(-static_cast<std::int64_t>(p)))) return false;
    }
    const GWClass two = GWClass::unit(Q, 1) + GWClass::unit(Q, 1);
    const GWClass mtwo = GWClass::unit(Q, -1) + GWClass::unit(Q, -1);
    return gw_equal(a1_degree(build_G(2, +1)), two) && gw_equal(a1_degree(build_G(2, -1)), mtwo) &&
           cli_out({"degree", "--map", "G3+"}) == "<1,1,1> (Witt class 3<1>)";
}

bool trace_forms() {
    for (unsigned p : {3u, 5u, 7u, 11u, 13u})
        if (!verify_Tp(p)) return false;
    for (unsigned p : {3u, 5u, 7u})
        if (!verify_bayer_suarez(p)) return false;
    for (unsigned p : {5u, 7u, 13u})
        if (!serre_w2_check(p)) return false;
    return cli_out({"gw", "isometric", "<3,2,6>", "<1,1,1>"}) == "true";
}

bool triangulation() {
    for (unsigned p : {3u, 5u, 7u}) {
        const GWClass bez = a1_degree(build_G(p, +1));
        const QForm tr = QForm(Q, {mpq_class(p)}) + trace_form_Q4p(p);
        if (!(witt_class(bez) == witt_class(tr))) return false;
    }
    return true;
}

bool symmetric_powers() {
    const auto e1 = BundleExpr::gen(1);
    const WittPoly e = WittPoly::generator("e1");
    for (unsigned m : {1u, 3u, 5u, 7u}) {
        const WittPoly want = WittPoly::integer(double_factorial(m).get_si()) * e.pow((m + 1) / 2);
        if (!(euler(BundleExpr::sym(m, e1)) == want)) return false;
    }
    for (unsigned m : {2u, 4u, 6u})
        if (!euler(BundleExpr::sym(m, e1)).is_zero()) return false;
    for (unsigned m = 1; m <= 7; ++m) {
        WittPoly want = WittPoly::integer(1);
        for (unsigned i = 0; 2 * i < m; ++i) {
            const std::int64_t w = static_cast<std::int64_t>(m) - 2 * static_cast<std::int64_t>(i);
            want = want * (WittPoly::integer(1) + WittPoly::integer(w * w) * e.pow(2));
        }
        if (!(pontryagin_total(BundleExpr::sym(m, e1)) == want)) return false;
    }
    for (unsigned m : {3u, 5u, 7u, 9u})
        if (!check_sym_consistency(m)) return false;
    return true;
}

bool tensor_rank_two() {
    const auto t = BundleExpr::tensor(BundleExpr::gen(1), BundleExpr::gen(2));
    const WittPoly e1 = WittPoly::generator("e1"), e2 = WittPoly::generator("e2");
    const WittPoly one = WittPoly::integer(1);
    const WittPoly diff = e1.pow(2) - e2.pow(2);
    const WittPoly p = pontryagin_total(t);
    return euler(t) == diff && p.graded_part(4) == WittPoly::integer(2) * (e1.pow(2) + e2.pow(2)) &&
           p.graded_part(8) == diff.pow(2) && p.substitute("e2", WittPoly(Q)) == (one + e1.pow(2)).pow(2) &&
           p.substitute("e2", e1) == one + WittPoly::integer(4) * e1.pow(2);
}

bool cellular() {
    if (cellular_euler(CellularSpace::projective(2)).to_string() != "2<1> + <-1>") return false;
    if (cellular_euler(CellularSpace::grassmannian2(4)).to_string() != "4<1> + 2<-1>") return false;
    if (!gw_equal(chi_NT_GL2(), GWClass::unit(Q, 1))) return false;
    mpz_class fact = 1;
    for (unsigned m = 1; m <= 6; ++m) {
        fact *= m;
        if (real_euler(CellularSpace::grassmannian2(2 * m)) != m) return false;
        if (flag_chi_top(m) != fact) return false;
    }
    return true;
}

bool property_suites(std::string& detail) {
    bool ok = true;
    for (const auto& r : props::acceptance_suites(200)) {
        detail += " " + r.name + "=" + std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases);
        if (!r.ok() || r.cases < 100) ok = false;
    }
    return ok;
}

}  // namespace

int main() {
    int failed = 0;
    auto report = [&](int id, const char* what, const std::function<bool(std::string&)>& f) {
        std::string detail;
        bool ok = false;
        try {
            ok = f(detail);
        } catch (const std::exception& e) {
            detail = std::string(" exception: ") + e.what();
        }
        if (!ok) ++failed;
        std::cout << id << " " << (ok ? "PASS" : "FAIL") << "  " << what << detail << "\n";
    };
    auto plain = [](bool (*f)()) { return [f](std::string&) { return f(); }; };

    report(1, "line count and its quadratic class for d = 2", plain(lines_two));
    report(2, "A1-degrees of the G family", plain(g_degrees));
    report(3, "trace forms of real cyclotomic fields", plain(trace_forms));
    report(4, "Bezoutian and trace-form routes agree", plain(triangulation));
    report(5, "Euler and Pontryagin classes of Sym^m", plain(symmetric_powers));
    report(6, "tensor product of rank-2 bundles", plain(tensor_rank_two));
    report(7, "cellular and real Euler characteristics", plain(cellular));
    report(8, "property suites, seed 0x5eed2026", property_suites);
    std::cout << "9 N/A   excluded: not checkable by finite computation\n";
    return failed == 0 ? 0 : 1;
}
