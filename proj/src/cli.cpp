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

#include "gwcalc/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "gwcalc/a1deg.hpp"
#include "gwcalc/charclass.hpp"
#include "gwcalc/enumgeo.hpp"
#include "gwcalc/error.hpp"
#include "gwcalc/syntax.hpp"
#include "gwcalc/traceform.hpp"
#include "gwcalc/witt.hpp"

namespace gwcalc::cli {
namespace {

using nlohmann::json;

struct Output {
    std::string human;
    json result;
};

json integer_json(const mpz_class& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

json places_json(const std::vector<Place>& places) {
    json a = json::array();
    for (const auto& v : places) a.push_back(v.name());
    return a;
}

json form_json(const QForm& q) {
    const auto inv = invariants(q);
    json j;
    j["form"] = q.to_string();
    j["field"] = q.field().name();
    j["rank"] = inv.rank;
    j["signature"] = inv.signature ? json(*inv.signature) : json(nullptr);
    j["discriminant"] = integer_json(inv.discriminant);
    j["hasse_minus"] = places_json(inv.hasse_minus);
    return j;
}

json gw_json(const GWClass& x) {
    json j;
    j["class"] = x.to_string();
    j["plus"] = x.plus().to_string();
    j["minus"] = x.minus().to_string();
    j["field"] = x.field().name();
    j["rank"] = x.rank();
    const auto s = x.signature();
    j["signature"] = s ? json(*s) : json(nullptr);
    j["witt"] = witt_string(x);
    return j;
}

std::string rank_signature(const GWClass& x) {
    std::string s = "rank " + std::to_string(x.rank());
    if (const auto sig = x.signature()) s += ", signature " + std::to_string(*sig);
    return s;
}

std::string join_places(const std::vector<Place>& places) {
    std::string s;
    for (const auto& v : places) s += (s.empty() ? "" : ", ") + v.name();
    return s;
}

Output gw_classify(const std::string& text, const Field& field) {
    const QForm q = parse_form(text, field);
    const auto inv = invariants(q);
    const GWClass x(q);
    std::ostringstream h;
    h << q.to_string() << "\n";
    h << "rank " << inv.rank;
    if (inv.signature) h << ", signature " << *inv.signature;
    h << ", discriminant " << inv.discriminant << "\n";
    if (field.is_rationals())
        h << "hasse: " << (inv.hasse_minus.empty() ? "+1 at every place" : "-1 at " + join_places(inv.hasse_minus)) << "\n";
    h << "canonical: " << canonical_form(q).to_string() << "\n";
    h << "witt class: " << witt_string(x);
    json r = form_json(q);
    r["canonical"] = canonical_form(q).to_string();
    r["anisotropic"] = anisotropic_part(q).to_string();
    r["witt"] = witt_string(x);
    return {h.str(), r};
}

Output gw_isometric(const std::string& a, const std::string& b, const Field& field) {
    const QForm qa = parse_form(a, field), qb = parse_form(b, field);
    const bool iso = is_isometric(qa, qb);
    return {iso ? "true" : "false", json{{"first", form_json(qa)}, {"second", form_json(qb)}, {"isometric", iso}}};
}

Output gw_residue(const std::string& text, const std::string& prime) {
    const QForm q = parse_form(text);
    const mpz_class p(prime);
    const ResidueClass r = second_residue(q, p);
    const std::string where = p == 2 ? "dyadic parity datum" : "in W(F_" + p.get_str() + ")";
    json j{{"form", q.to_string()}, {"prime", integer_json(p)}, {"residue", r.to_string()}, {"zero", r.is_zero()}};
    return {r.to_string() + " " + where, j};
}

Output gw_invert(const std::string& text) {
    const GWClass u = parse_gwclass(text);
    const GWClass v = invert_unit(u);
    const GWClass product = canonical(u * v);
    json j{{"unit", gw_json(u)}, {"inverse", gw_json(v)}, {"product", product.to_string()}, {"verified", true}};
    return {v.to_string(), j};
}

Output degree(const std::string& map_name, const std::string& num, const std::string& den) {
    RationalMapP1 f;
    json inputs;
    if (!map_name.empty()) {
        const auto [m, sign] = parse_map_name(map_name);
        f = build_G(m, sign);
        inputs["map"] = map_name;
    } else {
        f = make_map(parse_coefficients(num), parse_coefficients(den));
    }
    const RationalMatrix b = bezout_form(f);
    const GWClass d = a1_degree(f);
    json bj = json::array();
    for (const auto& row : b) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.get_str());
        bj.push_back(r);
    }
    inputs["numerator"] = coefficient_strings(f.numerator);
    inputs["denominator"] = coefficient_strings(f.denominator);
    json j{{"map", inputs}, {"bezout", bj}, {"degree", gw_json(d)}};
    return {d.plus().to_string() + " (Witt class " + witt_string(d) + ")", j};
}

Output traceform(unsigned p, bool tp, bool bs, bool w2) {
    json j{{"p", p}};
    if (tp || bs || w2) {
        const char* name = tp ? "verify_tp" : bs ? "bayer_suarez" : "serre_w2";
        const bool ok = tp ? verify_Tp(p) : bs ? verify_bayer_suarez(p) : serre_w2_check(p);
        j["check"] = name;
        j["holds"] = ok;
        return {ok ? "true" : "false", j};
    }
    const ZPoly f = real_cyclotomic_minpoly(4 * p);
    const QForm q = trace_form_Q4p(p);
    j["minimal_polynomial"] = coefficient_strings(to_rational(f));
    j["trace_form"] = form_json(q);
    std::ostringstream h;
    h << "minimal polynomial: " << f.to_string("y") << "\n";
    h << "Q_" << 4 * p << " = " << q.to_string();
    return {h.str(), j};
}

json poly_json(const WittPoly& x) {
    json terms = json::array();
    for (const auto& [mono, c] : x.terms()) {
        json m = json::object();
        for (std::size_t i = 0; i < mono.size(); ++i)
            if (mono[i]) m[x.generators()[i]] = mono[i];
        terms.push_back({{"monomial", m}, {"coefficient", coefficient_string(c, x.ring())}, {"class", c.to_string()}});
    }
    return {{"polynomial", x.to_string()},
            {"ring", x.ring() == CoefficientRing::Witt ? "W" : "GW"},
            {"field", x.field().name()},
            {"terms", terms}};
}

Output charclass(const std::string& which, const std::string& text, bool gw, const Field& field) {
    const BundleExpr e = parse_bundle(text);
    const EvalOptions opts{field, gw ? CoefficientRing::GW : CoefficientRing::Witt};
    const WittPoly x = which == "euler" ? euler(e, opts) : pontryagin_total(e, opts);
    json j{{"class", which}, {"expression", e.to_string()}, {"rank", e.rank()}, {"value", poly_json(x)}};
    return {x.to_string(), j};
}

Output lines(unsigned d, bool quadratic) {
    const mpz_class n = lines_count(d);
    json j{{"d", d}, {"N", integer_json(n)}};
    if (!quadratic) return {n.get_str(), j};
    const GWClass q = quadratic_lines_class(d);
    j["quadratic"] = gw_json(q);
    return {q.to_string() + "  (" + rank_signature(q) + ")", j};
}

Output euler_cellular(const std::string& text) {
    const CellularSpace x = parse_space(text);
    const GWClass chi = cellular_euler(x);
    json counts = json::array();
    for (auto c : x.cell_counts()) counts.push_back(c);
    json j{{"space", x.name}, {"cells_by_dimension", counts}, {"euler", gw_json(chi)}, {"real_euler", real_euler(x)}};
    return {chi.to_string() + "  (" + rank_signature(chi) + ")", j};
}

}  // namespace

const std::string& grammar() {
    static const std::string g =
        "usage:\n"
        "  gwcalc [--json] gw classify <form> [--field Q|R|C|F<p>]\n"
        "  gwcalc [--json] gw isometric <form> <form> [--field Q|R|C|F<p>]\n"
        "  gwcalc [--json] gw residue <form> -p <prime>\n"
        "  gwcalc [--json] gw invert <gwclass>\n"
        "  gwcalc [--json] degree --map G<m><+|-> | --num <coeffs> --den <coeffs>\n"
        "  gwcalc [--json] traceform --p <prime> [--verify-tp|--bayer-suarez|--serre-w2]\n"
        "  gwcalc [--json] charclass euler|pontryagin <bundle-expr> [--gw] [--field Q|R|C|F<p>]\n"
        "  gwcalc [--json] lines --d <d> [--quadratic]\n"
        "  gwcalc [--json] euler-cellular --space P<n>|Gr2,<n>|Fl<m>\n"
        "forms: <a1,...,an> with entries p/q; gwclass: e.g. \"<2> + <3> - <6>\" or \"15<1> + 12<-1>\";\n"
        "coeffs: comma separated, lowest degree first; bundle-expr: E1, Sym(3,E1), E1 (+) E2, E1 (x) E2, det-(E1)\n";
    return g;
}

std::string CommandResult::output() const { return json_mode ? json.dump(2) : human; }

CommandResult run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

CommandResult run(const std::vector<std::string>& args) {
    CommandResult result;
    result.json_mode = std::find(args.begin(), args.end(), "--json") != args.end();

    CLI::App app{"Exact Grothendieck-Witt and Witt-valued characteristic class calculator", "gwcalc"};
    app.fallthrough();
    app.require_subcommand(1);
    bool json_flag = false;
    app.add_flag("--json", json_flag, "machine-readable output");

    std::string field_text = "Q", form_a, form_b, prime, gwclass_text;
    auto* gw = app.add_subcommand("gw", "quadratic forms and GW classes");
    gw->require_subcommand(1);
    auto* classify = gw->add_subcommand("classify", "invariants of a form");
    classify->add_option("form", form_a)->required();
    classify->add_option("--field", field_text);
    auto* isometric = gw->add_subcommand("isometric", "isometry test");
    isometric->add_option("first", form_a)->required();
    isometric->add_option("second", form_b)->required();
    isometric->add_option("--field", field_text);
    auto* residue = gw->add_subcommand("residue", "second residue of a form over Q");
    residue->add_option("form", form_a)->required();
    residue->add_option("-p", prime)->required();
    auto* invert = gw->add_subcommand("invert", "inverse of a rank-1, signature-1 unit of GW(Q)");
    invert->add_option("class", gwclass_text)->required();

    std::string map_name, num, den;
    auto* deg = app.add_subcommand("degree", "A1-Brouwer degree of a pointed map");
    auto* map_opt = deg->add_option("--map", map_name);
    auto* num_opt = deg->add_option("--num", num);
    auto* den_opt = deg->add_option("--den", den);
    num_opt->needs(den_opt);
    den_opt->needs(num_opt);
    map_opt->excludes(num_opt)->excludes(den_opt);

    unsigned p = 0;
    bool tp = false, bs = false, w2 = false;
    auto* tf = app.add_subcommand("traceform", "trace forms of real cyclotomic fields");
    tf->add_option("--p", p)->required();
    auto* tp_flag = tf->add_flag("--verify-tp", tp);
    auto* bs_flag = tf->add_flag("--bayer-suarez", bs);
    auto* w2_flag = tf->add_flag("--serre-w2", w2);
    tp_flag->excludes(bs_flag)->excludes(w2_flag);
    bs_flag->excludes(w2_flag);

    std::string which, bundle;
    bool gw_coeffs = false;
    auto* cc = app.add_subcommand("charclass", "Euler and Pontryagin classes of bundle expressions");
    cc->add_option("class", which)->required()->check(CLI::IsMember({"euler", "pontryagin"}));
    cc->add_option("expr", bundle)->required();
    cc->add_flag("--gw", gw_coeffs, "coefficients in GW instead of W");
    cc->add_option("--field", field_text);

    unsigned d = 0;
    bool quadratic = false;
    auto* ln = app.add_subcommand("lines", "lines on a degree 2d-1 hypersurface in P^{d+1}");
    ln->add_option("--d", d)->required();
    ln->add_flag("--quadratic", quadratic);

    std::string space;
    auto* ec = app.add_subcommand("euler-cellular", "GW-valued Euler characteristic of a cellular space");
    ec->add_option("--space", space)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (deg->parsed() && map_name.empty() && num.empty())
            throw CLI::RequiredError("degree needs --map or --num/--den");
    } catch (const CLI::CallForHelp&) {
        result.human = app.help();
        result.json = {{"status", "ok"}, {"help", result.human}};
        return result;
    } catch (const CLI::ParseError& e) {
        result.status = Status::UsageError;
        result.exit_code = 1;
        result.human = std::string("usage error: ") + e.what() + "\n" + grammar();
        result.json = {{"status", "error"}, {"error", {{"kind", "UsageError"}, {"message", e.what()}}}, {"grammar", grammar()}};
        return result;
    }

    std::string operation;
    try {
        Output out;
        const Field field = Field::parse(field_text);
        if (classify->parsed()) {
            operation = "gw classify";
            out = gw_classify(form_a, field);
        } else if (isometric->parsed()) {
            operation = "gw isometric";
            out = gw_isometric(form_a, form_b, field);
        } else if (residue->parsed()) {
            operation = "gw residue";
            try {
                (void)mpz_class(prime);
            } catch (const std::invalid_argument&) {
                throw Error(ErrorKind::ParseError, "not an integer: " + prime);
            }
            out = gw_residue(form_a, prime);
        } else if (invert->parsed()) {
            operation = "gw invert";
            out = gw_invert(gwclass_text);
        } else if (deg->parsed()) {
            operation = "degree";
            out = degree(map_name, num, den);
        } else if (tf->parsed()) {
            operation = "traceform";
            out = traceform(p, tp, bs, w2);
        } else if (cc->parsed()) {
            operation = "charclass " + which;
            out = charclass(which, bundle, gw_coeffs, field);
        } else if (ln->parsed()) {
            operation = "lines";
            out = lines(d, quadratic);
        } else if (ec->parsed()) {
            operation = "euler-cellular";
            out = euler_cellular(space);
        }
        json inputs = json::array();
        for (const auto& a : args)
            if (a != "--json") inputs.push_back(a);
        result.human = out.human;
        result.json = {{"status", "ok"},
                       {"operation", operation},
                       {"inputs", inputs},
                       {"result", out.result},
                       {"human", out.human},
                       {"provenance", "computed"}};
    } catch (const Error& e) {
        result.status = Status::DomainError;
        result.exit_code = 2;
        const std::string name(e.name());
        result.human = "error: " + name + ": " + e.what();
        result.json = {{"status", "error"}, {"operation", operation}, {"error", {{"kind", name}, {"message", e.what()}}}};
    }
    return result;
}

}  // namespace gwcalc::cli
