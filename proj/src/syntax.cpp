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

#include "gwcalc/syntax.hpp"

#include <cctype>

#include "gwcalc/arith.hpp"
#include "gwcalc/error.hpp"

namespace gwcalc {
namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

unsigned parse_unsigned(const std::string& s, const std::string& context) {
    if (!all_digits(s) || s.size() > 9) throw Error(ErrorKind::ParseError, "expected a small nonnegative integer in " + context);
    return static_cast<unsigned>(std::stoul(s));
}

class BundleParser {
   public:
    explicit BundleParser(std::string text) : s_(std::move(text)) {}

    BundleExpr parse() {
        BundleExpr e = sum();
        if (pos_ != s_.size()) fail("unexpected input");
        return e;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) + " in bundle expression");
    }
    bool take(const std::string& tok) {
        if (s_.compare(pos_, tok.size(), tok) != 0) return false;
        pos_ += tok.size();
        return true;
    }
    void expect(const std::string& tok) {
        if (!take(tok)) fail("expected '" + tok + "'");
    }
    unsigned number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return parse_unsigned(s_.substr(start, pos_ - start), "bundle expression");
    }

    BundleExpr sum() {
        std::vector<BundleExpr> parts{product()};
        while (take("(+)")) parts.push_back(product());
        return parts.size() == 1 ? std::move(parts[0]) : BundleExpr::sum(std::move(parts));
    }
    BundleExpr product() {
        BundleExpr e = atom();
        while (take("(x)")) e = BundleExpr::tensor(std::move(e), atom());
        return e;
    }
    BundleExpr atom() {
        if (take("E")) return BundleExpr::gen(number());
        if (take("Sym(")) {
            const unsigned m = number();
            expect(",");
            BundleExpr inner = sum();
            expect(")");
            return BundleExpr::sym(m, std::move(inner));
        }
        if (take("det+(") || take("det-(")) {
            const int sign = s_[pos_ - 2] == '+' ? 1 : -1;
            BundleExpr inner = sum();
            expect(")");
            return BundleExpr::twist(sign, std::move(inner));
        }
        if (take("(")) {
            BundleExpr inner = sum();
            expect(")");
            return inner;
        }
        fail("expected E<i>, Sym(m,...), det+/-(...) or a parenthesis");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

mpq_class parse_rational(const std::string& text) {
    const std::string s = strip(text);
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    const auto slash = s.find('/', i);
    const std::string num = s.substr(i, slash == std::string::npos ? std::string::npos : slash - i);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw Error(ErrorKind::ParseError, "not a rational number: '" + text + "'");
    mpq_class q;
    q.get_num() = mpz_class(num);
    q.get_den() = mpz_class(den);
    if (q.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
}

QForm parse_form(const std::string& text, const Field& field) {
    const std::string s = strip(text);
    if (s.size() < 2 || s.front() != '<' || s.back() != '>')
        throw Error(ErrorKind::ParseError, "forms are written <a1,...,an>, got '" + text + "'");
    const std::string body = s.substr(1, s.size() - 2);
    std::vector<mpq_class> entries;
    if (!body.empty()) {
        std::size_t start = 0;
        while (true) {
            const auto comma = body.find(',', start);
            const mpq_class a = parse_rational(body.substr(start, comma - start));
            if (a == 0) throw Error(ErrorKind::DegenerateForm, "zero entry in '" + text + "'");
            if (field.is_finite() && arith::mod(a.get_num(), field.characteristic()) * arith::mod(a.get_den(), field.characteristic()) == 0)
                throw Error(ErrorKind::DegenerateForm, "entry vanishes in " + field.name());
            entries.push_back(a);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return QForm(field, entries);
}

GWClass parse_gwclass(const std::string& text, const Field& field) {
    const std::string s = strip(text);
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty class");
    if (s == "0") return GWClass(field);
    GWClass out(field);
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw Error(ErrorKind::ParseError, "expected + or - between terms in '" + text + "'");
        }
        first = false;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        const std::int64_t mult = j > i ? static_cast<std::int64_t>(parse_unsigned(s.substr(i, j - i), "multiplier")) : 1;
        if (j < s.size() && s[j] == '*') ++j;
        if (j >= s.size() || s[j] != '<') throw Error(ErrorKind::ParseError, "expected '<' in '" + text + "'");
        const auto close = s.find('>', j);
        if (close == std::string::npos) throw Error(ErrorKind::ParseError, "unterminated form in '" + text + "'");
        const GWClass term(parse_form(s.substr(j, close - j + 1), field));
        const GWClass scaled = GWClass::scalar(field, sign * mult) * term;
        out = out + scaled;
        i = close + 1;
    }
    return out;
}

QPoly parse_coefficients(const std::string& text) {
    std::string s = strip(text);
    if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty coefficient list");
    std::vector<mpq_class> c;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        c.push_back(parse_rational(s.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return QPoly(std::move(c));
}

std::vector<std::string> coefficient_strings(const QPoly& p) {
    std::vector<std::string> out;
    for (const auto& a : p.coefficients()) out.push_back(a.get_str());
    if (out.empty()) out.push_back("0");
    return out;
}

BundleExpr parse_bundle(const std::string& text) { return BundleParser(strip(text)).parse(); }

std::pair<unsigned, int> parse_map_name(const std::string& text) {
    const std::string s = strip(text);
    if (s.size() < 3 || s[0] != 'G' || (s.back() != '+' && s.back() != '-'))
        throw Error(ErrorKind::ParseError, "maps are named G<m>+ or G<m>-, got '" + text + "'");
    const unsigned m = parse_unsigned(s.substr(1, s.size() - 2), "map name");
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "G_m needs m >= 1");
    return {m, s.back() == '+' ? 1 : -1};
}

CellularSpace parse_space(const std::string& text) {
    const std::string s = strip(text);
    if (s.rfind("Gr2,", 0) == 0) return CellularSpace::grassmannian2(parse_unsigned(s.substr(4), "Gr2,<n>"));
    if (s.rfind("Fl", 0) == 0) return CellularSpace::flag(parse_unsigned(s.substr(2), "Fl<m>"));
    if (s.rfind("P", 0) == 0) return CellularSpace::projective(parse_unsigned(s.substr(1), "P<n>"));
    throw Error(ErrorKind::ParseError, "spaces are P<n>, Gr2,<n> or Fl<m>, got '" + text + "'");
}

}  // namespace gwcalc
