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

#include "gwcalc/charclass.hpp"

#include <algorithm>
#include <sstream>

#include "gwcalc/error.hpp"
#include "gwcalc/witt.hpp"

namespace gwcalc {

WittPoly::WittPoly(Field field, CoefficientRing ring) : field_(field), ring_(ring) {}

WittPoly WittPoly::constant(const GWClass& c, CoefficientRing ring) {
    WittPoly p(c.field(), ring);
    p.add_term({}, c);
    return p;
}

WittPoly WittPoly::integer(std::int64_t n, Field field, CoefficientRing ring) {
    return constant(GWClass::scalar(field, n), ring);
}

WittPoly WittPoly::generator(const std::string& name, Field field, CoefficientRing ring) {
    WittPoly p(field, ring);
    p.gens_ = {name};
    p.add_term({1}, GWClass::scalar(field, 1));
    return p;
}

GWClass WittPoly::normalize(const GWClass& c) const {
    if (ring_ == CoefficientRing::Witt) return GWClass(anisotropic_part(c.witt_form()));
    return canonical(c);
}

void WittPoly::add_term(Monomial mono, const GWClass& c) {
    require_same_field(field_, c.field());
    mono.resize(gens_.size(), 0);
    auto it = terms_.find(mono);
    GWClass sum = normalize(it == terms_.end() ? c : it->second + c);
    if (sum.is_zero_representation()) {
        if (it != terms_.end()) terms_.erase(it);
    } else if (it == terms_.end()) {
        terms_.emplace(std::move(mono), std::move(sum));
    } else {
        it->second = std::move(sum);
    }
}

std::vector<std::string> WittPoly::merged(const WittPoly& a, const WittPoly& b) {
    std::vector<std::string> g = a.gens_;
    for (const auto& n : b.gens_)
        if (std::find(g.begin(), g.end(), n) == g.end()) g.push_back(n);
    return g;
}

WittPoly WittPoly::aligned(const std::vector<std::string>& gens) const {
    WittPoly out(field_, ring_);
    out.gens_ = gens;
    for (const auto& [mono, c] : terms_) {
        Monomial m(gens.size(), 0);
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            const auto pos = std::find(gens.begin(), gens.end(), gens_[i]) - gens.begin();
            m[static_cast<std::size_t>(pos)] = mono[i];
        }
        out.terms_.emplace(std::move(m), c);
    }
    return out;
}

GWClass WittPoly::coefficient(const std::map<std::string, unsigned>& exponents) const {
    Monomial m(gens_.size(), 0);
    for (const auto& [name, e] : exponents) {
        const auto it = std::find(gens_.begin(), gens_.end(), name);
        if (it == gens_.end()) {
            if (e != 0) return GWClass(field_);
            continue;
        }
        m[static_cast<std::size_t>(it - gens_.begin())] = e;
    }
    const auto it = terms_.find(m);
    return it == terms_.end() ? GWClass(field_) : it->second;
}

WittPoly WittPoly::graded_part(unsigned deg) const {
    WittPoly out(field_, ring_);
    out.gens_ = gens_;
    for (const auto& [mono, c] : terms_) {
        unsigned d = 0;
        for (unsigned e : mono) d += 2 * e;
        if (d == deg) out.terms_.emplace(mono, c);
    }
    return out;
}

WittPoly WittPoly::substitute(const std::string& name, const WittPoly& value) const {
    const auto it = std::find(gens_.begin(), gens_.end(), name);
    if (it == gens_.end()) return *this;
    const auto idx = static_cast<std::size_t>(it - gens_.begin());
    WittPoly out(field_, ring_);
    for (const auto& [mono, c] : terms_) {
        WittPoly rest(field_, ring_);
        rest.gens_ = gens_;
        Monomial m = mono;
        m[idx] = 0;
        rest.terms_.emplace(std::move(m), c);
        out = out + rest * value.pow(mono[idx]);
    }
    return out;
}

WittPoly WittPoly::operator+(const WittPoly& o) const {
    if (ring_ != o.ring_) throw Error(ErrorKind::InvalidArgument, "mixed coefficient rings");
    const auto g = merged(*this, o);
    WittPoly out = aligned(g);
    for (const auto& [mono, c] : o.aligned(g).terms_) out.add_term(mono, c);
    return out;
}

WittPoly WittPoly::operator-() const {
    WittPoly out(field_, ring_);
    out.gens_ = gens_;
    for (const auto& [mono, c] : terms_) out.add_term(mono, -c);
    return out;
}

WittPoly WittPoly::operator-(const WittPoly& o) const { return *this + (-o); }

WittPoly WittPoly::operator*(const WittPoly& o) const {
    if (ring_ != o.ring_) throw Error(ErrorKind::InvalidArgument, "mixed coefficient rings");
    const auto g = merged(*this, o);
    const WittPoly a = aligned(g), b = o.aligned(g);
    WittPoly out(field_, ring_);
    out.gens_ = g;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(std::move(m), ca * cb);
        }
    return out;
}

WittPoly WittPoly::pow(unsigned k) const {
    WittPoly r = integer(1, field_, ring_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool operator==(const WittPoly& a, const WittPoly& b) {
    if (a.field_ != b.field_ || a.ring_ != b.ring_) return false;
    const auto g = WittPoly::merged(a, b);
    return a.aligned(g).terms_ == b.aligned(g).terms_;
}

std::string coefficient_string(const GWClass& c, CoefficientRing ring) {
    if (ring == CoefficientRing::Witt) {
        const WittClass w = witt_class(c);
        if (w.is_integer_multiple()) return std::to_string(w.signature);
    } else {
        const QForm one = QForm::repeated(c.field(), 1, static_cast<std::uint64_t>(std::abs(c.rank())));
        if (c.minus().empty() && c.plus() == one) return std::to_string(c.rank());
        if (c.plus().empty() && c.minus() == one) return std::to_string(c.rank());
    }
    return "(" + c.to_string() + ")";
}

std::string WittPoly::to_string() const {
    if (terms_.empty()) return "0";
    // Lowest total degree first, then by reversed exponent order for a stable layout.
    std::vector<std::pair<Monomial, GWClass>> sorted(terms_.begin(), terms_.end());
    auto total = [](const Monomial& m) {
        unsigned s = 0;
        for (unsigned e : m) s += e;
        return s;
    };
    std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) {
        if (total(x.first) != total(y.first)) return total(x.first) < total(y.first);
        return x.first > y.first;
    });
    std::string out;
    for (const auto& [mono, c] : sorted) {
        std::string coeff = coefficient_string(c, ring_);
        bool negative = !coeff.empty() && coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        std::string vars;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += gens_[i];
            if (mono[i] > 1) vars += "^" + std::to_string(mono[i]);
        }
        std::string term;
        if (vars.empty())
            term = coeff;
        else if (coeff == "1")
            term = vars;
        else
            term = coeff + "*" + vars;
        if (out.empty())
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out;
}

BundleExpr BundleExpr::gen(unsigned i) {
    if (i < 1) throw Error(ErrorKind::InvalidArgument, "generator indices start at 1");
    BundleExpr e;
    e.kind = Kind::Gen;
    e.index = i;
    return e;
}

BundleExpr BundleExpr::sum(std::vector<BundleExpr> parts) {
    if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "empty direct sum");
    BundleExpr e;
    e.kind = Kind::Sum;
    e.children = std::move(parts);
    return e;
}

BundleExpr BundleExpr::tensor(BundleExpr a, BundleExpr b) {
    BundleExpr e;
    e.kind = Kind::Tensor;
    e.children = {std::move(a), std::move(b)};
    return e;
}

BundleExpr BundleExpr::sym(unsigned m, BundleExpr a) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "Sym power must be at least 1");
    BundleExpr e;
    e.kind = Kind::Sym;
    e.index = m;
    e.children = {std::move(a)};
    return e;
}

BundleExpr BundleExpr::twist(int sign, BundleExpr a) {
    if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "twist sign must be +1 or -1");
    BundleExpr e;
    e.kind = Kind::DetTwist;
    e.sign = sign;
    e.children = {std::move(a)};
    return e;
}

unsigned BundleExpr::rank() const {
    switch (kind) {
        case Kind::Gen: return 2;
        case Kind::Sum: {
            unsigned r = 0;
            for (const auto& c : children) r += c.rank();
            return r;
        }
        case Kind::Tensor: return children[0].rank() * children[1].rank();
        case Kind::Sym: {
            // rank Sym^m V = C(m + r - 1, m)
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), index + children[0].rank() - 1, index);
            return static_cast<unsigned>(b.get_ui());
        }
        case Kind::DetTwist: return children[0].rank();
    }
    return 0;
}

std::string BundleExpr::to_string() const {
    switch (kind) {
        case Kind::Gen: return "E" + std::to_string(index);
        case Kind::Sum: {
            std::string s;
            for (const auto& c : children) {
                if (!s.empty()) s += " (+) ";
                s += c.kind == Kind::Sum ? "(" + c.to_string() + ")" : c.to_string();
            }
            return s;
        }
        case Kind::Tensor: {
            auto part = [](const BundleExpr& c) {
                return c.kind == Kind::Sum || c.kind == Kind::Tensor ? "(" + c.to_string() + ")" : c.to_string();
            };
            return part(children[0]) + " (x) " + part(children[1]);
        }
        case Kind::Sym: return "Sym(" + std::to_string(index) + "," + children[0].to_string() + ")";
        case Kind::DetTwist: return std::string("det") + (sign > 0 ? "+" : "-") + "(" + children[0].to_string() + ")";
    }
    return {};
}

OtildeClass euler_Otilde(unsigned m, int sign, const Field& field) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "weight must be at least 1");
    if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
    if (field.is_finite() && m % field.characteristic() == 0)
        throw Error(ErrorKind::CharacteristicConstraint,
                    "characteristic " + std::to_string(field.characteristic()) + " divides " + std::to_string(m));
    OtildeClass out;
    out.weight = m;
    out.sign = sign;
    const auto mm = static_cast<std::int64_t>(m);
    if (m % 2 == 1) {
        out.coefficient = (m % 4 == 1 ? 1 : -1) * mm;
        out.generator = BNGenerator::PullbackE;
    } else {
        out.coefficient = (m % 4 == 2 ? 1 : -1) * mm / 2;
        out.generator = BNGenerator::ETilde;
    }
    out.coefficient *= sign;
    return out;
}

WittPoly OtildeClass::as_poly(Field field, CoefficientRing ring) const {
    return WittPoly::integer(coefficient, field, ring) *
           WittPoly::generator(generator == BNGenerator::PullbackE ? "pe" : "et", field, ring);
}

WittPoly bn_reduce(const WittPoly& x) {
    const Field f = x.field();
    const auto ring = x.ring();
    const WittPoly et_squared = WittPoly::integer(4, f, ring) * WittPoly::generator("pe", f, ring).pow(2);
    WittPoly out(f, ring);
    const auto& gens = x.generators();
    for (const auto& [mono, c] : x.terms()) {
        WittPoly term = WittPoly::constant(c, ring);
        for (std::size_t i = 0; i < mono.size(); ++i) {
            const WittPoly g = WittPoly::generator(gens[i], f, ring);
            if (gens[i] == "et")
                term = term * et_squared.pow(mono[i] / 2) * g.pow(mono[i] % 2);
            else
                term = term * g.pow(mono[i]);
        }
        out = out + term;
    }
    return out;
}

std::vector<std::pair<unsigned, int>> decompose_sym_N(unsigned m) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be at least 1");
    const unsigned r = m / 2;
    std::vector<std::pair<unsigned, int>> out;
    const unsigned top = m % 2 ? r : r - 1;
    for (unsigned i = 0; i <= top && m >= 2 * i; ++i) out.emplace_back(m - 2 * i, i % 2 ? -1 : 1);
    if (m % 2 == 0) out.emplace_back(0, r % 2 ? -1 : 1);
    return out;
}

mpz_class double_factorial(unsigned m) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "double factorial needs m >= 1");
    mpz_class r = 1;
    for (long k = m; k > 0; k -= 2) r *= k;
    return r;
}

namespace {

void check_characteristic(unsigned m, const Field& f) {
    if (m % 2 == 1 && f.is_finite() && m % f.characteristic() == 0)
        throw Error(ErrorKind::CharacteristicConstraint, "Sym^" + std::to_string(m) + " needs a characteristic prime to " +
                                                             std::to_string(2 * m));
}

const BundleExpr& rank_two_child(const BundleExpr& e, ErrorKind kind, const char* what) {
    for (const auto& c : e.children)
        if (c.kind != BundleExpr::Kind::Gen)
            throw Error(kind, std::string(what) + " is only supported on rank-2 generators: " + e.to_string());
    return e.children[0];
}

std::string gen_name(const BundleExpr& g) { return "e" + std::to_string(g.index); }

}  // namespace

WittPoly euler(const BundleExpr& expr, const EvalOptions& opts) {
    const Field& f = opts.field;
    const auto ring = opts.ring;
    using K = BundleExpr::Kind;
    switch (expr.kind) {
        case K::Gen: return WittPoly::generator(gen_name(expr), f, ring);
        case K::Sum: {
            WittPoly r = WittPoly::integer(1, f, ring);
            for (const auto& c : expr.children) r = r * euler(c, opts);
            return r;
        }
        case K::Tensor: {
            rank_two_child(expr, ErrorKind::UnsupportedTensor, "tensor product");
            const auto a = WittPoly::generator(gen_name(expr.children[0]), f, ring);
            const auto b = WittPoly::generator(gen_name(expr.children[1]), f, ring);
            return a.pow(2) - b.pow(2);
        }
        case K::Sym: {
            const auto& g = rank_two_child(expr, ErrorKind::UnsupportedSym, "Sym");
            const unsigned m = expr.index;
            check_characteristic(m, f);
            if (m % 2 == 0) return WittPoly(f, ring);
            const mpz_class df = double_factorial(m);
            if (!df.fits_slong_p()) throw Error(ErrorKind::Overflow, "double factorial too large");
            return WittPoly::integer(df.get_si(), f, ring) * WittPoly::generator(gen_name(g), f, ring).pow((m + 1) / 2);
        }
        case K::DetTwist: {
            WittPoly e = euler(expr.children[0], opts);
            return expr.sign < 0 ? -e : e;
        }
    }
    return WittPoly(f, ring);
}

WittPoly pontryagin_total(const BundleExpr& expr, const EvalOptions& opts) {
    const Field& f = opts.field;
    const auto ring = opts.ring;
    const WittPoly one = WittPoly::integer(1, f, ring);
    using K = BundleExpr::Kind;
    switch (expr.kind) {
        case K::Gen: return one + WittPoly::generator(gen_name(expr), f, ring).pow(2);
        case K::Sum: {
            WittPoly r = one;
            for (const auto& c : expr.children) r = r * pontryagin_total(c, opts);
            return r;
        }
        case K::Tensor: {
            rank_two_child(expr, ErrorKind::UnsupportedTensor, "tensor product");
            const auto a2 = WittPoly::generator(gen_name(expr.children[0]), f, ring).pow(2);
            const auto b2 = WittPoly::generator(gen_name(expr.children[1]), f, ring).pow(2);
            return one + WittPoly::integer(2, f, ring) * (a2 + b2) + (a2 - b2).pow(2);
        }
        case K::Sym: {
            const auto& g = rank_two_child(expr, ErrorKind::UnsupportedSym, "Sym");
            const unsigned m = expr.index;
            check_characteristic(m, f);
            const auto e2 = WittPoly::generator(gen_name(g), f, ring).pow(2);
            WittPoly r = one;
            for (unsigned i = 0; 2 * i <= m; ++i) {
                const auto w = static_cast<std::int64_t>(m - 2 * i);
                r = r * (one + WittPoly::integer(w * w, f, ring) * e2);
            }
            return r;
        }
        case K::DetTwist: return pontryagin_total(expr.children[0], opts);
    }
    return one;
}

std::vector<unsigned> clebsch_gordan(unsigned a, unsigned b) {
    std::vector<unsigned> out;
    for (unsigned i = 0; i <= std::min(a, b); ++i) out.push_back(a + b - 2 * i);

    // SL2 characters as Laurent polynomials in t.
    using Character = std::map<long, long>;
    auto chi = [](unsigned n) {
        Character c;
        for (long k = -static_cast<long>(n); k <= static_cast<long>(n); k += 2) c[k] += 1;
        return c;
    };
    Character lhs, rhs;
    for (const auto& [x, cx] : chi(a))
        for (const auto& [y, cy] : chi(b)) lhs[x + y] += cx * cy;
    for (unsigned n : out)
        for (const auto& [x, cx] : chi(n)) rhs[x] += cx;
    if (lhs != rhs) throw Error(ErrorKind::VerificationFailed, "character mismatch in Clebsch-Gordan decomposition");
    return out;
}

bool check_sym_consistency(unsigned m) {
    if (m % 2 == 0) throw Error(ErrorKind::InvalidArgument, "check_sym_consistency needs odd m");
    mpz_class product = 1;
    for (const auto& [w, s] : decompose_sym_N(m)) {
        const OtildeClass c = euler_Otilde(w, s);
        if (c.generator != BNGenerator::PullbackE) return false;
        product *= c.coefficient;
    }
    return product == double_factorial(m);
}

}  // namespace gwcalc
