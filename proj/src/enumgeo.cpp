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

#include "gwcalc/enumgeo.hpp"

#include "gwcalc/charclass.hpp"
#include "gwcalc/error.hpp"

namespace gwcalc {

SymPoly2::SymPoly2(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw Error(ErrorKind::InvalidArgument, "empty coefficient list");
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != c_[c_.size() - 1 - k]) throw Error(ErrorKind::NotSymmetric, "polynomial is not symmetric in x, y");
}

SymPoly2 SymPoly2::weight_product(unsigned n) {
    std::vector<mpz_class> acc{1};
    for (unsigned i = 0; i <= n; ++i) {
        std::vector<mpz_class> next(acc.size() + 1, mpz_class(0));
        for (std::size_t k = 0; k < acc.size(); ++k) {
            next[k] += acc[k] * (n - i);
            next[k + 1] += acc[k] * i;
        }
        acc = std::move(next);
    }
    return SymPoly2(std::move(acc));
}

SymPoly2 SymPoly2::sigma1_power(unsigned k) {
    std::vector<mpz_class> c(k + 1);
    for (unsigned i = 0; i <= k; ++i) mpz_bin_uiui(c[i].get_mpz_t(), k, i);
    return SymPoly2(std::move(c));
}

SymPoly2 SymPoly2::operator+(const SymPoly2& o) const {
    if (degree() != o.degree()) throw Error(ErrorKind::WrongDegree, "sum of polynomials of different degree");
    std::vector<mpz_class> c(c_);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += o.c_[k];
    return SymPoly2(std::move(c), Unchecked{});
}

SymPoly2 SymPoly2::operator*(const SymPoly2& o) const {
    std::vector<mpz_class> c(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return SymPoly2(std::move(c), Unchecked{});
}

SymPoly2 SymPoly2::operator*(const mpz_class& s) const {
    std::vector<mpz_class> c(c_);
    for (auto& a : c) a *= s;
    return SymPoly2(std::move(c), Unchecked{});
}

std::string SymPoly2::to_string() const {
    const unsigned d = degree();
    std::string out;
    for (unsigned k = 0; k <= d; ++k) {
        const mpz_class& a = c_[k];
        if (a == 0) continue;
        const bool neg = a < 0;
        const mpz_class mag = abs(a);
        std::string mono;
        auto power = [](const char* v, unsigned e) {
            return e == 0 ? std::string() : e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e);
        };
        const std::string px = power("x", d - k), py = power("y", k);
        mono = px.empty() ? py : py.empty() ? px : px + "*" + py;
        std::string term = mono.empty() ? mag.get_str() : (mag == 1 ? mono : mag.get_str() + "*" + mono);
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

mpz_class integrate_gr2(unsigned d, const SymPoly2& p) {
    if (p.degree() != 2 * d)
        throw Error(ErrorKind::WrongDegree, "expected degree " + std::to_string(2 * d) + " on Gr(2," +
                                                std::to_string(d + 2) + "), got " + std::to_string(p.degree()));
    // Coefficient of x^{d+1} y^d in (x - y) P.
    const auto& c = p.coefficients();
    return d == 0 ? c[0] : mpz_class(c[d] - c[d - 1]);
}

mpz_class lines_count(unsigned d) {
    if (d < 2) throw Error(ErrorKind::InvalidArgument, "lines_count needs d >= 2");
    return integrate_gr2(d, SymPoly2::weight_product(2 * d - 1));
}

GWClass quadratic_lines_class(unsigned d) {
    const mpz_class n = lines_count(d);
    const mpz_class df = double_factorial(2 * d - 1);
    const mpz_class excess = n - df;
    if (excess % 2 != 0) throw Error(ErrorKind::ParityViolation, "N_d - (2d-1)!! is odd for d = " + std::to_string(d));
    const mpz_class k = excess / 2;
    if (!df.fits_ulong_p() || !k.fits_ulong_p()) throw Error(ErrorKind::Overflow, "line count too large");
    const Field q = Field::rationals();
    return GWClass(QForm::repeated(q, 1, df.get_ui() + k.get_ui()) + QForm::repeated(q, -1, k.get_ui()));
}

CellularSpace CellularSpace::projective(unsigned n) {
    CellularSpace x;
    x.kind = Kind::ProjectiveSpace;
    x.name = "P" + std::to_string(n);
    x.n = n;
    return x;
}

CellularSpace CellularSpace::grassmannian2(unsigned n) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "Gr(2,n) needs n >= 2");
    CellularSpace x;
    x.kind = Kind::Grassmannian;
    x.name = "Gr2," + std::to_string(n);
    x.n = n;
    return x;
}

CellularSpace CellularSpace::product(std::vector<CellularSpace> parts, std::string name) {
    CellularSpace x;
    x.kind = Kind::Product;
    if (name.empty()) {
        for (const auto& p : parts) name += (name.empty() ? "" : " x ") + p.name;
        if (name.empty()) name = "pt";
    }
    x.name = std::move(name);
    x.factors = std::move(parts);
    return x;
}

CellularSpace CellularSpace::explicit_cells(std::vector<unsigned> dims) {
    CellularSpace x;
    x.kind = Kind::ExplicitCells;
    x.name = "cells";
    x.cells = std::move(dims);
    return x;
}

CellularSpace CellularSpace::flag(unsigned m) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "Fl_m needs m >= 1");
    std::vector<CellularSpace> parts;
    for (unsigned j = 1; j <= m; ++j) parts.push_back(grassmannian2(2 * j));
    return product(std::move(parts), "Fl" + std::to_string(m));
}

std::vector<std::uint64_t> CellularSpace::cell_counts() const {
    switch (kind) {
        case Kind::ProjectiveSpace: return std::vector<std::uint64_t>(n + 1, 1);
        case Kind::Grassmannian: {
            std::vector<std::uint64_t> c(2 * (n - 2) + 1, 0);
            for (unsigned a = 0; a + 2 <= n; ++a)
                for (unsigned b = 0; b <= a; ++b) ++c[a + b];
            return c;
        }
        case Kind::Product: {
            std::vector<std::uint64_t> acc{1};
            for (const auto& f : factors) {
                const auto c = f.cell_counts();
                std::vector<std::uint64_t> next(acc.size() + c.size() - 1, 0);
                for (std::size_t i = 0; i < acc.size(); ++i)
                    for (std::size_t j = 0; j < c.size(); ++j) next[i + j] += acc[i] * c[j];
                acc = std::move(next);
            }
            return acc;
        }
        case Kind::ExplicitCells: {
            std::vector<std::uint64_t> c;
            for (unsigned d : cells) {
                if (d >= c.size()) c.resize(d + 1, 0);
                ++c[d];
            }
            return c;
        }
    }
    return {};
}

GWClass cellular_euler(const CellularSpace& x, const Field& field) {
    std::uint64_t even = 0, odd = 0;
    const auto counts = x.cell_counts();
    for (std::size_t d = 0; d < counts.size(); ++d) (d % 2 ? odd : even) += counts[d];
    return GWClass(QForm::repeated(field, 1, even) + QForm::repeated(field, canonical_entry(field, -1), odd));
}

std::int64_t real_euler(const CellularSpace& x) {
    std::int64_t s = 0;
    const auto counts = x.cell_counts();
    for (std::size_t d = 0; d < counts.size(); ++d) s += (d % 2 ? -1 : 1) * static_cast<std::int64_t>(counts[d]);
    return s;
}

mpz_class flag_chi_top(unsigned m) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "Fl_m needs m >= 1");
    mpz_class chi = 1;
    for (unsigned j = 2; j <= m; ++j) chi *= real_euler(CellularSpace::grassmannian2(2 * j));
    return chi;
}

GWClass chi_NT_GL2(const Field& field) {
    const GWClass minus_one = GWClass::unit(field, -1);
    return cellular_euler(CellularSpace::projective(2), field) -
           minus_one * cellular_euler(CellularSpace::projective(1), field);
}

}  // namespace gwcalc
