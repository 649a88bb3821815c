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

#ifndef GWCALC_POLYNOMIAL_HPP
#define GWCALC_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gwcalc/error.hpp"

namespace gwcalc {

/// Dense univariate polynomial, coefficients lowest degree first, with no
/// trailing zeros (the zero polynomial has no coefficients). T is mpz_class
/// or mpq_class.
template <class T>
class Polynomial {
   public:
    Polynomial() = default;
    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(const T& a, std::size_t k) {
        std::vector<T> c(k + 1, T(0));
        c[k] = a;
        return Polynomial(std::move(c));
    }

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<T>& coefficients() const noexcept { return c_; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& leading() const { return c_.back(); }

    T operator()(const T& x) const {
        T acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = T(acc * x + *it);
        return acc;
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<T> c(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
        return Polynomial(std::move(c));
    }
    Polynomial operator-() const {
        std::vector<T> c(c_);
        for (auto& a : c) a = -a;
        return Polynomial(std::move(c));
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<T> c(c_.size() + o.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
        return Polynomial(std::move(c));
    }
    Polynomial operator*(const T& s) const {
        std::vector<T> c(c_);
        for (auto& a : c) a *= s;
        return Polynomial(std::move(c));
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(unsigned k) const {
        Polynomial r{T(1)};
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * T(static_cast<long>(i));
        return Polynomial(std::move(c));
    }

    /// Quotient and remainder. Over Z the division must be exact at every
    /// step (e.g. a monic divisor), otherwise InvalidArgument is thrown.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
        std::vector<T> r(c_);
        std::vector<T> q(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, T(0));
        for (long k = static_cast<long>(r.size()) - static_cast<long>(d.c_.size()); k >= 0; --k) {
            const T& top = r[static_cast<std::size_t>(k) + d.c_.size() - 1];
            if (top == 0) continue;
            T f;
            if constexpr (std::is_same_v<T, mpz_class>) {
                if (top % d.leading() != 0) throw Error(ErrorKind::InvalidArgument, "inexact integer division");
                f = top / d.leading();
            } else {
                f = top / d.leading();
            }
            q[static_cast<std::size_t>(k)] = f;
            for (std::size_t j = 0; j < d.c_.size(); ++j) r[static_cast<std::size_t>(k) + j] -= f * d.c_[j];
        }
        return {Polynomial(std::move(q)), Polynomial(std::move(r))};
    }

    /// "3*t^2 - 1".
    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            const T& a = c_[static_cast<std::size_t>(i)];
            if (a == 0) continue;
            const bool neg = a < 0;
            const T mag = neg ? T(-a) : a;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            const bool unit = mag == 1;
            if (i == 0 || !unit) out += mag.get_str();
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<T> c_;
};

using ZPoly = Polynomial<mpz_class>;
using QPoly = Polynomial<mpq_class>;

inline QPoly to_rational(const ZPoly& p) {
    std::vector<mpq_class> c;
    for (const auto& a : p.coefficients()) c.emplace_back(a);
    return QPoly(std::move(c));
}

/// Monic gcd over Q.
inline QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * mpq_class(1 / a.leading());
}

}  // namespace gwcalc

#endif
