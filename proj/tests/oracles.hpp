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

// Reference implementations used to cross-check the library. Each one takes
// a different route from the code it checks (brute force, localization,
// companion matrices, floating point roots).
#ifndef GWCALC_TESTS_ORACLES_HPP
#define GWCALC_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "gwcalc/polynomial.hpp"
#include "gwcalc/qform.hpp"

namespace oracle {

using gwcalc::QPoly;
using gwcalc::RationalMatrix;
using gwcalc::ZPoly;

/// (a,b)_p by searching for a primitive zero of a x^2 + b y^2 - z^2 mod p^k.
/// a, b squarefree integers; p in {2,3,5,7}.
inline int hilbert_bruteforce(long a, long b, long p) {
    const long k = p == 2 ? 6 : 3;
    long mod = 1;
    for (long i = 0; i < k; ++i) mod *= p;
    std::set<long> squares;
    for (long z = 0; z < mod; ++z) squares.insert(z * z % mod);
    auto norm = [&](long v) { return ((v % mod) + mod) % mod; };
    for (long x = 0; x < mod; ++x)
        for (long y = 0; y < mod; ++y) {
            if (x % p == 0 && y % p == 0) continue;
            const long v = norm(norm(a * x % mod * x) + norm(b * y % mod * y));
            if (squares.count(v)) return 1;
        }
    return -1;
}

/// (a,b) at infinity.
inline int hilbert_real(long a, long b) { return a < 0 && b < 0 ? -1 : 1; }

/// Bezoutian by dividing A(X)B(Y) - A(Y)B(X) by X - Y as a bivariate polynomial.
inline RationalMatrix bezout_bruteforce(const QPoly& a, const QPoly& b) {
    const auto n = static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1);
    // f[i][j] = coefficient of X^i Y^j
    std::vector<std::vector<mpq_class>> f(n, std::vector<mpq_class>(n, mpq_class(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) f[i][j] = a.coeff(i) * b.coeff(j) - a.coeff(j) * b.coeff(i);
    // Synthetic division in X over Q[Y]: f = (X - Y) q.
    const std::size_t m = n - 1;
    RationalMatrix q(m, std::vector<mpq_class>(m, mpq_class(0)));
    std::vector<mpq_class> carry(n + 1, mpq_class(0));  // polynomial in Y
    for (std::size_t i = n; i-- > 1;) {
        std::vector<mpq_class> row(n + 1, mpq_class(0));
        for (std::size_t j = 0; j < n; ++j) row[j] = f[i][j];
        for (std::size_t j = 0; j + 1 <= n; ++j) row[j + 1] += carry[j];
        // q_{i-1}(Y) = row; carry for next step is Y * q_{i-1}
        for (std::size_t j = 0; j < m; ++j) q[i - 1][j] = row[j];
        carry = row;
    }
    return q;
}

/// Power sums of the roots of a monic f as traces of powers of its companion matrix.
inline std::vector<mpz_class> power_sums_companion(const ZPoly& f, std::size_t count) {
    const auto n = static_cast<std::size_t>(f.degree());
    using Mat = std::vector<std::vector<mpz_class>>;
    Mat c(n, std::vector<mpz_class>(n, mpz_class(0)));
    for (std::size_t i = 1; i < n; ++i) c[i][i - 1] = 1;
    for (std::size_t i = 0; i < n; ++i) c[i][n - 1] = -f.coeff(i);
    Mat power(n, std::vector<mpz_class>(n, mpz_class(0)));
    for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
    std::vector<mpz_class> out;
    for (std::size_t k = 0; k < count; ++k) {
        mpz_class t = 0;
        for (std::size_t i = 0; i < n; ++i) t += power[i][i];
        out.push_back(t);
        Mat next(n, std::vector<mpz_class>(n, mpz_class(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t j = 0; j < n; ++j) next[i][j] += power[i][l] * c[l][j];
        power = std::move(next);
    }
    return out;
}

inline unsigned euler_phi(unsigned n) {
    unsigned c = 0;
    for (unsigned k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++c;
    return c;
}

/// Coefficients of prod (y - 2 cos(2 pi k / n)) over 0 < k < n/2, gcd(k,n) = 1, rounded.
inline std::vector<long> real_cyclotomic_numeric(unsigned n) {
    std::vector<long double> c{1.0L};
    const long double pi = std::acos(-1.0L);
    for (unsigned k = 1; 2 * k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        const long double r = 2 * std::cos(2 * pi * k / n);
        std::vector<long double> next(c.size() + 1, 0.0L);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    std::vector<long> out;
    for (auto x : c) out.push_back(std::lround(static_cast<double>(x)));
    return out;
}

/// Integral over Gr(2,n) of f(x, y) (x, y Chern roots of the dual tautological bundle)
/// by Atiyah-Bott localization at the torus fixed points.
template <class F>
mpq_class localize_gr2(unsigned n, F f) {
    std::vector<long> lambda;
    for (unsigned i = 0; i < n; ++i) lambda.push_back(static_cast<long>(i * i + 3 * i + 1));
    mpq_class total = 0;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            mpq_class denom = 1;
            for (unsigned k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                denom *= (lambda[k] - lambda[i]) * (lambda[k] - lambda[j]);
            }
            total += f(mpq_class(-lambda[i]), mpq_class(-lambda[j])) / denom;
        }
    return total;
}

inline mpz_class catalan(unsigned d) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * d, d);
    return b / (d + 1);
}

/// Rank of Gr(2,n) Chow groups in each degree by counting partitions directly.
inline std::vector<unsigned> schubert_cells(unsigned n) {
    std::vector<unsigned> c(2 * (n - 2) + 1, 0);
    for (unsigned a = 0; a <= n - 2; ++a)
        for (unsigned b = 0; b <= n - 2; ++b)
            if (b <= a) ++c[a + b];
    return c;
}

}  // namespace oracle

#endif
