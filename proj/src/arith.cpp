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

#include "gwcalc/arith.hpp"

#include <algorithm>

#include "gwcalc/error.hpp"

namespace gwcalc::arith {

namespace {

constexpr unsigned long kTrialLimit = 1000000;

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Brent's variant of Pollard rho. n is composite, odd and free of small factors.
mpz_class rho_split(const mpz_class& n) {
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        auto f = [&](const mpz_class& v) {
            mpz_class w = v * v + c;
            mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
            return w;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    mpz_class d = x - y;
                    q = q * abs(d);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(mpz_class(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_large(const mpz_class& n, std::vector<mpz_class>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    mpz_class root;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        factor_large(root, primes);
        factor_large(root, primes);
        return;
    }
    mpz_class d = rho_split(n);
    factor_large(d, primes);
    factor_large(mpz_class(n / d), primes);
}

}  // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Factorization factor(const mpz_class& n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "cannot factor zero");
    mpz_class m = abs(n);
    Factorization out;
    auto divide_out = [&](unsigned long p) {
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) return;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        out.emplace_back(mpz_class(p), e);
    };
    divide_out(2);
    for (unsigned long p = 3; p <= kTrialLimit && m > 1; p += 2) {
        if (mpz_class(p) * p > m) break;
        divide_out(p);
    }
    if (m == 1) return out;
    if (m <= mpz_class(kTrialLimit) * kTrialLimit) {
        out.emplace_back(m, 1);
        return out;
    }
    std::vector<mpz_class> primes;
    factor_large(m, primes);
    std::sort(primes.begin(), primes.end());
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<mpz_class> prime_divisors(const mpz_class& n) {
    std::vector<mpz_class> out;
    for (auto& [p, e] : factor(n)) out.push_back(p);
    return out;
}

mpz_class squarefree_part(const mpz_class& n) {
    mpz_class out = sgn(n) < 0 ? -1 : 1;
    for (const auto& [p, e] : factor(n))
        if (e % 2 == 1) out *= p;
    return out;
}

mpz_class square_class(const mpq_class& q) {
    if (q == 0) throw Error(ErrorKind::DegenerateForm, "zero has no square class");
    return squarefree_part(mpz_class(q.get_num() * q.get_den()));
}

unsigned valuation(const mpz_class& n, const mpz_class& p) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
    mpz_class m = n;
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    return e;
}

int legendre(const mpz_class& a, const mpz_class& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

std::uint64_t mod(const mpz_class& a, std::uint64_t m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mpz_class(static_cast<unsigned long>(m)).get_mpz_t());
    return r.get_ui();
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    unsigned __int128 result = 1, b = base % m;
    while (exp > 0) {
        if (exp & 1) result = result * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), mpz_class(static_cast<unsigned long>(a)).get_mpz_t(),
                   mpz_class(static_cast<unsigned long>(m)).get_mpz_t()) == 0)
        throw Error(ErrorKind::InvalidArgument, "element is not invertible");
    return inv.get_ui();
}

std::uint64_t smallest_nonresidue(std::uint64_t p) {
    for (std::uint64_t n = 2;; ++n)
        if (mod_pow(n, (p - 1) / 2, p) == p - 1) return n;
}

}  // namespace gwcalc::arith
