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

#include "gwcalc/traceform.hpp"

#include <map>

#include "gwcalc/arith.hpp"
#include "gwcalc/error.hpp"

namespace gwcalc {
namespace {

void require_odd_prime(unsigned p) {
    if (p < 3 || !arith::is_prime(mpz_class(p)))
        throw Error(ErrorKind::InvalidArgument, "expected an odd prime, got " + std::to_string(p));
}

ZPoly cyclotomic_memo(unsigned n, std::map<unsigned, ZPoly>& memo) {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    ZPoly num = ZPoly::monomial(1, n) - ZPoly{1};
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) num = num.divmod(cyclotomic_memo(d, memo)).first;
    memo.emplace(n, num);
    return num;
}

}  // namespace

ZPoly cyclotomic(unsigned n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
    std::map<unsigned, ZPoly> memo;
    return cyclotomic_memo(n, memo);
}

ZPoly real_cyclotomic_minpoly(unsigned n) {
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "real cyclotomic minpoly needs n >= 3");
    const ZPoly phi = cyclotomic(n);
    const auto k = static_cast<std::size_t>(phi.degree() / 2);
    // x^j + x^{-j} = D_j(y), D_j = y D_{j-1} - D_{j-2}.
    const ZPoly y{0, 1};
    ZPoly prev{2}, cur = y;
    ZPoly out{phi.coeff(k)};
    for (std::size_t j = 1; j <= k; ++j) {
        out += cur * phi.coeff(k + j);
        ZPoly next = y * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return out;
}

RationalMatrix trace_gram(const ZPoly& f) {
    if (f.degree() < 1 || f.leading() != 1) throw Error(ErrorKind::InvalidArgument, "expected a monic polynomial");
    const QPoly fq = to_rational(f);
    if (gcd(fq, fq.derivative()).degree() > 0)
        throw Error(ErrorKind::InseparablePolynomial, "polynomial is not separable: " + f.to_string("y"));

    const auto n = static_cast<std::size_t>(f.degree());
    auto a = [&](std::size_t i) { return f.coeff(i); };
    std::vector<mpz_class> p(2 * n - 1);
    p[0] = static_cast<unsigned long>(n);
    for (std::size_t k = 1; k < p.size(); ++k) {
        mpz_class s = 0;
        for (std::size_t i = 1; i <= std::min(k - 1, n); ++i) s += a(n - i) * p[k - i];
        if (k <= n) s += static_cast<unsigned long>(k) * a(n - k);
        p[k] = -s;
    }
    RationalMatrix g(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = p[i + j];
    return g;
}

QForm trace_form_Q4p(unsigned p) {
    require_odd_prime(p);
    return diagonalize(trace_gram(real_cyclotomic_minpoly(4 * p)));
}

bool verify_Tp(unsigned p) {
    const Field q = Field::rationals();
    const QForm t = QForm(q, {mpq_class(p)}) + trace_form_Q4p(p);
    return is_isometric(t, QForm::repeated(q, 1, p));
}

RationalMatrix a_lattice_gram(unsigned n) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "A_{n-1} needs n >= 2");
    RationalMatrix g(n - 1, std::vector<mpq_class>(n - 1, mpq_class(0)));
    for (unsigned i = 0; i + 1 < n; ++i) {
        g[i][i] = 2;
        if (i + 2 < n) g[i][i + 1] = g[i + 1][i] = -1;
    }
    return g;
}

bool verify_bayer_suarez(unsigned p) {
    require_odd_prime(p);
    const Field q = Field::rationals();
    const QForm lattice = diagonalize(a_lattice_gram(p));
    return is_isometric(lattice, trace_form_Q4p(p)) &&
           is_isometric(lattice + QForm(q, {mpq_class(p)}), QForm::repeated(q, 1, p));
}

bool serre_w2_check(unsigned p) {
    require_odd_prime(p);
    const Field q = Field::rationals();
    const QForm qp = diagonalize(trace_gram(real_cyclotomic_minpoly(p)));
    QForm expected(q);
    if (p % 4 == 3) {
        expected = QForm::repeated(q, 1, (p - 1) / 2);
    } else {
        expected = QForm(q, {mpq_class(2), mpq_class(2 * p)}) + QForm::repeated(q, 1, (p - 5) / 2);
    }
    if (!is_isometric(qp, expected)) return false;

    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), p, (p - 3) / 2);
    for (const Place& v : {Place::infinite(), Place::prime(2), Place::prime(p)})
        if (hasse_invariant(qp, v) != hilbert_symbol(2, mpq_class(power), v)) return false;
    return true;
}

}  // namespace gwcalc
