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

#include "gwcalc/a1deg.hpp"

#include "gwcalc/arith.hpp"
#include "gwcalc/error.hpp"

namespace gwcalc {

void validate(const RationalMapP1& f) {
    const auto& a = f.numerator;
    const auto& b = f.denominator;
    if (a.degree() < 1 || a.degree() <= b.degree())
        throw Error(ErrorKind::NotPointed, "map must satisfy deg A > deg B and deg A >= 1");
    if (gcd(a, b).degree() > 0) throw Error(ErrorKind::NotCoprime, "numerator and denominator share a factor");
}

RationalMapP1 make_map(QPoly numerator, QPoly denominator) {
    RationalMapP1 f{std::move(numerator), std::move(denominator)};
    validate(f);
    return f;
}

RationalMapP1 build_G(unsigned m, int sign) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "G_m needs m >= 1");
    if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
    const GaussianPair linear{ZPoly{0, 1}, ZPoly{sign}};
    GaussianPair acc{ZPoly{1}, ZPoly{}};
    for (unsigned i = 0; i < m; ++i) acc = acc * linear;
    return make_map(to_rational(acc.re), to_rational(acc.im));
}

RationalMatrix bezout_form(const RationalMapP1& f) {
    validate(f);
    const auto& a = f.numerator.coefficients();
    const auto& b = f.denominator.coefficients();
    const std::size_t n = a.size() - 1;
    RationalMatrix c(n, std::vector<mpq_class>(n, mpq_class(0)));
    // (X^i Y^l - X^l Y^i)/(X - Y) expanded term by term.
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t l = 0; l < b.size(); ++l) {
            if (i == l || a[i] == 0 || b[l] == 0) continue;
            const mpq_class w = a[i] * b[l];
            if (i > l) {
                for (std::size_t s = 0; s < i - l; ++s) c[l + s][i - 1 - s] += w;
            } else {
                for (std::size_t s = 0; s < l - i; ++s) c[i + s][l - 1 - s] -= w;
            }
        }
    }
    return c;
}

GWClass a1_degree(const RationalMapP1& f) { return GWClass(diagonalize(bezout_form(f))); }

bool derivative_identity_check(unsigned p) {
    if (p < 3 || !arith::is_prime(mpz_class(p)))
        throw Error(ErrorKind::InvalidArgument, "expected an odd prime");
    const auto g = build_G(p, 1);
    const auto& a = g.numerator;
    const auto& b = g.denominator;
    const QPoly lhs = a.derivative() * b - a * b.derivative();
    const QPoly rhs = QPoly{1, 0, 1}.pow(p - 1) * mpq_class(p);

    QPoly h;
    for (unsigned j = 0; 2 * j + 1 <= p; ++j) {
        const unsigned k = p - 2 * j - 1;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), p, k);
        if (j % 2) binom = -binom;
        h += QPoly::monomial(mpq_class(binom), k);
    }
    return lhs == rhs && b == h;
}

}  // namespace gwcalc
