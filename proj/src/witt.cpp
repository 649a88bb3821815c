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

#include "gwcalc/witt.hpp"

#include "gwcalc/arith.hpp"
#include "gwcalc/error.hpp"

namespace gwcalc {

namespace {

mpz_class smallest_nonresidue(const mpz_class& p) {
    for (mpz_class n = 2;; ++n)
        if (arith::legendre(n, p) == -1) return n;
}

// Residue class of the form sum m_i <u_i> over F_p, p odd.
ResidueClass residue_of_units(const mpz_class& p, const std::vector<std::pair<mpz_class, std::uint64_t>>& units) {
    std::uint64_t n = 0;
    int disc = 1;
    for (const auto& [u, m] : units) {
        n += m;
        if (m % 2 == 1) disc *= arith::legendre(u, p);
    }
    const std::uint64_t pairs_parity = (n % 4 == 2 || n % 4 == 3) ? 1 : 0;
    if (pairs_parity == 1) disc *= arith::legendre(mpz_class(-1), p);
    return ResidueClass{p, n % 2 == 1, disc == 1};
}

}  // namespace

std::string ResidueClass::to_string() const {
    if (prime == 2) return odd_rank ? "<1>" : "0";
    if (is_zero()) return "0";
    const std::string n = smallest_nonresidue(prime).get_str();
    if (odd_rank) return square_disc ? "<1>" : "<" + n + ">";
    // Binary anisotropic <1,x> with -x = signed discriminant (a non-square).
    const bool minus_one_square = arith::legendre(mpz_class(-1), prime) == 1;
    return minus_one_square ? "<1," + n + ">" : "<1,1>";
}

bool WittClass::is_zero() const {
    switch (field.kind()) {
        case Field::Kind::Rationals: return signature == 0 && residues.empty() && !dyadic;
        case Field::Kind::Reals: return signature == 0;
        case Field::Kind::Complexes: return !odd_rank;
        case Field::Kind::FinitePrime: return local.is_zero();
    }
    return false;
}

bool WittClass::is_integer_multiple() const {
    if (field.is_rationals()) return residues.empty() && !dyadic;
    return field.is_reals();
}

ResidueClass second_residue(const QForm& q, const mpz_class& p) {
    if (!q.field().is_rationals())
        throw Error(ErrorKind::FieldMismatch, "second residues are defined for forms over Q");
    if (!arith::is_prime(p)) throw Error(ErrorKind::InvalidArgument, p.get_str() + " is not prime");
    if (p == 2) {
        std::uint64_t odd = 0;
        for (const auto& [a, m] : q.classes())
            if (mpz_even_p(a.get_mpz_t())) odd += m;
        return ResidueClass{p, odd % 2 == 1, true};
    }
    std::vector<std::pair<mpz_class, std::uint64_t>> units;
    for (const auto& [a, m] : q.classes()) {
        // Entries are square-free, so the valuation is 0 or 1.
        if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) units.emplace_back(mpz_class(a / p), m);
    }
    return residue_of_units(p, units);
}

WittClass witt_class(const QForm& q) {
    WittClass w;
    w.field = q.field();
    const std::uint64_t n = q.rank();
    switch (q.field().kind()) {
        case Field::Kind::Complexes: w.odd_rank = n % 2 == 1; break;
        case Field::Kind::Reals: w.signature = *q.signature(); break;
        case Field::Kind::FinitePrime: {
            const mpz_class p(static_cast<unsigned long>(q.field().characteristic()));
            w.local = residue_of_units(p, q.classes());
            break;
        }
        case Field::Kind::Rationals: {
            w.signature = *q.signature();
            w.dyadic = second_residue(q, 2).odd_rank;
            std::map<mpz_class, bool> primes;
            for (const auto& [a, m] : q.classes())
                for (const auto& p : arith::prime_divisors(a))
                    if (p != 2) primes[p] = true;
            for (const auto& [p, unused] : primes) {
                auto r = second_residue(q, p);
                if (!r.is_zero()) w.residues.emplace(p, r);
            }
            break;
        }
    }
    return w;
}

WittClass witt_class(const GWClass& x) {
    return witt_class(x.witt_form());
}

bool witt_equal(const GWClass& x, const GWClass& y) {
    require_same_field(x.field(), y.field());
    return witt_class(x) == witt_class(y);
}

bool gw_equal(const GWClass& x, const GWClass& y) {
    return x.rank() == y.rank() && witt_equal(x, y);
}

GWClass canonical(const GWClass& x) {
    const Field& f = x.field();
    QForm an = anisotropic_part(x.witt_form());
    const std::int64_t k = (x.rank() - static_cast<std::int64_t>(an.rank())) / 2;
    const QForm h = QForm::repeated(f, 1, static_cast<std::uint64_t>(k >= 0 ? k : -k)) +
                    QForm::repeated(f, canonical_entry(f, -1), static_cast<std::uint64_t>(k >= 0 ? k : -k));
    if (k >= 0) return GWClass(an + h, QForm(f));
    return GWClass(an, h);
}

std::string witt_string(const GWClass& x) {
    const WittClass w = witt_class(x);
    if (w.is_zero()) return "0";
    if (w.is_integer_multiple()) return std::to_string(w.signature) + "<1>";
    return format_terms(anisotropic_part(x.witt_form()));
}

GWClass invert_unit(const GWClass& u) {
    if (!u.field().is_rationals()) throw Error(ErrorKind::FieldMismatch, "invert_unit works over Q");
    if (u.rank() != 1 || u.signature() != 1)
        throw Error(ErrorKind::NotAUnit, "expected rank 1 and signature 1, got rank " + std::to_string(u.rank()) +
                                             " and signature " + std::to_string(*u.signature()));
    const Field q = u.field();
    const GWClass one = GWClass::scalar(q, 1);
    const GWClass tau = u - one;
    const GWClass v = canonical(one - tau + tau * tau);
    const GWClass check = u * v;
    if (check.rank() != 1 || !witt_equal(check, one))
        throw Error(ErrorKind::VerificationFailed, "u * v = " + check.to_string() + " is not <1>");
    return v;
}

}  // namespace gwcalc
