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

#include "gwcalc/qform.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gwcalc/arith.hpp"
#include "gwcalc/error.hpp"

namespace gwcalc {

namespace {

// Residue modulo an odd prime, enough arithmetic for symmetric elimination.
struct ModP {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    friend ModP operator+(ModP a, ModP b) { return {(a.v + b.v) % a.p, a.p}; }
    friend ModP operator-(ModP a, ModP b) { return {(a.v + a.p - b.v) % a.p, a.p}; }
    friend ModP operator*(ModP a, ModP b) {
        return {static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v) * b.v % a.p), a.p};
    }
    friend ModP operator/(ModP a, ModP b) { return a * ModP{arith::mod_inverse(b.v, a.p), a.p}; }
    friend bool operator==(ModP a, int zero) { return zero == 0 && a.v == 0; }
    friend bool operator!=(ModP a, int zero) { return !(a == zero); }
};

template <class S>
std::vector<S> symmetric_eliminate(std::vector<std::vector<S>> m) {
    const std::size_t n = m.size();
    std::vector<S> diagonal;
    diagonal.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t j = k; j < n; ++j)
            if (m[j][j] != 0) {
                pivot = j;
                break;
            }
        if (pivot == n) {
            // All remaining diagonal entries vanish: row_i += row_j makes m[i][i] = 2 m[i][j].
            for (std::size_t i = k; i < n && pivot == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (m[i][j] != 0) {
                        for (std::size_t l = k; l < n; ++l) m[i][l] = m[i][l] + m[j][l];
                        for (std::size_t l = k; l < n; ++l) m[l][i] = m[l][i] + m[l][j];
                        pivot = i;
                        break;
                    }
            if (pivot == n) throw Error(ErrorKind::DegenerateForm, "Gram matrix is degenerate");
        }
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            for (auto& row : m) std::swap(row[pivot], row[k]);
        }
        const S d = m[k][k];
        const S zero = d - d;
        for (std::size_t j = k + 1; j < n; ++j) {
            if (m[j][k] == 0) continue;
            const S f = m[j][k] / d;
            for (std::size_t l = k + 1; l < n; ++l) m[j][l] = m[j][l] - f * m[k][l];
        }
        for (std::size_t j = k + 1; j < n; ++j) m[j][k] = m[k][j] = zero;
        diagonal.push_back(d);
    }
    return diagonal;
}

int hilbert_int(const mpz_class& a, const mpz_class& b, const Place& v) {
    if (v.is_infinite()) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
    const mpz_class& p = v.prime();
    const unsigned alpha = arith::valuation(a, p);
    const unsigned beta = arith::valuation(b, p);
    mpz_class u = a, w = b;
    for (unsigned i = 0; i < alpha; ++i) mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
    for (unsigned i = 0; i < beta; ++i) mpz_divexact(w.get_mpz_t(), w.get_mpz_t(), p.get_mpz_t());
    if (p == 2) {
        const auto u8 = arith::mod(u, 8), w8 = arith::mod(w, 8);
        auto eps = [](std::uint64_t x) { return x % 4 == 3 ? 1u : 0u; };
        auto omega = [](std::uint64_t x) { return (x == 3 || x == 5) ? 1u : 0u; };
        const unsigned e = eps(u8) * eps(w8) + alpha * omega(w8) + beta * omega(u8);
        return e % 2 == 0 ? 1 : -1;
    }
    int result = 1;
    if ((alpha * beta) % 2 == 1 && arith::mod(p, 4) == 3) result = -result;
    if (beta % 2 == 1) result *= arith::legendre(u, p);
    if (alpha % 2 == 1) result *= arith::legendre(w, p);
    return result;
}

void toggle(std::set<Place>& set, const std::vector<Place>& places) {
    for (const auto& v : places)
        if (!set.erase(v)) set.insert(v);
}

// m square-free and nonzero.
bool is_local_square(const mpz_class& m, const Place& v) {
    if (v.is_infinite()) return sgn(m) > 0;
    if (v.prime() == 2) return mpz_odd_p(m.get_mpz_t()) && arith::mod(m, 8) == 1;
    return !mpz_divisible_p(m.get_mpz_t(), v.prime().get_mpz_t()) && arith::legendre(m, v.prime()) == 1;
}

// Invariant data of a rational form: rank, signature, discriminant and the
// set of places with Hasse invariant -1.
struct Tuple {
    std::int64_t n = 0;
    std::int64_t sigma = 0;
    mpz_class d = 1;
    std::set<Place> minus;
};

bool realizable(const Tuple& t) {
    if (t.n < 0) return false;
    if (t.n == 0) return t.sigma == 0 && t.d == 1 && t.minus.empty();
    if (t.sigma > t.n || t.sigma < -t.n || (t.n - t.sigma) % 2 != 0) return false;
    const std::int64_t r = (t.n - t.sigma) / 2;
    if ((sgn(t.d) < 0) != (r % 2 == 1)) return false;
    const bool inf_minus = (r * (r - 1) / 2) % 2 == 1;
    if (t.minus.contains(Place::infinite()) != inf_minus) return false;
    if (t.minus.size() % 2 != 0) return false;
    if (t.n == 1) return t.minus.empty();
    if (t.n == 2) {
        const mpz_class neg_d = -t.d;
        for (const auto& v : t.minus)
            if (!v.is_infinite() && is_local_square(neg_d, v)) return false;
    }
    return true;
}

// Invariants of q' where q = <a> + q'.
Tuple split_off(const Tuple& t, const mpz_class& a) {
    Tuple next;
    next.n = t.n - 1;
    next.sigma = t.sigma - sgn(a);
    next.d = multiply_entries(Field::rationals(), t.d, a);
    next.minus = t.minus;
    toggle(next.minus, hilbert_minus_places(a, next.d));
    return next;
}

// Invariants of q' where q = q' + k hyperbolic planes.
Tuple strip_hyperbolic(const Tuple& t, std::int64_t k) {
    Tuple next;
    next.n = t.n - 2 * k;
    next.sigma = t.sigma;
    next.d = k % 2 == 1 ? mpz_class(-t.d) : t.d;
    next.minus = t.minus;
    if ((k * (k - 1) / 2) % 2 == 1) toggle(next.minus, {Place::infinite(), Place::prime(2)});
    if (k % 2 == 1) toggle(next.minus, hilbert_minus_places(next.d, -1));
    return next;
}

constexpr long kCandidateLimit = 1000000;

QForm build_from_tuple(Tuple t) {
    const Field q = Field::rationals();
    std::vector<QForm::Entry> out;
    auto push = [&](const mpz_class& a) {
        if (!out.empty() && out.back().first == a)
            ++out.back().second;
        else
            out.emplace_back(a, 1);
    };
    // Above rank 5 only the sign conditions matter, so the greedy choice is
    // <1> while a positive entry remains and <-1> otherwise. Peeling <1>, or
    // <-1> four at a time, leaves d and the Hasse set alone; do it in bulk.
    if (t.n > 5) {
        const std::int64_t positives = (t.n + t.sigma) / 2;
        if (positives > 0) {
            const std::int64_t k = std::min(positives, t.n - 5);
            out.emplace_back(mpz_class(1), static_cast<std::uint64_t>(k));
            t.n -= k;
            t.sigma -= k;
        } else {
            const std::int64_t k = 4 * ((t.n - 5) / 4);
            if (k > 0) {
                out.emplace_back(mpz_class(-1), static_cast<std::uint64_t>(k));
                t.n -= k;
                t.sigma += k;
            }
        }
    }
    while (t.n > 0) {
        if (t.n == 1) {
            push(t.d);
            break;
        }
        bool found = false;
        for (long m = 1; m <= kCandidateLimit && !found; ++m) {
            const mpz_class mm(m);
            if (m > 3 && arith::squarefree_part(mm) != mm) continue;
            for (const mpz_class& a : {mm, mpz_class(-mm)}) {
                Tuple next = split_off(t, a);
                if (realizable(next)) {
                    push(a);
                    t = std::move(next);
                    found = true;
                    break;
                }
            }
        }
        if (!found) throw Error(ErrorKind::VerificationFailed, "no small representative found for invariants");
    }
    return QForm::from_classes(q, std::move(out));
}

Tuple tuple_of(const QForm& q) {
    const auto inv = invariants(q);
    Tuple t;
    t.n = static_cast<std::int64_t>(inv.rank);
    t.sigma = *inv.signature;
    t.d = inv.discriminant;
    t.minus.insert(inv.hasse_minus.begin(), inv.hasse_minus.end());
    return t;
}

}  // namespace

int hilbert_symbol(const mpq_class& a, const mpq_class& b, const Place& v) {
    if (a == 0 || b == 0) throw Error(ErrorKind::InvalidArgument, "Hilbert symbol of zero");
    return hilbert_int(mpz_class(a.get_num() * a.get_den()), mpz_class(b.get_num() * b.get_den()), v);
}

std::vector<Place> hilbert_minus_places(const mpz_class& a, const mpz_class& b) {
    std::vector<Place> out;
    if (hilbert_int(a, b, Place::infinite()) == -1) out.push_back(Place::infinite());
    if (hilbert_int(a, b, Place::prime(2)) == -1) out.push_back(Place::prime(2));
    std::set<mpz_class> primes;
    for (const auto& p : arith::prime_divisors(a)) primes.insert(p);
    for (const auto& p : arith::prime_divisors(b)) primes.insert(p);
    for (const auto& p : primes) {
        if (p == 2) continue;
        if (hilbert_int(a, b, Place::prime(p)) == -1) out.push_back(Place::prime(p));
    }
    return out;
}

mpz_class canonical_entry(const Field& field, const mpq_class& value) {
    if (value == 0) throw Error(ErrorKind::DegenerateForm, "zero entry in a quadratic form");
    switch (field.kind()) {
        case Field::Kind::Rationals: return arith::square_class(value);
        case Field::Kind::Reals: return sgn(value) > 0 ? 1 : -1;
        case Field::Kind::Complexes: return 1;
        case Field::Kind::FinitePrime: {
            const auto p = field.characteristic();
            const auto den = arith::mod(value.get_den(), p);
            if (den == 0) throw Error(ErrorKind::InvalidArgument, "denominator divisible by the characteristic");
            const auto x = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(arith::mod(value.get_num(), p)) * arith::mod_inverse(den, p) % p);
            if (x == 0) throw Error(ErrorKind::DegenerateForm, "entry vanishes in " + field.name());
            if (arith::mod_pow(x, (p - 1) / 2, p) == 1) return 1;
            return mpz_class(static_cast<unsigned long>(field.nonresidue()));
        }
    }
    return 1;
}

bool entry_less(const mpz_class& a, const mpz_class& b) {
    const int c = mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
    if (c != 0) return c < 0;
    return a > b;
}

mpz_class multiply_entries(const Field& field, const mpz_class& a, const mpz_class& b) {
    switch (field.kind()) {
        case Field::Kind::Rationals: {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            return mpz_class(a / g) * mpz_class(b / g);
        }
        case Field::Kind::Reals: return a * b;
        case Field::Kind::Complexes: return 1;
        case Field::Kind::FinitePrime:
            if (a == b) return 1;
            return a == 1 ? b : a;
    }
    return 1;
}

QForm::QForm(Field field, const std::vector<mpq_class>& entries) : field_(field) {
    for (const auto& e : entries) classes_.emplace_back(canonical_entry(field_, e), 1);
    normalize();
}

QForm QForm::repeated(Field field, const mpz_class& a, std::uint64_t n) {
    QForm q(field);
    if (n > 0) q.classes_.emplace_back(a, n);
    return q;
}

QForm QForm::from_classes(Field field, std::vector<Entry> classes) {
    QForm q(field);
    q.classes_ = std::move(classes);
    q.normalize();
    return q;
}

void QForm::normalize() {
    std::sort(classes_.begin(), classes_.end(),
              [](const Entry& a, const Entry& b) { return entry_less(a.first, b.first); });
    std::vector<Entry> merged;
    for (auto& e : classes_) {
        if (e.second == 0) continue;
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(std::move(e));
    }
    classes_ = std::move(merged);
}

std::uint64_t QForm::rank() const noexcept {
    std::uint64_t n = 0;
    for (const auto& e : classes_) n += e.second;
    return n;
}

std::vector<mpz_class> QForm::entries() const {
    std::vector<mpz_class> out;
    for (const auto& [a, m] : classes_) out.insert(out.end(), m, a);
    return out;
}

std::uint64_t QForm::multiplicity(const mpz_class& a) const {
    for (const auto& [b, m] : classes_)
        if (a == b) return m;
    return 0;
}

std::optional<std::int64_t> QForm::signature() const {
    if (!field_.is_ordered()) return std::nullopt;
    std::int64_t s = 0;
    for (const auto& [a, m] : classes_) s += sgn(a) > 0 ? static_cast<std::int64_t>(m) : -static_cast<std::int64_t>(m);
    return s;
}

mpz_class QForm::discriminant() const {
    mpz_class d = 1;
    for (const auto& [a, m] : classes_)
        if (m % 2 == 1) d = multiply_entries(field_, d, a);
    return d;
}

QForm QForm::operator+(const QForm& other) const {
    require_same_field(field_, other.field_);
    QForm out(field_);
    out.classes_ = classes_;
    out.classes_.insert(out.classes_.end(), other.classes_.begin(), other.classes_.end());
    out.normalize();
    return out;
}

QForm QForm::operator*(const QForm& other) const {
    require_same_field(field_, other.field_);
    QForm out(field_);
    for (const auto& [a, m] : classes_)
        for (const auto& [b, n] : other.classes_) out.classes_.emplace_back(multiply_entries(field_, a, b), m * n);
    out.normalize();
    return out;
}

QForm QForm::scaled(const mpz_class& a) const {
    return QForm::repeated(field_, a, 1) * *this;
}

std::string QForm::to_string() const {
    std::ostringstream os;
    os << '<';
    bool first = true;
    for (const auto& [a, m] : classes_)
        for (std::uint64_t i = 0; i < m; ++i) {
            if (!first) os << ',';
            os << a.get_str();
            first = false;
        }
    os << '>';
    return os.str();
}

int hasse_invariant(const QForm& q, const Place& v) {
    if (!q.field().is_ordered()) return 1;
    if (q.field().is_reals() && !v.is_infinite()) return 1;
    const auto& cls = q.classes();
    int s = 1;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        const auto& [a, m] = cls[i];
        if (m % 4 == 2 || m % 4 == 3) s *= hilbert_int(a, a, v);
        if (m % 2 == 0) continue;
        for (std::size_t j = i + 1; j < cls.size(); ++j)
            if (cls[j].second % 2 == 1) s *= hilbert_int(a, cls[j].first, v);
    }
    return s;
}

FormInvariants invariants(const QForm& q) {
    FormInvariants inv;
    inv.rank = q.rank();
    inv.signature = q.signature();
    inv.discriminant = q.discriminant();
    if (q.field().is_reals()) {
        if (hasse_invariant(q, Place::infinite()) == -1) inv.hasse_minus.push_back(Place::infinite());
    } else if (q.field().is_rationals()) {
        std::set<Place> places{Place::infinite(), Place::prime(2)};
        for (const auto& [a, m] : q.classes())
            for (const auto& p : arith::prime_divisors(a)) places.insert(Place::prime(p));
        for (const auto& v : places)
            if (hasse_invariant(q, v) == -1) inv.hasse_minus.push_back(v);
    }
    return inv;
}

bool is_isometric(const QForm& a, const QForm& b) {
    require_same_field(a.field(), b.field());
    if (a.rank() != b.rank()) return false;
    switch (a.field().kind()) {
        case Field::Kind::Complexes: return true;
        case Field::Kind::FinitePrime: return a.discriminant() == b.discriminant();
        case Field::Kind::Reals: return a.signature() == b.signature();
        case Field::Kind::Rationals: {
            if (a.signature() != b.signature() || a.discriminant() != b.discriminant()) return false;
            return invariants(a).hasse_minus == invariants(b).hasse_minus;
        }
    }
    return false;
}

QForm diagonalize_raw(const RationalMatrix& gram, const Field& field) {
    const std::size_t n = gram.size();
    for (const auto& row : gram)
        if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "Gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram[i][j] != gram[j][i]) throw Error(ErrorKind::NonSymmetric, "Gram matrix is not symmetric");

    if (field.is_finite()) {
        const auto p = field.characteristic();
        std::vector<std::vector<ModP>> m(n, std::vector<ModP>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto den = arith::mod(gram[i][j].get_den(), p);
                if (den == 0)
                    throw Error(ErrorKind::InvalidArgument, "denominator divisible by the characteristic");
                m[i][j] = ModP{arith::mod(gram[i][j].get_num(), p), p} / ModP{den, p};
            }
        std::vector<mpq_class> entries;
        for (const auto& d : symmetric_eliminate(std::move(m))) entries.emplace_back(static_cast<unsigned long>(d.v));
        return QForm(field, entries);
    }
    return QForm(field, symmetric_eliminate(gram));
}

QForm diagonalize(const RationalMatrix& gram, const Field& field) {
    return canonical_form(diagonalize_raw(gram, field));
}

QForm canonical_form(const QForm& q) {
    const Field& f = q.field();
    const std::uint64_t n = q.rank();
    switch (f.kind()) {
        case Field::Kind::Complexes: return QForm::repeated(f, 1, n);
        case Field::Kind::Reals: {
            const auto s = *q.signature();
            const auto pos = static_cast<std::uint64_t>((static_cast<std::int64_t>(n) + s) / 2);
            return QForm::repeated(f, 1, pos) + QForm::repeated(f, -1, n - pos);
        }
        case Field::Kind::FinitePrime:
            if (n == 0) return q;
            return QForm::repeated(f, 1, n - 1) + QForm::repeated(f, q.discriminant(), 1);
        case Field::Kind::Rationals: return build_from_tuple(tuple_of(q));
    }
    return q;
}

QForm anisotropic_part(const QForm& q) {
    const Field& f = q.field();
    const std::uint64_t n = q.rank();
    switch (f.kind()) {
        case Field::Kind::Complexes: return QForm::repeated(f, 1, n % 2);
        case Field::Kind::Reals: {
            const auto s = *q.signature();
            return QForm::repeated(f, s >= 0 ? 1 : -1, static_cast<std::uint64_t>(s >= 0 ? s : -s));
        }
        case Field::Kind::FinitePrime: {
            // Signed discriminant (-1)^{n(n-1)/2} d classifies W(F_p) together with n mod 2.
            const std::uint64_t half = n / 2;
            mpz_class signed_disc = q.discriminant();
            if (half % 2 == 1) signed_disc = multiply_entries(f, signed_disc, canonical_entry(f, -1));
            if (n % 2 == 1) return QForm::repeated(f, signed_disc, 1);
            if (signed_disc == 1) return QForm(f);
            return QForm::repeated(f, 1, 1) + QForm::repeated(f, canonical_entry(f, mpq_class(-signed_disc)), 1);
        }
        case Field::Kind::Rationals: {
            const Tuple t = tuple_of(q);
            const std::int64_t lowest = t.sigma >= 0 ? t.sigma : -t.sigma;
            for (std::int64_t r = lowest; r <= t.n; r += 2) {
                Tuple stripped = strip_hyperbolic(t, (t.n - r) / 2);
                if (realizable(stripped)) return build_from_tuple(std::move(stripped));
            }
            throw Error(ErrorKind::VerificationFailed, "anisotropic reduction failed");
        }
    }
    return q;
}

std::optional<QForm> rational_form_with_invariants(std::int64_t rank, std::int64_t signature,
                                                   const mpz_class& discriminant,
                                                   std::vector<Place> hasse_minus) {
    Tuple t;
    t.n = rank;
    t.sigma = signature;
    t.d = discriminant;
    t.minus.insert(hasse_minus.begin(), hasse_minus.end());
    if (!realizable(t)) return std::nullopt;
    return build_from_tuple(std::move(t));
}

}  // namespace gwcalc
