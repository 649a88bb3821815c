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

#ifndef GWCALC_QFORM_HPP
#define GWCALC_QFORM_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwcalc/field.hpp"

namespace gwcalc {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

/// A place of Q: either a prime or the real place.
class Place {
   public:
    static Place infinite() { return Place(mpz_class(0)); }
    /// p must be prime; not checked.
    static Place prime(const mpz_class& p) { return Place(p); }

    bool is_infinite() const noexcept { return p_ == 0; }
    const mpz_class& prime() const noexcept { return p_; }
    std::string name() const { return is_infinite() ? "inf" : p_.get_str(); }

    // The real place sorts first, then primes ascending.
    friend bool operator<(const Place& a, const Place& b) { return cmp(a.p_, b.p_) < 0; }
    friend bool operator==(const Place& a, const Place& b) { return a.p_ == b.p_; }

   private:
    explicit Place(mpz_class p) : p_(std::move(p)) {}
    mpz_class p_;
};

/// Hilbert symbol (a,b)_v in {+1,-1}. a and b must be nonzero.
int hilbert_symbol(const mpq_class& a, const mpq_class& b, const Place& v);

/// Every place where (a,b)_v = -1, for nonzero integers a, b. Always an even
/// number of places.
std::vector<Place> hilbert_minus_places(const mpz_class& a, const mpz_class& b);

/// Canonical square-class representative of a nonzero element of the field:
/// a square-free integer over Q, +-1 over R, 1 over C, and 1 or the smallest
/// non-residue over F_p. Over F_p the denominator must be prime to p.
mpz_class canonical_entry(const Field& field, const mpq_class& value);

/// A nondegenerate diagonal quadratic form. Entries are stored as canonical
/// square classes with multiplicities, in print order: ascending absolute
/// value, positive before negative.
class QForm {
   public:
    using Entry = std::pair<mpz_class, std::uint64_t>;

    explicit QForm(Field field) : field_(field) {}
    /// Canonicalizes each entry; zero entries throw DegenerateForm.
    QForm(Field field, const std::vector<mpq_class>& entries);

    /// n copies of <a>, a already canonical for the field.
    static QForm repeated(Field field, const mpz_class& a, std::uint64_t n);
    /// From canonical (entry, multiplicity) pairs in any order.
    static QForm from_classes(Field field, std::vector<Entry> classes);

    const Field& field() const noexcept { return field_; }
    std::uint64_t rank() const noexcept;
    bool empty() const noexcept { return classes_.empty(); }
    const std::vector<Entry>& classes() const noexcept { return classes_; }
    /// Expanded entry list in print order.
    std::vector<mpz_class> entries() const;
    std::uint64_t multiplicity(const mpz_class& a) const;

    /// Over Q and R only.
    std::optional<std::int64_t> signature() const;
    /// Canonical square class of the product of entries (1 for the empty form).
    mpz_class discriminant() const;

    /// Orthogonal sum.
    QForm operator+(const QForm& other) const;
    /// Tensor product.
    QForm operator*(const QForm& other) const;
    /// <a> * q.
    QForm scaled(const mpz_class& a) const;

    /// "<a1,...,an>".
    std::string to_string() const;

    friend bool operator==(const QForm& a, const QForm& b) {
        return a.field_ == b.field_ && a.classes_ == b.classes_;
    }

   private:
    void normalize();

    Field field_;
    std::vector<Entry> classes_;
};

/// Sort key for printed entries.
bool entry_less(const mpz_class& a, const mpz_class& b);

/// Product of two canonical entries, canonicalized.
mpz_class multiply_entries(const Field& field, const mpz_class& a, const mpz_class& b);

struct FormInvariants {
    std::uint64_t rank = 0;
    std::optional<std::int64_t> signature;
    mpz_class discriminant = 1;
    /// Places where the Hasse invariant prod_{i<j} (a_i,a_j)_v is -1.
    std::vector<Place> hasse_minus;
};

FormInvariants invariants(const QForm& q);

/// Hasse invariant at a single place (Q and R only; +1 elsewhere).
int hasse_invariant(const QForm& q, const Place& v);

/// Classification test. Q: Hasse-Minkowski; R: rank and signature;
/// F_p: rank and discriminant; C: rank. Throws FieldMismatch.
bool is_isometric(const QForm& a, const QForm& b);

/// Congruence diagonalization by symmetric Gaussian elimination. The pivot is
/// the first nonzero diagonal entry; an all-zero diagonal is repaired with
/// row_i += row_j, col_i += col_j. Entries are normalized to square classes.
/// Throws NonSymmetric or DegenerateForm.
QForm diagonalize_raw(const RationalMatrix& gram, const Field& field = Field::rationals());

/// diagonalize_raw followed by canonical_form, so congruent inputs give
/// identical outputs.
QForm diagonalize(const RationalMatrix& gram, const Field& field = Field::rationals());

/// The smallest isometric diagonal form in print order. Over Q the entries are
/// chosen greedily from the invariants.
QForm canonical_form(const QForm& q);

/// Canonical anisotropic form in the Witt class of q.
QForm anisotropic_part(const QForm& q);

/// Canonical form with prescribed invariants over Q, or nullopt if no such
/// form exists (existence theorem for rational quadratic forms).
std::optional<QForm> rational_form_with_invariants(std::int64_t rank, std::int64_t signature,
                                                   const mpz_class& discriminant,
                                                   std::vector<Place> hasse_minus);

}  // namespace gwcalc

#endif
