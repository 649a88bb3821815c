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

#ifndef GWCALC_FIELD_HPP
#define GWCALC_FIELD_HPP

#include <cstdint>
#include <string>

namespace gwcalc {

/// One of the base fields the engine classifies forms over: Q, R, C or F_p
/// with p an odd prime. Characteristic 2 is rejected at construction.
class Field {
   public:
    enum class Kind { Rationals, Reals, Complexes, FinitePrime };

    static Field rationals() noexcept { return Field(Kind::Rationals, 0); }
    static Field reals() noexcept { return Field(Kind::Reals, 0); }
    static Field complexes() noexcept { return Field(Kind::Complexes, 0); }
    /// Throws InvalidField unless p is an odd prime.
    static Field finite(std::uint64_t p);

    /// Parses "Q", "R", "C" or "F<p>".
    static Field parse(const std::string& text);

    Kind kind() const noexcept { return kind_; }
    /// The prime p for F_p, zero otherwise.
    std::uint64_t characteristic() const noexcept { return p_; }
    /// Smallest positive non-residue of F_p; the canonical non-square entry.
    std::uint64_t nonresidue() const noexcept { return nonresidue_; }

    bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
    bool is_reals() const noexcept { return kind_ == Kind::Reals; }
    bool is_complexes() const noexcept { return kind_ == Kind::Complexes; }
    bool is_finite() const noexcept { return kind_ == Kind::FinitePrime; }
    /// Fields with an ordering, where forms carry a signature.
    bool is_ordered() const noexcept { return is_rationals() || is_reals(); }

    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }

   private:
    Field(Kind kind, std::uint64_t p) noexcept : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint64_t p_;
    std::uint64_t nonresidue_ = 0;
};

/// Throws FieldMismatch when a and b differ.
void require_same_field(const Field& a, const Field& b);

}  // namespace gwcalc

#endif
