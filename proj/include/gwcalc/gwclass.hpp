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

#ifndef GWCALC_GWCLASS_HPP
#define GWCALC_GWCLASS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "gwcalc/qform.hpp"

namespace gwcalc {

/// Element of the Grothendieck-Witt ring GW(k), held as a virtual difference
/// plus - minus of diagonal forms. No square class appears on both sides.
/// Ring operations act on the representation; invariants are derived.
class GWClass {
   public:
    explicit GWClass(Field field) : plus_(field), minus_(field) {}
    explicit GWClass(QForm plus);
    GWClass(QForm plus, QForm minus);

    /// The integer n as a ring element: n<1>, or |n|<1> on the minus side.
    static GWClass scalar(Field field, std::int64_t n);
    /// The rank-one class <a>; a is canonicalized.
    static GWClass unit(Field field, const mpq_class& a);
    /// <1> + <-1>.
    static GWClass hyperbolic(Field field);

    const Field& field() const noexcept { return plus_.field(); }
    const QForm& plus() const noexcept { return plus_; }
    const QForm& minus() const noexcept { return minus_; }

    std::int64_t rank() const noexcept;
    std::optional<std::int64_t> signature() const;
    bool is_zero_representation() const noexcept { return plus_.empty() && minus_.empty(); }

    /// plus + (-1) * minus: a genuine form with the same Witt class.
    QForm witt_form() const;

    GWClass operator+(const GWClass& other) const;
    GWClass operator-(const GWClass& other) const;
    GWClass operator-() const;
    GWClass operator*(const GWClass& other) const;

    /// "15<1> + 12<-1>", "<2> - <3>", or "0".
    std::string to_string() const;

    /// Identity of representations, not of ring elements; see gw_equal.
    friend bool operator==(const GWClass& a, const GWClass& b) {
        return a.plus_ == b.plus_ && a.minus_ == b.minus_;
    }

   private:
    void reduce();

    QForm plus_;
    QForm minus_;
};

inline GWClass gw_add(const GWClass& x, const GWClass& y) { return x + y; }
inline GWClass gw_mul(const GWClass& x, const GWClass& y) { return x * y; }
inline GWClass gw_scalar(std::int64_t n, Field field = Field::rationals()) { return GWClass::scalar(field, n); }

/// Multiplicity notation for a single form: "2<1> + <3>", "0" when empty.
std::string format_terms(const QForm& q);

}  // namespace gwcalc

#endif
