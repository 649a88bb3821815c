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

#include "gwcalc/gwclass.hpp"

#include <algorithm>
#include <sstream>

namespace gwcalc {

namespace {

std::string term(const mpz_class& a, std::uint64_t m) {
    std::string s = m == 1 ? "" : std::to_string(m);
    return s + "<" + a.get_str() + ">";
}

}  // namespace

GWClass::GWClass(QForm plus) : plus_(std::move(plus)), minus_(plus_.field()) {}

GWClass::GWClass(QForm plus, QForm minus) : plus_(std::move(plus)), minus_(std::move(minus)) {
    require_same_field(plus_.field(), minus_.field());
    reduce();
}

GWClass GWClass::scalar(Field field, std::int64_t n) {
    const auto count = static_cast<std::uint64_t>(n >= 0 ? n : -n);
    if (n >= 0) return GWClass(QForm::repeated(field, 1, count));
    return GWClass(QForm(field), QForm::repeated(field, 1, count));
}

GWClass GWClass::unit(Field field, const mpq_class& a) {
    return GWClass(QForm::repeated(field, canonical_entry(field, a), 1));
}

GWClass GWClass::hyperbolic(Field field) {
    return GWClass(QForm(field, {mpq_class(1), mpq_class(-1)}));
}

void GWClass::reduce() {
    std::vector<QForm::Entry> plus, minus;
    const auto& pc = plus_.classes();
    const auto& mc = minus_.classes();
    for (const auto& [a, m] : pc) {
        const auto n = minus_.multiplicity(a);
        if (m > n) plus.emplace_back(a, m - n);
    }
    for (const auto& [a, m] : mc) {
        const auto n = plus_.multiplicity(a);
        if (m > n) minus.emplace_back(a, m - n);
    }
    const Field f = plus_.field();
    plus_ = QForm::from_classes(f, std::move(plus));
    minus_ = QForm::from_classes(f, std::move(minus));
}

std::int64_t GWClass::rank() const noexcept {
    return static_cast<std::int64_t>(plus_.rank()) - static_cast<std::int64_t>(minus_.rank());
}

std::optional<std::int64_t> GWClass::signature() const {
    auto p = plus_.signature();
    if (!p) return std::nullopt;
    return *p - *minus_.signature();
}

QForm GWClass::witt_form() const {
    return plus_ + minus_.scaled(canonical_entry(field(), -1));
}

GWClass GWClass::operator+(const GWClass& other) const {
    return GWClass(plus_ + other.plus_, minus_ + other.minus_);
}

GWClass GWClass::operator-(const GWClass& other) const {
    return GWClass(plus_ + other.minus_, minus_ + other.plus_);
}

GWClass GWClass::operator-() const {
    return GWClass(minus_, plus_);
}

GWClass GWClass::operator*(const GWClass& other) const {
    return GWClass(plus_ * other.plus_ + minus_ * other.minus_, plus_ * other.minus_ + minus_ * other.plus_);
}

std::string format_terms(const QForm& q) {
    if (q.empty()) return "0";
    std::string out;
    for (const auto& [a, m] : q.classes()) {
        if (!out.empty()) out += " + ";
        out += term(a, m);
    }
    return out;
}

std::string GWClass::to_string() const {
    if (is_zero_representation()) return "0";
    std::string out = plus_.empty() ? "" : format_terms(plus_);
    for (const auto& [a, m] : minus_.classes()) {
        out += out.empty() ? "-" : " - ";
        out += term(a, m);
    }
    return out;
}

}  // namespace gwcalc
