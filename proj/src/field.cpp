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

#include "gwcalc/field.hpp"

#include <charconv>

#include "gwcalc/arith.hpp"
#include "gwcalc/error.hpp"

namespace gwcalc {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::InvalidField: return "InvalidField";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DegenerateForm: return "DegenerateForm";
        case ErrorKind::NonSymmetric: return "NonSymmetric";
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::VerificationFailed: return "VerificationFailed";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::NotPointed: return "NotPointed";
        case ErrorKind::InseparablePolynomial: return "InseparablePolynomial";
        case ErrorKind::UnsupportedTensor: return "UnsupportedTensor";
        case ErrorKind::UnsupportedSym: return "UnsupportedSym";
        case ErrorKind::CharacteristicConstraint: return "CharacteristicConstraint";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::WrongDegree: return "WrongDegree";
        case ErrorKind::ParityViolation: return "ParityViolation";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Field Field::finite(std::uint64_t p) {
    if (p == 2) throw Error(ErrorKind::InvalidField, "characteristic 2 is not supported");
    if (!arith::is_prime(mpz_class(static_cast<unsigned long>(p))))
        throw Error(ErrorKind::InvalidField, "F_" + std::to_string(p) + ": modulus is not prime");
    Field f(Kind::FinitePrime, p);
    f.nonresidue_ = arith::smallest_nonresidue(p);
    return f;
}

Field Field::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text == "R") return reals();
    if (text == "C") return complexes();
    if (text.size() > 1 && text[0] == 'F') {
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), p);
        if (ec == std::errc() && ptr == text.data() + text.size()) return finite(p);
    }
    throw Error(ErrorKind::InvalidField, "unknown field '" + text + "' (expected Q, R, C or F<p>)");
}

std::string Field::name() const {
    switch (kind_) {
        case Kind::Rationals: return "Q";
        case Kind::Reals: return "R";
        case Kind::Complexes: return "C";
        case Kind::FinitePrime: return "F" + std::to_string(p_);
    }
    return "?";
}

void require_same_field(const Field& a, const Field& b) {
    if (!(a == b))
        throw Error(ErrorKind::FieldMismatch, "field mismatch: " + a.name() + " vs " + b.name());
}

}  // namespace gwcalc
