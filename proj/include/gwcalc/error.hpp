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

#ifndef GWCALC_ERROR_HPP
#define GWCALC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace gwcalc {

enum class ErrorKind {
    InvalidArgument,
    InvalidField,
    FieldMismatch,
    DegenerateForm,
    NonSymmetric,
    NotAUnit,
    VerificationFailed,
    NotCoprime,
    NotPointed,
    InseparablePolynomial,
    UnsupportedTensor,
    UnsupportedSym,
    CharacteristicConstraint,
    NotSymmetric,
    WrongDegree,
    ParityViolation,
    Overflow,
    ParseError,
};

/// Name of the error kind as it appears in CLI output and JSON payloads.
std::string_view error_name(ErrorKind kind) noexcept;

/// Domain error raised by every module. The CLI maps it to exit code 2.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

   private:
    ErrorKind kind_;
};

}  // namespace gwcalc

#endif
