/*
   Copyright 2026 The fermat-rc Authors

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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fermatrc {

enum class ErrorKind {
    InvalidArgument,
    DivisionByZero,
    DegreeMismatch,
    AllZero,
    CertificateFailure,
    NotInModule,
    NotOnHypersurface,
    CommonZero,
    ConstantMap,
    BadRoot,
    BadScaling,
    TwistOutOfRange,
    NoRoots,
    DegreeNotDivisible,
    SearchSpaceTooLarge,
    UsageError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this type; `kind()` is what the
// CLI serializes into the "kind" field of its error payloads.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace fermatrc
