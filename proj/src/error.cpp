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

#include "fermatrc/error.hpp"

namespace fermatrc {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::AllZero: return "AllZero";
        case ErrorKind::CertificateFailure: return "CertificateFailure";
        case ErrorKind::NotInModule: return "NotInModule";
        case ErrorKind::NotOnHypersurface: return "NotOnHypersurface";
        case ErrorKind::CommonZero: return "CommonZero";
        case ErrorKind::ConstantMap: return "ConstantMap";
        case ErrorKind::BadRoot: return "BadRoot";
        case ErrorKind::BadScaling: return "BadScaling";
        case ErrorKind::TwistOutOfRange: return "TwistOutOfRange";
        case ErrorKind::NoRoots: return "NoRoots";
        case ErrorKind::DegreeNotDivisible: return "DegreeNotDivisible";
        case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
        case ErrorKind::UsageError: return "UsageError";
    }
    return "Unknown";
}

}  // namespace fermatrc
