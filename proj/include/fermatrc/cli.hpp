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

#include <ostream>
#include <string>
#include <vector>

namespace fermatrc::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kCertificateFailure = 2, kUsageError = 3 };

// `args` excludes the program name. Writes JSON (or JSON lines for survey) to
// `out`, including error payloads.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace fermatrc::cli
