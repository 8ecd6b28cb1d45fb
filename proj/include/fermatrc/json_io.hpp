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

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "fermatrc/classify.hpp"
#include "fermatrc/error.hpp"
#include "fermatrc/search.hpp"

namespace fermatrc::json_io {

using nlohmann::json;

inline constexpr const char* kSchema = "fermat-rc/1";

json field_to_json(const ff::Field& field);
// Throws UsageError on malformed input.
ff::Field field_from_json(const json& j);

// Coefficients low t-degree first, `degree + 1` of them (ZERO is all zeros).
json form_to_json(const forms::Form& form, int degree);

// A curve file before the on-X check: the RNC fixtures of P^N do not lie on X.
struct CurveFile {
    fermat::FermatParams params;
    int e = 0;
    std::vector<forms::Form> forms;
};

json curve_to_json(const fermat::Curve& curve);
// Shape and field checks only. Throws UsageError.
CurveFile curve_file_from_json(const json& j);
// curve_file_from_json followed by fermat::validate.
fermat::Curve curve_from_json(const json& j);

json splitting_to_json(const splitbundle::SplittingType& splitting, const std::string& bundle);
json report_to_json(const classify::ClassificationReport& report);
json windows_to_json(const classify::WindowModel& model, int max_e);
json balanced_to_json(const classify::BalancedPrediction& prediction, int e, int N, int pr);
json tangent_to_json(const classify::TangentReport& report);
json probe_to_json(const classify::VanishingProbe& probe, const fermat::FermatParams& params, int e);
json survey_row_to_json(const search::SurveyRow& row);
json error_to_json(ErrorKind kind, const std::string& message);

// Splits a prime power q = p^r; throws InvalidArgument otherwise.
std::pair<std::uint64_t, unsigned> split_prime_power(std::uint64_t q);

}  // namespace fermatrc::json_io
