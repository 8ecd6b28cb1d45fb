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
#include <optional>
#include <string>
#include <vector>

#include "fermatrc/classify.hpp"
#include "fermatrc/fermat.hpp"

namespace fermatrc::search {

using fermat::Curve;
using fermat::FermatParams;

enum class Strategy { lines, covers, alternating, exhaustive };

Strategy parse_strategy(const std::string& name);
std::string to_string(Strategy strategy);

struct SearchConfig {
    FermatParams params;
    int e = 1;
    std::uint64_t seed = 0;
    long max_iter = 1000;
    Strategy strategy = Strategy::alternating;
};

// Canonical orbit representatives of the lines (.., s, .., a s, .., t, .., b t, ..)
// over all disjoint pair patterns and all roots a, b of a^d = -1, sorted.
// Throws NoRoots when the field has no such roots.
std::vector<Curve> enumerate_standard_lines(const FermatParams& params);

// Best effort: freeze the Frobenius block of the current tuple, draw a random
// element of the kernel of sum_i f_i^(p^r) x_i, repeat until a tuple lies in
// the kernel of its own block and passes validation.
std::optional<Curve> alternating_solve(const SearchConfig& config);

// `count` curves base o (phi0, phi1) with random base-point-free phi of degree
// config.e / base.e(). Throws DegreeNotDivisible.
std::vector<Curve> random_cover_family(const SearchConfig& config, const Curve& base, int count);

// Number of coefficient tuples with first nonzero coefficient 1, or nothing
// when it exceeds 2^64.
std::optional<std::uint64_t> exhaustive_space_size(const FermatParams& params, int e);
constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 32;

// Walks the normalized coefficient space in order (at most max_iter tuples)
// and returns the canonical representatives of the curves found. Throws
// SearchSpaceTooLarge above kExhaustiveLimit.
std::vector<Curve> exhaustive_scan(const SearchConfig& config);

// Dispatch on config.strategy. `covers` needs a base curve; when none is given
// the first standard line is used.
std::vector<Curve> run(const SearchConfig& config, const std::optional<Curve>& base = std::nullopt);

struct SurveyRow {
    int e = 0;
    std::string source;
    Curve curve;
    classify::ClassificationReport report;
};

// Generates up to budget / (e_max - e_min + 1) curves per degree from all
// strategies and classifies them (in parallel when workers != 1; 0 picks the
// hardware concurrency). Row order depends only on the arguments.
std::vector<SurveyRow> survey(const FermatParams& params, int e_min, int e_max, long budget, std::uint64_t seed = 0,
                              unsigned workers = 0);

}  // namespace fermatrc::search
