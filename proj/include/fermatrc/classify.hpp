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
#include <utility>
#include <vector>

#include "fermatrc/fermat.hpp"
#include "fermatrc/splitbundle.hpp"

namespace fermatrc::classify {

using splitbundle::SplittingType;

struct ClassificationReport {
    SplittingType splitting_TX;
    SplittingType splitting_F;
    SplittingType splitting_omega_P;
    bool free = false;
    bool very_free = false;
    long h0_TX = 0;
    long h1_TX = 0;
    long chi = 0;
    // Only defined on X_{d,d}.
    std::optional<bool> in_forbidden_window;
};

ClassificationReport classify(const fermat::Curve& curve);

// Half-open windows (lo, hi] of degrees in which no very free curve exists on
// X_{d,d}, d = p^r + 1.
struct WindowModel {
    int pr = 0;
    int N = 0;
    std::vector<std::pair<int, int>> windows;
    int n0_bound = 0;

    bool forbidden(int e) const noexcept;
    std::vector<int> allowed_up_to(int max_e) const;
};

// pr must be a prime power >= 3.
WindowModel forbidden_windows(int pr);

// The splitting of f^*F forced by a balanced f^*Omega^1_{P^N}.
struct BalancedPrediction {
    int a = 0;
    int l = 0;
    int l_prime = 0;
    int b1 = 0;
    int b2 = 0;
    SplittingType predicted_F_splitting;
};

BalancedPrediction balanced_model(int e, int N, int pr);

struct TangentReport {
    long h0_TX = 0;
    long cone_dim = 0;
    long expected = 0;
    bool jump = false;
};

// expected is chi(f^*T_X) = e(N+1-d) + N - 1, which is d + e - 1 when N = d.
TangentReport tangent_report(const fermat::Curve& curve);

struct VanishingProbe {
    bool all_vanish = true;
    int trials = 0;
    std::vector<int> exponents;  // the t-exponents j*p^r - 1 that were checked
    std::optional<std::vector<forms::Form>> counterexample;
    std::optional<int> nonvanishing_exponent;
};

// Random (N+1)-tuples of degree-e forms (not constrained to X): do the
// coefficients of t^(j p^r - 1), j = 1..e, of sum f_i^d always vanish?
VanishingProbe coefficient_vanishing_probe(const fermat::FermatParams& params, int e, int trials, std::uint64_t seed);

}  // namespace fermatrc::classify
