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

#include "fermatrc/forms.hpp"

namespace fermatrc {

// SplitMix64 (Steele, Lea and Flood). Fixed so that seeded fixtures do not
// depend on the standard library's generators.
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t uniform(std::uint64_t bound) noexcept {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

   private:
    std::uint64_t state_;
};

// Uniformly random form of the given degree (may come out as ZERO).
inline forms::Form random_form(const ff::Field& field, int degree, SplitMix64& rng) {
    std::vector<ff::Fe> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : coeffs) c = rng.uniform(field.q());
    return forms::Form(field, std::move(coeffs));
}

}  // namespace fermatrc
