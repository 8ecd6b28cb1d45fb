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
#include <memory>
#include <span>
#include <vector>

namespace fermatrc::ff {

// A field element is its canonical encoding sum(digit_i * p^i) in [0, q), where
// digit_i is the coefficient of x^i in the polynomial representative.
using Fe = std::uint64_t;

bool is_prime(std::uint64_t p) noexcept;

// Trial division by every monic polynomial of degree <= n/2.
// `modulus` holds coefficients low-to-high.
bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> modulus);

// The monic irreducible of degree n with the smallest base-p encoding of its
// coefficient vector (constant term first).
std::vector<std::uint64_t> find_irreducible(std::uint64_t p, unsigned n);

/*
    GF(p^n) with a fixed modulus. Immutable and cheap to copy; copies share
    the same arithmetic tables. Fields with q <= kTableLimit use full
    addition/multiplication tables, larger ones fall back to digit arithmetic.
*/
class Field {
   public:
    static constexpr std::uint64_t kTableLimit = 1024;

    Field(std::uint64_t p, unsigned n);
    Field(std::uint64_t p, unsigned n, std::vector<std::uint64_t> modulus);

    std::uint64_t p() const noexcept { return impl_->p; }
    unsigned n() const noexcept { return impl_->n; }
    std::uint64_t q() const noexcept { return impl_->q; }
    const std::vector<std::uint64_t>& modulus() const noexcept { return impl_->modulus; }

    bool contains(Fe a) const noexcept { return a < impl_->q; }

    Fe add(Fe a, Fe b) const {
        if (impl_->tabulated) return impl_->add_table[a * impl_->q + b];
        return add_slow(a, b);
    }
    Fe neg(Fe a) const {
        if (impl_->tabulated) return impl_->neg_table[a];
        return neg_slow(a);
    }
    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
    Fe mul(Fe a, Fe b) const {
        if (impl_->tabulated) return impl_->mul_table[a * impl_->q + b];
        return mul_slow(a, b);
    }
    // Extended Euclid on polynomial representatives; throws DivisionByZero on 0.
    Fe inv(Fe a) const;
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
    Fe pow(Fe a, std::uint64_t exponent) const;
    // a^(p^k).
    Fe frobenius(Fe a, std::uint64_t k) const;

    // dst[i] -= factor * src[i]
    void sub_scaled(std::span<Fe> dst, std::span<const Fe> src, Fe factor) const;
    void scale(std::span<Fe> v, Fe factor) const;

    // Image of an integer under Z -> F_p -> GF(q).
    Fe from_int(std::int64_t value) const noexcept;
    std::vector<std::uint64_t> digits(Fe a) const;
    Fe from_digits(std::span<const std::uint64_t> digits) const;

    friend bool operator==(const Field& lhs, const Field& rhs) noexcept {
        return lhs.impl_ == rhs.impl_ ||
               (lhs.p() == rhs.p() && lhs.n() == rhs.n() && lhs.modulus() == rhs.modulus());
    }

   private:
    struct Impl {
        std::uint64_t p = 0;
        unsigned n = 0;
        std::uint64_t q = 0;
        std::vector<std::uint64_t> modulus;
        bool tabulated = false;
        std::vector<std::uint16_t> add_table, mul_table, neg_table, inv_table, frob_table;
    };

    Fe add_slow(Fe a, Fe b) const;
    Fe neg_slow(Fe a) const;
    Fe mul_slow(Fe a, Fe b) const;
    Fe inv_slow(Fe a) const;
    void build_tables(Impl& impl) const;

    std::shared_ptr<const Impl> impl_;
};

}  // namespace fermatrc::ff
