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

#include "fermatrc/ff.hpp"

#include <algorithm>
#include <string>

#include "fermatrc/error.hpp"

namespace fermatrc::ff {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Poly = std::vector<u64>;  // coefficients over F_p, low-to-high

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<u128>(a) * b) % p); }
u64 addmod(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 result = 1 % p;
    while (e > 0) {
        if (e & 1) result = mulmod(result, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return result;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b (b nonzero, trimmed).
Poly poly_mod(Poly a, const Poly& b, u64 p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const u64 lead_inv = invmod(b.back(), p);
    while (a.size() > db && !a.empty()) {
        const u64 factor = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = submod(a[shift + i], mulmod(factor, b[i], p), p);
        trim(a);
    }
    return a;
}

std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, u64 p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    Poly quotient(a.size() > db ? a.size() - db : 0, 0);
    const u64 lead_inv = invmod(b.back(), p);
    while (a.size() > db && !a.empty()) {
        const u64 factor = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - db;
        quotient[shift] = factor;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = submod(a[shift + i], mulmod(factor, b[i], p), p);
        trim(a);
    }
    return {quotient, a};
}

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = addmod(out[i + j], mulmod(a[i], b[j], p), p);
    }
    return out;
}

Poly poly_sub(Poly a, const Poly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
    trim(a);
    return a;
}

bool checked_pow(u64 base, unsigned exponent, u64& out) {
    out = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        if (__builtin_mul_overflow(out, base, &out)) return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t p) noexcept {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (u64 d = 3; d <= p / d; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> modulus) {
    Poly f(modulus.begin(), modulus.end());
    trim(f);
    if (f.size() < 2) return false;
    const unsigned n = static_cast<unsigned>(f.size() - 1);
    for (unsigned deg = 1; deg <= n / 2; ++deg) {
        u64 count = 0;
        if (!checked_pow(p, deg, count)) return false;  // unreachable for q < 2^64
        Poly g(deg + 1, 0);
        g[deg] = 1;
        for (u64 code = 0; code < count; ++code) {
            u64 c = code;
            for (unsigned i = 0; i < deg; ++i) {
                g[i] = c % p;
                c /= p;
            }
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> find_irreducible(std::uint64_t p, unsigned n) {
    if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
    if (n == 0) fail(ErrorKind::InvalidArgument, "extension degree must be at least 1");
    u64 q = 0;
    if (!checked_pow(p, n, q)) fail(ErrorKind::InvalidArgument, "field size p^n does not fit in 64 bits");
    Poly candidate(n + 1, 0);
    candidate[n] = 1;
    const u64 lower_count = q;  // p^n encodings of the n lower coefficients
    for (u64 code = 0; code < lower_count; ++code) {
        u64 c = code;
        for (unsigned i = 0; i < n; ++i) {
            candidate[i] = c % p;
            c /= p;
        }
        if (is_irreducible(p, candidate)) return candidate;
    }
    fail(ErrorKind::InvalidArgument, "no irreducible polynomial found");  // unreachable
}

Field::Field(std::uint64_t p, unsigned n) : Field(p, n, find_irreducible(p, n)) {}

Field::Field(std::uint64_t p, unsigned n, std::vector<std::uint64_t> modulus) {
    if (!is_prime(p)) fail(ErrorKind::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
    if (n == 0) fail(ErrorKind::InvalidArgument, "extension degree must be at least 1");
    u64 q = 0;
    if (!checked_pow(p, n, q)) fail(ErrorKind::InvalidArgument, "field size p^n does not fit in 64 bits");
    if (modulus.size() != n + 1) fail(ErrorKind::InvalidArgument, "modulus must have n+1 coefficients");
    for (u64 c : modulus) {
        if (c >= p) fail(ErrorKind::InvalidArgument, "modulus coefficient out of range");
    }
    if (modulus.back() != 1) fail(ErrorKind::InvalidArgument, "modulus must be monic");
    if (!is_irreducible(p, modulus)) fail(ErrorKind::InvalidArgument, "modulus is reducible");

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->n = n;
    impl->q = q;
    impl->modulus = std::move(modulus);
    impl_ = impl;
    if (q <= kTableLimit) {
        auto tabulated = std::make_shared<Impl>(*impl);
        build_tables(*tabulated);
        impl_ = tabulated;
    }
}

void Field::build_tables(Impl& impl) const {
    const u64 q = impl.q;
    impl.add_table.resize(q * q);
    impl.mul_table.resize(q * q);
    impl.neg_table.resize(q);
    impl.inv_table.resize(q);
    impl.frob_table.resize(q);
    for (u64 a = 0; a < q; ++a) {
        for (u64 b = 0; b < q; ++b) {
            impl.add_table[a * q + b] = static_cast<std::uint16_t>(add_slow(a, b));
            impl.mul_table[a * q + b] = static_cast<std::uint16_t>(mul_slow(a, b));
        }
        impl.neg_table[a] = static_cast<std::uint16_t>(neg_slow(a));
        impl.inv_table[a] = a == 0 ? 0 : static_cast<std::uint16_t>(inv_slow(a));
    }
    for (u64 a = 0; a < q; ++a) {
        u64 r = 1;
        for (u64 i = 0; i < impl.p; ++i) r = impl.mul_table[r * q + a];
        impl.frob_table[a] = static_cast<std::uint16_t>(r);
    }
    impl.tabulated = true;
}

std::vector<std::uint64_t> Field::digits(Fe a) const {
    std::vector<u64> out(n(), 0);
    for (unsigned i = 0; i < n(); ++i) {
        out[i] = a % p();
        a /= p();
    }
    return out;
}

Fe Field::from_digits(std::span<const std::uint64_t> digits) const {
    Fe out = 0;
    for (std::size_t i = digits.size(); i-- > 0;) out = out * p() + digits[i] % p();
    return out;
}

Fe Field::from_int(std::int64_t value) const noexcept {
    const auto pp = static_cast<std::int64_t>(std::min<u64>(p(), static_cast<u64>(INT64_MAX)));
    std::int64_t r = value % pp;
    if (r < 0) r += pp;
    return static_cast<Fe>(r);
}

Fe Field::add_slow(Fe a, Fe b) const {
    const u64 pp = p();
    if (n() == 1) return addmod(a, b, pp);
    Fe out = 0, scale = 1;
    for (unsigned i = 0; i < n(); ++i) {
        out += addmod(a % pp, b % pp, pp) * scale;
        a /= pp;
        b /= pp;
        scale *= pp;
    }
    return out;
}

Fe Field::neg_slow(Fe a) const {
    const u64 pp = p();
    if (n() == 1) return a == 0 ? 0 : pp - a;
    Fe out = 0, scale = 1;
    for (unsigned i = 0; i < n(); ++i) {
        const u64 d = a % pp;
        out += (d == 0 ? 0 : pp - d) * scale;
        a /= pp;
        scale *= pp;
    }
    return out;
}

Fe Field::mul_slow(Fe a, Fe b) const {
    const u64 pp = p();
    if (n() == 1) return mulmod(a, b, pp);
    Poly prod = poly_mul(digits(a), digits(b), pp);
    prod = poly_mod(prod, modulus(), pp);
    return from_digits(prod);
}

Fe Field::inv_slow(Fe a) const {
    const u64 pp = p();
    if (n() == 1) return invmod(a, pp);
    // Invariant: r_i == s_i * a (mod modulus).
    Poly r0(modulus()), r1 = digits(a);
    Poly s0, s1{1};
    trim(r1);
    while (r1.size() > 1) {
        auto [quot, rem] = poly_divmod(r0, r1, pp);
        Poly s2 = poly_sub(s0, poly_mul(quot, s1, pp), pp);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant because the modulus is irreducible.
    const u64 c = invmod(r1[0], pp);
    for (auto& coeff : s1) coeff = mulmod(coeff, c, pp);
    s1 = poly_mod(s1, modulus(), pp);
    return from_digits(s1);
}

Fe Field::inv(Fe a) const {
    if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
    if (impl_->tabulated) return impl_->inv_table[a];
    return inv_slow(a);
}

Fe Field::pow(Fe a, std::uint64_t exponent) const {
    Fe result = 1;
    while (exponent > 0) {
        if (exponent & 1) result = mul(result, a);
        a = mul(a, a);
        exponent >>= 1;
    }
    return result;
}

Fe Field::frobenius(Fe a, std::uint64_t k) const {
    k %= n();
    for (u64 i = 0; i < k; ++i) a = impl_->tabulated ? impl_->frob_table[a] : pow(a, p());
    return a;
}

void Field::sub_scaled(std::span<Fe> dst, std::span<const Fe> src, Fe factor) const {
    if (factor == 0) return;
    const std::size_t len = std::min(dst.size(), src.size());
    if (impl_->tabulated) {
        const u64 q = impl_->q;
        const std::uint16_t* mrow = impl_->mul_table.data() + neg(factor) * q;
        const std::uint16_t* add = impl_->add_table.data();
        for (std::size_t i = 0; i < len; ++i) {
            if (src[i] != 0) dst[i] = add[dst[i] * q + mrow[src[i]]];
        }
        return;
    }
    for (std::size_t i = 0; i < len; ++i) {
        if (src[i] != 0) dst[i] = sub(dst[i], mul(factor, src[i]));
    }
}

void Field::scale(std::span<Fe> v, Fe factor) const {
    for (auto& x : v) x = mul(x, factor);
}

}  // namespace fermatrc::ff
