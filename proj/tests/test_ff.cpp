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

#include <set>
#include <vector>

#include "doctest.h"
#include "fermatrc/error.hpp"
#include "fermatrc/ff.hpp"
#include "fermatrc/rng.hpp"

using namespace fermatrc;
using ff::Fe;
using ff::Field;

namespace {

// Independent oracle: schoolbook product of digit vectors reduced by the modulus.
Fe oracle_mul(const Field& k, Fe a, Fe b) {
    const auto p = k.p();
    const auto n = k.n();
    auto da = k.digits(a), db = k.digits(b);
    std::vector<std::uint64_t> prod(2 * n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const auto& m = k.modulus();
    for (int deg = static_cast<int>(2 * n) - 1; deg >= static_cast<int>(n); --deg) {
        const auto c = prod[deg];
        if (c == 0) continue;
        for (unsigned i = 0; i <= n; ++i) {
            auto& slot = prod[deg - n + i];
            slot = (slot + (p - c) * m[i]) % p;
        }
    }
    prod.resize(n);
    return k.from_digits(prod);
}

}  // namespace

TEST_CASE("primality and irreducible selection") {
    CHECK(ff::is_prime(2));
    CHECK(ff::is_prime(13));
    CHECK_FALSE(ff::is_prime(1));
    CHECK_FALSE(ff::is_prime(9));
    CHECK(ff::find_irreducible(3, 2) == std::vector<std::uint64_t>{1, 0, 1});
    CHECK(ff::find_irreducible(2, 2) == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(ff::find_irreducible(5, 1) == std::vector<std::uint64_t>{0, 1});
    CHECK(ff::find_irreducible(7, 1) == std::vector<std::uint64_t>{0, 1});
    std::vector<std::uint64_t> reducible{1, 0, 1};  // x^2+1 = (x+1)^2 over GF(2)
    CHECK_FALSE(ff::is_irreducible(2, reducible));
}

TEST_CASE("field construction checks its modulus") {
    CHECK_THROWS_AS(Field(4, 1), Error);
    CHECK_THROWS_AS(Field(2, 2, {1, 0, 1}), Error);
    CHECK_THROWS_AS(Field(3, 2, {1, 0, 2}), Error);  // not monic
    CHECK_THROWS_AS(Field(3, 2, {1, 0}), Error);     // wrong length
    CHECK_THROWS_AS(Field(2, 64), Error);            // q does not fit
    CHECK_NOTHROW(Field(3, 2, {2, 2, 1}));           // x^2+2x+2 is irreducible
}

TEST_CASE("GF(9) worked values") {
    const Field k(3, 2);
    CHECK(k.q() == 9);
    CHECK(k.mul(3, 3) == 2);
    CHECK(k.inv(2) == 2);
    CHECK(k.pow(4, 4) == 2);
    CHECK(k.frobenius(3, 1) == 6);
    CHECK(k.frobenius(1, 5) == 1);
    CHECK(k.add(5, 4) == 6);  // (2+x) + (1+x) = 2x
    CHECK_THROWS_AS(k.inv(0), Error);
    try {
        k.inv(0);
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("GF(4) Frobenius squared is the identity") {
    const Field k(2, 2);
    for (Fe a = 0; a < 4; ++a) CHECK(k.frobenius(a, 2) == a);
}

TEST_CASE("encoding round trips") {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {5, 2}, {3, 7}}) {
        const Field k(p, n);
        SplitMix64 rng(11);
        for (int i = 0; i < 200; ++i) {
            const Fe a = rng.uniform(k.q());
            CHECK(k.from_digits(k.digits(a)) == a);
        }
        CHECK(k.mul(1, 7 % k.q()) == 7 % k.q());
        CHECK(k.add(0, 5 % k.q()) == 5 % k.q());
    }
}

TEST_CASE("field axioms and oracle multiplication, tabulated and untabulated") {
    // GF(3^7) = 2187 > 1024 exercises the digit-arithmetic path.
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {5, 2}, {3, 7}, {7, 3}}) {
        const Field k(p, n);
        SplitMix64 rng(2024 + p * 10 + n);
        for (int i = 0; i < 1000; ++i) {
            const Fe a = rng.uniform(k.q()), b = rng.uniform(k.q()), c = rng.uniform(k.q());
            REQUIRE(k.mul(a, b) == oracle_mul(k, a, b));
            REQUIRE(k.add(k.add(a, b), c) == k.add(a, k.add(b, c)));
            REQUIRE(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
            REQUIRE(k.add(a, b) == k.add(b, a));
            REQUIRE(k.mul(a, b) == k.mul(b, a));
            REQUIRE(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
            REQUIRE(k.add(a, k.neg(a)) == 0);
            if (a != 0) {
                REQUIRE(k.mul(a, k.inv(a)) == 1);
                REQUIRE(k.pow(a, k.q() - 1) == 1);
            }
        }
    }
}

TEST_CASE("Frobenius fixes exactly the prime field and closes up after n steps") {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {5, 2}, {2, 6}}) {
        const Field k(p, n);
        std::size_t fixed = 0;
        for (Fe a = 0; a < k.q(); ++a) {
            if (k.frobenius(a, 1) == a) ++fixed;
            CHECK(k.frobenius(a, n) == a);
            CHECK(k.frobenius(a, 1) == k.pow(a, p));
        }
        CHECK(fixed == static_cast<std::size_t>(p));
    }
}

TEST_CASE("sub_scaled matches elementwise arithmetic") {
    const Field k(5, 2);
    SplitMix64 rng(3);
    std::vector<Fe> dst(20), src(20);
    for (auto& x : dst) x = rng.uniform(k.q());
    for (auto& x : src) x = rng.uniform(k.q());
    const Fe factor = 17;
    auto expected = dst;
    for (std::size_t i = 0; i < dst.size(); ++i) expected[i] = k.sub(dst[i], k.mul(factor, src[i]));
    k.sub_scaled(dst, src, factor);
    CHECK(dst == expected);
}
