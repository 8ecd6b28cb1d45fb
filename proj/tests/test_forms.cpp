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

#include <algorithm>

#include "doctest.h"
#include "fermatrc/error.hpp"
#include "fermatrc/forms.hpp"
#include "fermatrc/rng.hpp"

using namespace fermatrc;
using forms::Form;
using ff::Field;

namespace {

Form F(const Field& k, std::vector<ff::Fe> c) { return Form(k, std::move(c)); }

Form naive_power(const Form& f, std::uint64_t k) {
    Form out = Form::monomial(f.field(), 0, 0);
    for (std::uint64_t i = 0; i < k; ++i) out = out * f;
    return out;
}

// Nonzero form of the given degree.
Form random_nonzero(const Field& k, int degree, SplitMix64& rng) {
    for (;;) {
        Form f = random_form(k, degree, rng);
        if (!f.is_zero()) return f;
    }
}

}  // namespace

TEST_CASE("form arithmetic examples") {
    const Field k(3, 1);
    const Form s_plus_t = F(k, {1, 1});
    CHECK(s_plus_t * s_plus_t == F(k, {1, 2, 1}));
    const Form sum = s_plus_t + F(k, {2, 2});
    CHECK(sum.is_zero());
    CHECK(sum.degree() == 1);
    const Form z = Form::zero(k, 3);
    CHECK((s_plus_t * z).is_zero());
    CHECK((s_plus_t * z).degree() == 4);
    CHECK((z + F(k, {1, 0, 0, 2})) == F(k, {1, 0, 0, 2}));
    CHECK_THROWS_AS(s_plus_t + F(k, {1, 1, 1}), Error);
    CHECK(F(k, {0, 0, 0}).is_zero());
    CHECK(F(k, {0, 1, 0}).t_degree() == 1);
    CHECK(F(k, {0, 1, 0}).s_valuation() == 1);
}

TEST_CASE("freshman's dream examples") {
    const Field k2(2, 1), k3(3, 1);
    CHECK(forms::frob_power(F(k2, {1, 1}), 1) == F(k2, {1, 0, 1}));
    CHECK(forms::frob_power(F(k3, {1, 2}), 1) == F(k3, {1, 0, 0, 2}));
}

TEST_CASE("frob_power equals naive powering, 1000 seeded cases") {
    SplitMix64 rng(77);
    const std::vector<std::pair<Field, unsigned>> cases = {{Field(3, 2), 1}, {Field(2, 4), 2}, {Field(5, 2), 1},
                                                           {Field(2, 2), 1}};
    for (int i = 0; i < 1000; ++i) {
        const auto& [k, r] = cases[i % cases.size()];
        const int degree = static_cast<int>(rng.uniform(5));
        const Form f = random_form(k, degree, rng);
        std::uint64_t pr = 1;
        for (unsigned j = 0; j < r; ++j) pr *= k.p();
        const Form lhs = forms::frob_power(f, r);
        const Form rhs = naive_power(f, pr);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("frob_power is additive and multiplicative") {
    const Field k(3, 2);
    SplitMix64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const Form f = random_form(k, 3, rng), g = random_form(k, 3, rng), h = random_form(k, 2, rng);
        CHECK(forms::frob_power(f + g, 1) == forms::frob_power(f, 1) + forms::frob_power(g, 1));
        CHECK(forms::frob_power(f * h, 1) == forms::frob_power(f, 1) * forms::frob_power(h, 1));
    }
}

TEST_CASE("degree of a product") {
    const Field k(5, 1);
    SplitMix64 rng(9);
    for (int i = 0; i < 100; ++i) {
        const Form f = random_nonzero(k, 3, rng), g = random_nonzero(k, 4, rng);
        const Form h = f * g;
        CHECK(!h.is_zero());
        CHECK(h.degree() == 7);
    }
}

TEST_CASE("gcd examples") {
    const Field k3(3, 1), k2(2, 1);
    const Form s = F(k3, {1, 0}), t = F(k3, {0, 1});
    const Form st = F(k3, {0, 1, 0}), s2 = F(k3, {1, 0, 0});
    std::vector<Form> a{st, s2};
    CHECK(forms::form_gcd(a) == s);
    std::vector<Form> b{s, t};
    CHECK(forms::form_gcd(b).degree() == 0);
    std::vector<Form> c{F(k2, {1, 0, 1}), F(k2, {1, 1, 0})};
    CHECK(forms::form_gcd(c) == F(k2, {1, 1}));
    std::vector<Form> zeros{Form::zero(k3, 2), Form::zero(k3, 2)};
    CHECK_THROWS_AS(forms::form_gcd(zeros), Error);
}

TEST_CASE("gcd divides, and ignores order and scaling") {
    const Field k(3, 2);
    SplitMix64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const Form common = random_nonzero(k, static_cast<int>(rng.uniform(3)), rng);
        std::vector<Form> in;
        for (int j = 0; j < 3; ++j) in.push_back(common * random_nonzero(k, 2, rng));
        const Form g = forms::form_gcd(in);
        for (const auto& f : in) CHECK(forms::divides(g, f));
        CHECK(forms::divides(common, g));
        std::vector<Form> shuffled{in[2], in[0], in[1]};
        CHECK(forms::form_gcd(shuffled) == g);
        std::vector<Form> scaled{forms::scalar_mul(5, in[0]), in[1], forms::scalar_mul(7, in[2])};
        CHECK(forms::form_gcd(scaled) == g);
        CHECK(g.degree() >= common.degree());
    }
}

TEST_CASE("substitution") {
    const Field k(3, 1);
    const Form f = F(k, {1, 2});  // s + 2t
    const Form out = forms::substitute(f, F(k, {1, 0, 0}), F(k, {0, 0, 1}));
    CHECK(out == F(k, {1, 0, 2}));
    // (s+t)^2 composed with (s, s+t) is (2s+t)^2 = s^2 + st + t^2 over GF(3)
    const Form g = F(k, {1, 2, 1});
    CHECK(forms::substitute(g, F(k, {1, 0}), F(k, {1, 1})) == F(k, {1, 1, 1}));
}
