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

#include "doctest.h"
#include "fermatrc/classify.hpp"
#include "fermatrc/error.hpp"

using namespace fermatrc;
using forms::Form;
using ff::Field;

namespace {

Form F(const Field& k, std::vector<ff::Fe> c) { return Form(k, std::move(c)); }

// Windows straight from the inequalities mN < e <= (m+1)(N-1), 0 <= m <= N-3, N = pr + 1.
bool oracle_forbidden(int e, int pr) {
    const int N = pr + 1;
    for (int m = 0; m <= N - 3 && m * N < e; ++m)
        if (e <= (m + 1) * (N - 1)) return true;
    return false;
}

}  // namespace

TEST_CASE("window examples") {
    const auto w4 = classify::forbidden_windows(4);
    CHECK(w4.N == 5);
    CHECK(w4.windows == std::vector<std::pair<int, int>>{{0, 4}, {5, 8}, {10, 12}});
    CHECK(w4.allowed_up_to(15) == std::vector<int>{5, 9, 10, 13, 14, 15});
    CHECK(w4.n0_bound == 12);
    const auto w3 = classify::forbidden_windows(3);
    CHECK(w3.windows == std::vector<std::pair<int, int>>{{0, 3}, {4, 6}});
    CHECK(w3.allowed_up_to(9) == std::vector<int>{4, 7, 8, 9});
    CHECK_THROWS_AS(classify::forbidden_windows(6), Error);
    CHECK_THROWS_AS(classify::forbidden_windows(2), Error);
}

TEST_CASE("windows match the defining inequalities") {
    for (int pr : {3, 4, 5, 7, 8, 9, 11, 16}) {
        const auto model = classify::forbidden_windows(pr);
        int top = 0;
        for (const auto& [lo, hi] : model.windows) top = std::max(top, hi);
        CHECK(top == (model.N - 2) * (model.N - 1));
        CHECK(model.n0_bound == top);
        for (int e = 1; e <= 3 * pr * pr; ++e) CHECK(model.forbidden(e) == oracle_forbidden(e, pr));
    }
}

TEST_CASE("balanced model examples") {
    auto b = classify::balanced_model(9, 5, 4);
    CHECK(b.a == 10);
    CHECK(b.l == 1);
    CHECK(b.l_prime == 4);
    CHECK(b.b1 == 5);
    CHECK(b.b2 == 1);
    CHECK(b.predicted_F_splitting.summands == std::vector<int>{5, 1, 1, 1, 1});
    b = classify::balanced_model(8, 5, 4);
    CHECK(b.b2 == 0);
    CHECK(b.l_prime == 3);
    b = classify::balanced_model(10, 5, 4);
    CHECK(b.l_prime == 0);
    CHECK(b.predicted_F_splitting.summands == std::vector<int>(5, 2));
}

TEST_CASE("balanced model degree bookkeeping") {
    for (int pr : {3, 4, 5, 8})
        for (int N = 3; N <= 9; ++N)
            for (int e = 1; e <= 30; ++e) {
                const auto b = classify::balanced_model(e, N, pr);
                CHECK(b.l + b.l_prime == N);
                CHECK(b.predicted_F_splitting.rank() == N);
                // deg f^*F = deg f^*T_X = e(N + 1 - d)
                CHECK(b.predicted_F_splitting.degree() == e * (N - pr));
            }
}

TEST_CASE("classification of the X_{4,4} line") {
    const fermat::FermatParams params(3, 1, 4);
    const auto line = fermat::make_line(params, 4, 4);
    const auto report = classify::classify(line);
    CHECK(report.splitting_TX.summands == std::vector<int>{2, 1, -2});
    CHECK_FALSE(report.free);
    CHECK_FALSE(report.very_free);
    CHECK(report.h0_TX == 5);
    CHECK(report.h1_TX == 1);
    CHECK(report.chi == 4);
    REQUIRE(report.in_forbidden_window);
    CHECK(*report.in_forbidden_window);

    const auto t = classify::tangent_report(line);
    CHECK(t.h0_TX == 5);
    CHECK(t.expected == 4);
    CHECK(t.cone_dim == t.h0_TX + 1);
    CHECK(t.jump);

    const auto off_diagonal = classify::classify(fermat::lift(line));
    CHECK_FALSE(off_diagonal.in_forbidden_window);
    CHECK(off_diagonal.chi == 1 * (6 - 4) + 5 - 1);
}

TEST_CASE("cone dimension tracks h0 on covers") {
    const fermat::FermatParams params(3, 1, 4);
    const Field& k = params.field();
    const auto line = fermat::make_line(params, 4, 4);
    for (const auto& [phi0, phi1] : std::vector<std::pair<Form, Form>>{
             {F(k, {1, 0, 0}), F(k, {0, 0, 1})}, {F(k, {1, 1, 0}), F(k, {0, 5, 1})}, {F(k, {1, 0, 0, 2}), F(k, {0, 1, 0, 0})}}) {
        const auto curve = fermat::compose_cover(line, phi0, phi1);
        const auto t = classify::tangent_report(curve);
        CHECK(t.cone_dim == t.h0_TX + 1);
        CHECK(t.expected == params.d() + curve.e() - 1);
    }
}

TEST_CASE("coefficient vanishing probe") {
    const auto a = classify::coefficient_vanishing_probe(fermat::FermatParams(2, 2, 5), 2, 100, 1);
    CHECK(a.all_vanish);
    CHECK(a.trials == 100);
    CHECK(a.exponents == std::vector<int>{3, 7});
    const auto b = classify::coefficient_vanishing_probe(fermat::FermatParams(3, 1, 4), 1, 100, 1);
    CHECK(b.all_vanish);
    const auto c = classify::coefficient_vanishing_probe(fermat::FermatParams(3, 1, 4), 3, 100, 1);
    CHECK_FALSE(c.all_vanish);
    CHECK(c.counterexample);
    CHECK(c.nonvanishing_exponent);
    const auto again = classify::coefficient_vanishing_probe(fermat::FermatParams(3, 1, 4), 3, 100, 1);
    CHECK(again.counterexample == c.counterexample);
}
