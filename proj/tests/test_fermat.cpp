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

#include <functional>

#include "doctest.h"
#include "fermatrc/error.hpp"
#include "fermatrc/fermat.hpp"
#include "fermatrc/rng.hpp"
#include "fermatrc/splitbundle.hpp"

using namespace fermatrc;
using fermat::FermatParams;
using forms::Form;
using ff::Field;

namespace {

Form F(const Field& k, std::vector<ff::Fe> c) { return Form(k, std::move(c)); }

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& err) {
        return err.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvalidArgument;
}

Form naive_sum_of_powers(const std::vector<Form>& forms, int d) {
    Form out = Form::zero(forms.front().field(), forms.front().degree() * d);
    for (const auto& f : forms) out = out + forms::pow(f, static_cast<unsigned>(d));
    return out;
}

}  // namespace

TEST_CASE("parameters") {
    const FermatParams params(3, 1, 4);
    CHECK(params.d() == 4);
    CHECK(params.field().q() == 9);
    CHECK(kind_of([] { FermatParams(2, 1, 4); }) == ErrorKind::InvalidArgument);  // d = 3
    CHECK(kind_of([] { FermatParams(3, 1, 2); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { FermatParams(4, 1, 4); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { FermatParams(3, 1, 4, Field(2, 2)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("validation examples") {
    const FermatParams params(3, 1, 4);
    const Field& k = params.field();
    const Form s = F(k, {1, 0}), t = F(k, {0, 1}), z = Form::zero(k, 1);
    const Form as = F(k, {4, 0}), bt = F(k, {0, 4});
    CHECK_NOTHROW(fermat::validate(params, {s, as, t, bt, z}));
    CHECK(kind_of([&] { fermat::validate(params, {s, t, z, z, z}); }) == ErrorKind::NotOnHypersurface);
    const Form s2 = F(k, {1, 0, 0}), st = F(k, {0, 1, 0}), z2 = Form::zero(k, 2);
    CHECK(kind_of([&] { fermat::validate(params, {s2, st, z2, z2, z2}); }) == ErrorKind::CommonZero);
    CHECK(kind_of([&] { fermat::validate(params, {s, z, z, z, z}); }) == ErrorKind::ConstantMap);
    CHECK(kind_of([&] { fermat::validate(params, {s, as, t, bt}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("expand_F agrees with naive powering") {
    const FermatParams params(3, 1, 4);
    const Field& k = params.field();
    CHECK(fermat::expand_F(params, std::vector<Form>{F(k, {1, 0}), F(k, {0, 1}), Form::zero(k, 1),
                                                      Form::zero(k, 1), Form::zero(k, 1)}) ==
          F(k, {1, 0, 0, 0, 1}));
    SplitMix64 rng(8);
    for (const auto& p : {FermatParams(3, 1, 4), FermatParams(2, 2, 5), FermatParams(5, 1, 3)}) {
        for (int i = 0; i < 100; ++i) {
            std::vector<Form> tuple;
            const int e = 1 + static_cast<int>(rng.uniform(3));
            for (int j = 0; j <= p.N(); ++j) tuple.push_back(random_form(p.field(), e, rng));
            REQUIRE(fermat::expand_F(p, tuple) == naive_sum_of_powers(tuple, p.d()));
        }
    }
}

TEST_CASE("roots") {
    const Field gf9(3, 2);
    const auto roots = fermat::roots_of_minus_one(gf9, 4);
    CHECK(std::find(roots.begin(), roots.end(), 4) != roots.end());
    CHECK(roots.size() == 4);
    CHECK(std::is_sorted(roots.begin(), roots.end()));
    CHECK(fermat::roots_of_minus_one(Field(2, 2), 5) == std::vector<ff::Fe>{1});
    CHECK(fermat::roots_of_minus_one(fermat::default_field(2, 2), 5).size() == 5);
    CHECK(fermat::roots_of_minus_one(fermat::default_field(5, 1), 6).size() == 6);
    CHECK(fermat::roots_of_unity(gf9, 4).size() == 4);
}

TEST_CASE("lines, covers and lifts") {
    const FermatParams params(3, 1, 4);
    const Field& k = params.field();
    const auto line = fermat::make_line(params, 4, 4);
    CHECK(line.e() == 1);
    CHECK(kind_of([&] { fermat::make_line(params, 1, 4); }) == ErrorKind::BadRoot);
    const auto other = fermat::make_line(params, 4, 4, {{4, 2}, {0, 3}});
    CHECK(other.forms()[4] == F(k, {1, 0}));
    CHECK(other.forms()[1].is_zero());

    const auto double_cover = fermat::compose_cover(line, F(k, {1, 0, 0}), F(k, {0, 0, 1}));
    CHECK(double_cover.e() == 2);
    const auto triple_cover = fermat::compose_cover(line, F(k, {1, 0, 0, 0}), F(k, {0, 0, 0, 1}));
    CHECK(triple_cover.e() == 3);
    CHECK(kind_of([&] { fermat::compose_cover(line, F(k, {1, 0, 0}), F(k, {1, 0, 0})); }) == ErrorKind::CommonZero);

    const auto lifted = fermat::lift(line);
    CHECK(lifted.N() == 5);
    CHECK(lifted.forms().back().is_zero());
    const auto tx = splitbundle::splitting_TX(line), tx_lift = splitbundle::splitting_TX(lifted);
    CHECK(tx_lift.rank() == tx.rank() + 1);
    CHECK(tx_lift.degree() == tx.degree() + line.e());
}

TEST_CASE("automorphisms preserve validity and all splittings") {
    const FermatParams params(3, 1, 4);
    const Field& k = params.field();
    const auto line = fermat::make_line(params, 4, 4);
    const auto curve = fermat::compose_cover(line, F(k, {1, 0, 1}), F(k, {0, 1, 0}));
    const auto units = fermat::roots_of_unity(k, 4);
    SplitMix64 rng(4);
    for (int i = 0; i < 20; ++i) {
        std::vector<int> perm{0, 1, 2, 3, 4};
        for (int j = 4; j > 0; --j) std::swap(perm[j], perm[rng.uniform(j + 1)]);
        std::vector<ff::Fe> scalings;
        for (int j = 0; j < 5; ++j) scalings.push_back(units[rng.uniform(units.size())]);
        const auto image = fermat::act_automorphism(curve, perm, scalings);
        CHECK(image.e() == curve.e());
        CHECK(splitbundle::splitting_TX(image) == splitbundle::splitting_TX(curve));
        CHECK(splitbundle::splitting_F(image) == splitbundle::splitting_F(curve));
        CHECK(splitbundle::splitting_omega_P(image) == splitbundle::splitting_omega_P(curve));
        CHECK(fermat::canonical_representative(image) == fermat::canonical_representative(curve));
    }
    const std::vector<int> perm{0, 1, 2, 3, 4};
    const std::vector<ff::Fe> bad{4, 1, 1, 1, 1};  // (x+1)^4 = -1
    CHECK(kind_of([&] { fermat::act_automorphism(line, perm, bad); }) == ErrorKind::BadScaling);
    const std::vector<int> swap{1, 0, 2, 3, 4};
    const std::vector<ff::Fe> ones{1, 1, 1, 1, 1};
    CHECK_NOTHROW(fermat::act_automorphism(line, swap, ones));
}

TEST_CASE("rational normal curve detection") {
    const Field k(3, 1);
    std::vector<Form> rnc;
    for (int j = 0; j <= 4; ++j) rnc.push_back(Form::monomial(k, 4, j));
    const auto report = fermat::is_rnc(rnc);
    CHECK(report.span_dim == 4);
    CHECK(report.is_rnc);
    const FermatParams params(3, 1, 4);
    const auto line_report = fermat::is_rnc(fermat::make_line(params, 4, 4));
    CHECK(line_report.span_dim == 1);
    CHECK(line_report.is_rnc);
    const std::vector<Form> conic{F(k, {1, 0, 0}), F(k, {0, 1, 0}), F(k, {0, 0, 1}), Form::zero(k, 2),
                                  Form::zero(k, 2)};
    CHECK(fermat::is_rnc(conic).span_dim == 2);
    CHECK(fermat::is_rnc(conic).is_rnc);
    const std::vector<Form> degenerate{F(k, {1, 0, 0}), F(k, {0, 0, 1}), Form::zero(k, 2)};
    CHECK_FALSE(fermat::is_rnc(degenerate).is_rnc);
}
