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
#include <span>
#include <utility>
#include <vector>

#include "fermatrc/ff.hpp"
#include "fermatrc/forms.hpp"

namespace fermatrc::fermat {

using ff::Fe;
using ff::Field;
using forms::Form;

// GF(p^(2r)): the smallest field containing all (p^r+1)-th roots of -1.
Field default_field(std::uint64_t p, unsigned r);

// The Fermat hypersurface X_0^d + ... + X_N^d = 0 in P^N with d = p^r + 1 > 3,
// together with the field its curves are written over.
class FermatParams {
   public:
    FermatParams(std::uint64_t p, unsigned r, int N);
    FermatParams(std::uint64_t p, unsigned r, int N, Field field);

    std::uint64_t p() const noexcept { return p_; }
    unsigned r() const noexcept { return r_; }
    int N() const noexcept { return N_; }
    // p^r
    int pr() const noexcept { return pr_; }
    int d() const noexcept { return pr_ + 1; }
    const Field& field() const noexcept { return field_; }

    FermatParams with_dimension(int N) const { return FermatParams(p_, r_, N, field_); }

    friend bool operator==(const FermatParams& a, const FermatParams& b) noexcept {
        return a.p_ == b.p_ && a.r_ == b.r_ && a.N_ == b.N_ && a.field_ == b.field_;
    }

   private:
    std::uint64_t p_;
    unsigned r_;
    int N_;
    int pr_;
    Field field_;
};

// A degree-e morphism P^1 -> X given by N+1 forms of degree e. Instances only
// come out of validate(), so every Curve is base-point free, non-constant and
// lies on X.
class Curve {
   public:
    const FermatParams& params() const noexcept { return params_; }
    int e() const noexcept { return e_; }
    int N() const noexcept { return params_.N(); }
    const std::vector<Form>& forms() const noexcept { return forms_; }
    const Field& field() const noexcept { return params_.field(); }

    friend bool operator==(const Curve& a, const Curve& b) noexcept {
        return a.e_ == b.e_ && a.params_ == b.params_ && a.forms_ == b.forms_;
    }

   private:
    friend Curve validate(const FermatParams& params, std::vector<Form> forms);
    Curve(FermatParams params, int e, std::vector<Form> forms)
        : params_(std::move(params)), e_(e), forms_(std::move(forms)) {}

    FermatParams params_;
    int e_;
    std::vector<Form> forms_;
};

// Throws ConstantMap, CommonZero or NotOnHypersurface (checked in that order),
// or InvalidArgument for malformed input.
Curve validate(const FermatParams& params, std::vector<Form> forms);

// sum_i f_i^(p^r) * f_i, i.e. sum_i f_i^d.
Form expand_F(const FermatParams& params, std::span<const Form> forms);

// All a with a^d = -1, ascending by encoding.
std::vector<Fe> roots_of_minus_one(const Field& field, std::uint64_t d);
// All a with a^d = 1, ascending by encoding.
std::vector<Fe> roots_of_unity(const Field& field, std::uint64_t d);

// Coordinates (s_pair[0], s_pair[1]) carry (s, alpha*s) and (t_pair[0],
// t_pair[1]) carry (t, beta*t); the remaining coordinates are zero.
struct PairPattern {
    std::pair<int, int> s_pair{0, 1};
    std::pair<int, int> t_pair{2, 3};
};

Curve make_line(const FermatParams& params, Fe alpha, Fe beta, PairPattern pattern = {});

// Precomposition with (s, t) -> (phi0, phi1).
Curve compose_cover(const Curve& curve, const Form& phi0, const Form& phi1);

// The same map viewed on X_{d,N+1} (a ZERO coordinate is appended).
Curve lift(const Curve& curve);

// f_i <- scalings[i] * f_{permutation[i]}; each scaling must be a d-th root of unity.
Curve act_automorphism(const Curve& curve, std::span<const int> permutation, std::span<const Fe> scalings);

struct RncReport {
    int span_dim = 0;
    bool is_rnc = false;
};

RncReport is_rnc(std::span<const Form> forms);
inline RncReport is_rnc(const Curve& curve) { return is_rnc(curve.forms()); }

// Orbit representative under coordinate permutations and d-th-root scalings:
// each coordinate is scaled to its lexicographically smallest coefficient
// vector, then coordinates are sorted.
Curve canonical_representative(const Curve& curve);

}  // namespace fermatrc::fermat
