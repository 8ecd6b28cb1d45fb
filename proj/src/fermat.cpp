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

#include "fermatrc/fermat.hpp"

#include <algorithm>
#include <string>

#include "fermatrc/error.hpp"
#include "fermatrc/linalg.hpp"

namespace fermatrc::fermat {

namespace {

std::vector<Fe> padded(const Form& f) {
    std::vector<Fe> out(static_cast<std::size_t>(std::max(f.degree(), 0)) + 1, 0);
    std::copy(f.coeffs().begin(), f.coeffs().end(), out.begin());
    return out;
}

void check_pattern_index(int i, int N) {
    if (i < 0 || i > N) fail(ErrorKind::InvalidArgument, "pattern coordinate " + std::to_string(i) + " out of range");
}

}  // namespace

Field default_field(std::uint64_t p, unsigned r) { return Field(p, 2 * r); }

FermatParams::FermatParams(std::uint64_t p, unsigned r, int N) : FermatParams(p, r, N, default_field(p, r)) {}

FermatParams::FermatParams(std::uint64_t p, unsigned r, int N, Field field)
    : p_(p), r_(r), N_(N), pr_(1), field_(std::move(field)) {
    if (!ff::is_prime(p)) fail(ErrorKind::InvalidArgument, "p must be prime");
    if (r < 1) fail(ErrorKind::InvalidArgument, "r must be at least 1");
    for (unsigned i = 0; i < r; ++i) {
        if (pr_ > (1 << 20) / static_cast<int>(p)) fail(ErrorKind::InvalidArgument, "p^r too large");
        pr_ *= static_cast<int>(p);
    }
    if (pr_ + 1 <= 3) fail(ErrorKind::InvalidArgument, "need d = p^r + 1 > 3");
    if (N < 3) fail(ErrorKind::InvalidArgument, "need N >= 3");
    if (field_.p() != p) fail(ErrorKind::InvalidArgument, "field characteristic differs from p");
}

Form expand_F(const FermatParams& params, std::span<const Form> forms) {
    if (forms.empty()) fail(ErrorKind::InvalidArgument, "no forms");
    const int e = forms.front().degree();
    Form total = Form::zero(params.field(), e * params.d());
    for (const Form& f : forms) {
        if (f.degree() != e) fail(ErrorKind::DegreeMismatch, "forms of unequal degree");
        total = add(total, mul(frob_power(f, params.r()), f));
    }
    return total;
}

Curve validate(const FermatParams& params, std::vector<Form> forms) {
    if (forms.size() != static_cast<std::size_t>(params.N()) + 1)
        fail(ErrorKind::InvalidArgument, "expected " + std::to_string(params.N() + 1) + " forms, got " +
                                             std::to_string(forms.size()));
    const int e = forms.front().degree();
    for (const Form& f : forms) {
        if (!(f.field() == params.field())) fail(ErrorKind::InvalidArgument, "form over a different field");
        if (f.degree() != e) fail(ErrorKind::InvalidArgument, "forms must share one degree");
    }
    const auto nonzero = std::count_if(forms.begin(), forms.end(), [](const Form& f) { return !f.is_zero(); });
    if (e < 1 || nonzero < 2) fail(ErrorKind::ConstantMap, "curve is constant");
    const Form g = forms::form_gcd(forms);
    if (g.degree() > 0) fail(ErrorKind::CommonZero, "coordinates share a factor of degree " + std::to_string(g.degree()));
    if (!expand_F(params, forms).is_zero()) fail(ErrorKind::NotOnHypersurface, "sum of d-th powers does not vanish");
    return Curve(params, e, std::move(forms));
}

std::vector<Fe> roots_of_minus_one(const Field& field, std::uint64_t d) {
    std::vector<Fe> out;
    const Fe minus_one = field.neg(1);
    for (Fe a = 1; a < field.q(); ++a) {
        if (field.pow(a, d) == minus_one) out.push_back(a);
    }
    return out;
}

std::vector<Fe> roots_of_unity(const Field& field, std::uint64_t d) {
    std::vector<Fe> out;
    for (Fe a = 1; a < field.q(); ++a) {
        if (field.pow(a, d) == 1) out.push_back(a);
    }
    return out;
}

Curve make_line(const FermatParams& params, Fe alpha, Fe beta, PairPattern pattern) {
    const Field& k = params.field();
    const Fe minus_one = k.neg(1);
    if (!k.contains(alpha) || !k.contains(beta) || k.pow(alpha, params.d()) != minus_one ||
        k.pow(beta, params.d()) != minus_one)
        fail(ErrorKind::BadRoot, "line coefficients must be d-th roots of -1");
    const int idx[4] = {pattern.s_pair.first, pattern.s_pair.second, pattern.t_pair.first, pattern.t_pair.second};
    for (int i = 0; i < 4; ++i) {
        check_pattern_index(idx[i], params.N());
        for (int j = 0; j < i; ++j) {
            if (idx[i] == idx[j]) fail(ErrorKind::InvalidArgument, "pattern pairs must be disjoint");
        }
    }
    std::vector<Form> forms(static_cast<std::size_t>(params.N()) + 1, Form::zero(k, 1));
    forms[idx[0]] = Form(k, {1, 0});
    forms[idx[1]] = Form(k, {alpha, 0});
    forms[idx[2]] = Form(k, {0, 1});
    forms[idx[3]] = Form(k, {0, beta});
    return validate(params, std::move(forms));
}

Curve compose_cover(const Curve& curve, const Form& phi0, const Form& phi1) {
    if (phi0.degree() != phi1.degree() || phi0.degree() < 1)
        fail(ErrorKind::InvalidArgument, "cover pair must share a degree >= 1");
    const Form pair[2] = {phi0, phi1};
    if (phi0.is_zero() || phi1.is_zero() || forms::form_gcd(pair).degree() > 0)
        fail(ErrorKind::CommonZero, "cover pair has a base point");
    std::vector<Form> out;
    out.reserve(curve.forms().size());
    for (const Form& f : curve.forms()) out.push_back(forms::substitute(f, phi0, phi1));
    return validate(curve.params(), std::move(out));
}

Curve lift(const Curve& curve) {
    std::vector<Form> out = curve.forms();
    out.push_back(Form::zero(curve.field(), curve.e()));
    return validate(curve.params().with_dimension(curve.N() + 1), std::move(out));
}

Curve act_automorphism(const Curve& curve, std::span<const int> permutation, std::span<const Fe> scalings) {
    const auto n = curve.forms().size();
    if (permutation.size() != n || scalings.size() != n)
        fail(ErrorKind::InvalidArgument, "automorphism data must have N+1 entries");
    std::vector<bool> seen(n, false);
    for (int i : permutation) {
        if (i < 0 || static_cast<std::size_t>(i) >= n || seen[i]) fail(ErrorKind::InvalidArgument, "not a permutation");
        seen[i] = true;
    }
    const Field& k = curve.field();
    for (Fe lambda : scalings) {
        if (!k.contains(lambda) || k.pow(lambda, curve.params().d()) != 1)
            fail(ErrorKind::BadScaling, "scaling is not a d-th root of unity");
    }
    std::vector<Form> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(scalar_mul(scalings[i], curve.forms()[permutation[i]]));
    return validate(curve.params(), std::move(out));
}

RncReport is_rnc(std::span<const Form> forms) {
    if (forms.empty()) fail(ErrorKind::InvalidArgument, "no forms");
    const Field& k = forms.front().field();
    const int e = forms.front().degree();
    linalg::Matrix m(forms.size(), static_cast<std::size_t>(e) + 1);
    for (std::size_t i = 0; i < forms.size(); ++i) {
        for (int j = 0; j <= e; ++j) m(i, j) = forms[i].coeff(j);
    }
    const int span_dim = static_cast<int>(linalg::rank(k, std::move(m))) - 1;
    return {span_dim, span_dim == e};
}

Curve canonical_representative(const Curve& curve) {
    const Field& k = curve.field();
    const auto units = roots_of_unity(k, curve.params().d());
    std::vector<Form> rows;
    rows.reserve(curve.forms().size());
    for (const Form& f : curve.forms()) {
        Form best = f;
        for (Fe lambda : units) {
            Form candidate = scalar_mul(lambda, f);
            if (padded(candidate) < padded(best)) best = std::move(candidate);
        }
        rows.push_back(std::move(best));
    }
    std::sort(rows.begin(), rows.end(), [](const Form& a, const Form& b) { return padded(a) < padded(b); });
    return validate(curve.params(), std::move(rows));
}

}  // namespace fermatrc::fermat
