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

#include "fermatrc/forms.hpp"

#include <algorithm>
#include <string>

#include "fermatrc/error.hpp"

namespace fermatrc::forms {

namespace {

using UPoly = std::vector<Fe>;  // univariate in t, low-to-high

void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void require_same_field(const Form& f, const Form& g) {
    if (!(f.field() == g.field())) fail(ErrorKind::InvalidArgument, "forms over different fields");
}

// Remainder of a modulo b (b trimmed, nonzero).
UPoly upoly_mod(const Field& k, UPoly a, const UPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const Fe lead_inv = k.inv(b.back());
    while (!a.empty() && a.size() > db) {
        const Fe factor = k.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - db;
        k.sub_scaled(std::span<Fe>(a).subspan(shift, db + 1), b, factor);
        trim(a);
    }
    return a;
}

UPoly upoly_gcd(const Field& k, UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = upoly_mod(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) k.scale(a, k.inv(a.back()));
    return a;
}

UPoly dehomogenize(const Form& f) {
    UPoly out(f.coeffs().begin(), f.coeffs().end());
    trim(out);
    return out;
}

}  // namespace

Form Form::zero(Field field, int degree) { return Form(std::move(field), degree); }

Form Form::monomial(Field field, int degree, int t_exponent, Fe coeff) {
    if (degree < 0 || t_exponent < 0 || t_exponent > degree)
        fail(ErrorKind::InvalidArgument, "monomial exponent out of range");
    std::vector<Fe> coeffs(static_cast<std::size_t>(degree) + 1, 0);
    coeffs[t_exponent] = coeff;
    return Form(std::move(field), std::move(coeffs));
}

Form::Form(Field field, std::vector<Fe> coeffs) : field_(std::move(field)) {
    if (coeffs.empty()) fail(ErrorKind::InvalidArgument, "form needs at least one coefficient");
    degree_ = static_cast<int>(coeffs.size()) - 1;
    for (Fe c : coeffs) {
        if (!field_.contains(c)) fail(ErrorKind::InvalidArgument, "coefficient outside the field");
    }
    if (std::any_of(coeffs.begin(), coeffs.end(), [](Fe c) { return c != 0; })) coeffs_ = std::move(coeffs);
}

int Form::t_degree() const noexcept {
    for (int j = static_cast<int>(coeffs_.size()) - 1; j >= 0; --j) {
        if (coeffs_[j] != 0) return j;
    }
    return -1;
}

int Form::s_valuation() const noexcept { return is_zero() ? degree_ : degree_ - t_degree(); }

Form add(const Form& f, const Form& g) {
    require_same_field(f, g);
    if (f.is_zero() && g.is_zero()) {
        if (f.degree() != g.degree()) fail(ErrorKind::DegreeMismatch, "ZERO forms of different degrees");
        return f;
    }
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() != g.degree())
        fail(ErrorKind::DegreeMismatch,
             "cannot add forms of degree " + std::to_string(f.degree()) + " and " + std::to_string(g.degree()));
    const Field& k = f.field();
    std::vector<Fe> out(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = k.add(out[j], g.coeffs()[j]);
    return Form(k, std::move(out));
}

Form neg(const Form& f) {
    if (f.is_zero()) return f;
    std::vector<Fe> out(f.coeffs().begin(), f.coeffs().end());
    for (auto& c : out) c = f.field().neg(c);
    return Form(f.field(), std::move(out));
}

Form sub(const Form& f, const Form& g) { return add(f, neg(g)); }

Form mul(const Form& f, const Form& g) {
    require_same_field(f, g);
    if (f.is_zero() || g.is_zero()) return Form::zero(f.field(), f.degree() + g.degree());
    const Field& k = f.field();
    std::vector<Fe> out(f.coeffs().size() + g.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const Fe a = f.coeffs()[i];
        if (a == 0) continue;
        k.sub_scaled(std::span<Fe>(out).subspan(i, g.coeffs().size()), g.coeffs(), k.neg(a));
    }
    return Form(k, std::move(out));
}

Form scalar_mul(Fe c, const Form& f) {
    if (f.is_zero() || c == 0) return Form::zero(f.field(), f.degree());
    std::vector<Fe> out(f.coeffs().begin(), f.coeffs().end());
    f.field().scale(out, c);
    return Form(f.field(), std::move(out));
}

Form frob_power(const Form& f, unsigned r) {
    const Field& k = f.field();
    std::uint64_t spread = 1;
    for (unsigned i = 0; i < r; ++i) spread *= k.p();
    const int degree = f.degree() * static_cast<int>(spread);
    if (f.is_zero()) return Form::zero(k, degree);
    std::vector<Fe> out(static_cast<std::size_t>(degree) + 1, 0);
    for (std::size_t j = 0; j < f.coeffs().size(); ++j) out[j * spread] = k.frobenius(f.coeffs()[j], r);
    return Form(k, std::move(out));
}

Form pow(const Form& f, unsigned k) {
    Form out = Form::monomial(f.field(), 0, 0, 1);
    for (unsigned i = 0; i < k; ++i) out = mul(out, f);
    return out;
}

Form substitute(const Form& f, const Form& phi0, const Form& phi1) {
    require_same_field(phi0, phi1);
    require_same_field(f, phi0);
    if (phi0.degree() != phi1.degree()) fail(ErrorKind::DegreeMismatch, "substitution pair must share a degree");
    const int out_degree = f.degree() * phi0.degree();
    if (f.is_zero()) return Form::zero(f.field(), out_degree);
    const int l = f.degree();
    // powers0[i] = phi0^i, powers1[i] = phi1^i
    std::vector<Form> powers0{Form::monomial(f.field(), 0, 0, 1)}, powers1{powers0.front()};
    for (int i = 1; i <= l; ++i) {
        powers0.push_back(mul(powers0.back(), phi0));
        powers1.push_back(mul(powers1.back(), phi1));
    }
    Form out = Form::zero(f.field(), out_degree);
    for (int j = 0; j <= l; ++j) {
        if (f.coeff(j) == 0) continue;
        out = add(out, scalar_mul(f.coeff(j), mul(powers0[l - j], powers1[j])));
    }
    return out;
}

Form form_gcd(std::span<const Form> forms) {
    if (forms.empty()) fail(ErrorKind::InvalidArgument, "gcd of an empty list");
    const Form* first = nullptr;
    int alpha = 0;
    UPoly g;
    for (const Form& f : forms) {
        if (f.is_zero()) continue;
        if (first == nullptr) {
            first = &f;
            alpha = f.s_valuation();
            g = dehomogenize(f);
        } else {
            require_same_field(*first, f);
            alpha = std::min(alpha, f.s_valuation());
            g = upoly_gcd(f.field(), std::move(g), dehomogenize(f));
        }
    }
    if (first == nullptr) fail(ErrorKind::AllZero, "gcd of ZERO forms");
    const Field& k = first->field();
    g = upoly_gcd(k, g, {});  // normalize to monic
    std::vector<Fe> coeffs(g.size() + static_cast<std::size_t>(alpha), 0);
    std::copy(g.begin(), g.end(), coeffs.begin());
    return Form(k, std::move(coeffs));
}

bool divides(const Form& g, const Form& f) {
    if (g.is_zero()) fail(ErrorKind::InvalidArgument, "division by ZERO form");
    require_same_field(f, g);
    if (f.is_zero()) return true;
    if (g.s_valuation() > f.s_valuation()) return false;
    return upoly_mod(f.field(), dehomogenize(f), dehomogenize(g)).empty();
}

}  // namespace fermatrc::forms
