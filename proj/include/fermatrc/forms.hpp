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

#include <compare>
#include <span>
#include <vector>

#include "fermatrc/ff.hpp"

namespace fermatrc::forms {

using ff::Fe;
using ff::Field;

/*
    Homogeneous binary form of declared degree l in (s, t).
    coeffs[j] is the coefficient of s^(l-j) t^j, so the affine chart s = 1 reads
    the vector as a polynomial in t, low degree first.

    The ZERO form has no coefficients but keeps its declared degree, which may
    be any integer (kernel presentations need zero entries with negative twists).
*/
class Form {
   public:
    static Form zero(Field field, int degree);
    static Form monomial(Field field, int degree, int t_exponent, Fe coeff = 1);
    // Degree is coeffs.size() - 1; an all-zero vector yields ZERO of that degree.
    Form(Field field, std::vector<Fe> coeffs);

    const Field& field() const noexcept { return field_; }
    int degree() const noexcept { return degree_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const Fe> coeffs() const noexcept { return coeffs_; }
    // Coefficient of s^(deg-j) t^j; 0 outside the support and for ZERO.
    Fe coeff(int j) const noexcept {
        return j >= 0 && static_cast<std::size_t>(j) < coeffs_.size() ? coeffs_[j] : 0;
    }
    // Highest t-exponent with a nonzero coefficient (-1 for ZERO).
    int t_degree() const noexcept;
    // Exponent of the largest power of s dividing the form (degree for ZERO).
    int s_valuation() const noexcept;

    friend bool operator==(const Form& lhs, const Form& rhs) noexcept {
        return lhs.degree_ == rhs.degree_ && lhs.coeffs_ == rhs.coeffs_ && lhs.field_ == rhs.field_;
    }

   private:
    Form(Field field, int degree) : field_(std::move(field)), degree_(degree) {}

    Field field_;
    int degree_ = 0;
    std::vector<Fe> coeffs_;
};

Form add(const Form& f, const Form& g);
Form sub(const Form& f, const Form& g);
Form mul(const Form& f, const Form& g);
Form scalar_mul(Fe c, const Form& f);
Form neg(const Form& f);

inline Form operator+(const Form& f, const Form& g) { return add(f, g); }
inline Form operator-(const Form& f, const Form& g) { return sub(f, g); }
inline Form operator*(const Form& f, const Form& g) { return mul(f, g); }

// f^(p^r) by coefficient spreading.
Form frob_power(const Form& f, unsigned r);
// f^k by repeated multiplication.
Form pow(const Form& f, unsigned k);
// f(phi0, phi1); phi0 and phi1 must share a degree.
Form substitute(const Form& f, const Form& phi0, const Form& phi1);

// Monic (in t) generator of the gcd of the nonzero inputs; throws AllZero.
Form form_gcd(std::span<const Form> forms);
// True when g divides f (every form divides ZERO). g must be nonzero.
bool divides(const Form& g, const Form& f);

}  // namespace fermatrc::forms
