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

#include <cstddef>
#include <span>
#include <vector>

#include "fermatrc/fermat.hpp"
#include "fermatrc/forms.hpp"

namespace fermatrc::splitbundle {

using ff::Fe;
using ff::Field;
using forms::Form;

struct Entry {
    Form form;
    int delta = 0;
};

/*
    K = ker( (+)_i O(-delta_i) --(g_i)--> O ) on P^1.

    Every nonzero g_i has degree delta_i, at least one is nonzero and the
    nonzero ones have no common factor, so the row is onto and K is a vector
    bundle of rank #entries - 1 and degree -sum(delta_i). ZERO entries may carry
    any declared degree; each contributes a summand O(-delta_i).
*/
class KernelPresentation {
   public:
    explicit KernelPresentation(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    const Field& field() const noexcept { return entries_.front().form.field(); }
    int rank() const noexcept { return static_cast<int>(entries_.size()) - 1; }
    int degree() const noexcept;
    int min_delta() const noexcept;

   private:
    std::vector<Entry> entries_;
};

// Weakly decreasing summands a_1 >= ... >= a_R of (+)_i O(a_i).
struct SplittingType {
    std::vector<int> summands;

    int rank() const noexcept { return static_cast<int>(summands.size()); }
    int degree() const noexcept;
    int min() const;
    int max() const;
    // h^0 of the bundle twisted by O(m): sum_i max(a_i + m + 1, 0).
    long h0(int m) const noexcept;
    // sum_i max(-a_i - m - 1, 0).
    long h1(int m) const noexcept;
    bool balanced() const { return summands.empty() || max() - min() <= 1; }
    // The dual bundle.
    SplittingType dual() const;
    SplittingType shifted(int c) const;
    SplittingType scaled(int k) const;

    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

SplittingType make_splitting(std::vector<int> summands);

// A degree-m section of K: one form of degree m - delta_i per entry (ZERO when
// that is negative).
struct Section {
    int degree = 0;
    std::vector<Form> components;

    friend bool operator==(const Section&, const Section&) = default;
};

// dim H^0(K(m)), the kernel dimension of the multiplication map at twist m.
std::size_t h0(const KernelPresentation& kp, int m);

// From first differences of h0 over an ascending scan. Throws
// CertificateFailure if rank and degree are not both accounted for by the
// scan bound.
SplittingType splitting_type(const KernelPresentation& kp);

// Minimal homogeneous generators of the free module of sections, ascending in
// degree. Exactly rank() of them; their degrees are the negated summands.
std::vector<Section> module_generators(const KernelPresentation& kp);

// c_j of degree m - deg(gens[j]) with element = sum_j c_j * gens[j].
// Throws NotInModule when no such expression exists.
std::vector<Form> coordinates_in_basis(const KernelPresentation& kp, std::span<const Section> gens,
                                       const Section& element);

// Multiplies every component (used to check syzygies): sum_i g_i * h_i.
Form apply_row(const KernelPresentation& kp, const Section& section);

// Presentations pulled back along a map P^1 -> P^N given by equal-degree forms.
KernelPresentation omega_presentation(std::span<const Form> forms);
KernelPresentation frobenius_presentation(std::span<const Form> forms, unsigned r);

// f^*Omega^1_{P^N} = ker((f_i) : O(-e)^(N+1) -> O).
SplittingType splitting_omega_P(std::span<const Form> forms);
inline SplittingType splitting_omega_P(const fermat::Curve& curve) { return splitting_omega_P(curve.forms()); }
// f^*T_{P^N}, the dual of the above.
SplittingType splitting_T_P(std::span<const Form> forms);
inline SplittingType splitting_T_P(const fermat::Curve& curve) { return splitting_T_P(curve.forms()); }

// f^*F: the Frobenius-twisted cotangent kernel shifted by d*e.
SplittingType splitting_F(const fermat::Curve& curve);

// Everything computed along the way to f^*T_X.
struct TangentPipeline {
    std::vector<Section> generators;  // of the (f_i^(p^r)) presentation
    SplittingType F;                  // f^*F
    std::vector<Form> euler_coordinates;
    SplittingType TX;                 // f^*T_X
};

// Throws NotOnHypersurface if the Euler section is not a section of f^*F, and
// CertificateFailure if the result disagrees with h0_TX_direct at m = -1, 0, 1.
TangentPipeline tangent_pipeline(const fermat::Curve& curve);
inline SplittingType splitting_TX(const fermat::Curve& curve) { return tangent_pipeline(curve).TX; }

// h^0(f^*T_X(m)) = h^0(f^*F(m)) - h^0(O(m)), valid for m >= -1 only.
std::size_t h0_TX_direct(const fermat::Curve& curve, int m);

}  // namespace fermatrc::splitbundle
