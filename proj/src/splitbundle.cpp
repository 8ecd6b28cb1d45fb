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

#include "fermatrc/splitbundle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fermatrc/error.hpp"
#include "fermatrc/linalg.hpp"

namespace fermatrc::splitbundle {

namespace {

using linalg::Matrix;
using linalg::Vec;

// Column layout of degree-m sections: entry index major, t-exponent minor.
struct Layout {
    std::vector<std::size_t> offset;
    std::vector<int> width;
    std::size_t total = 0;
};

Layout layout_at(const KernelPresentation& kp, int m) {
    Layout out;
    for (const Entry& entry : kp.entries()) {
        const int w = std::max(m - entry.delta + 1, 0);
        out.offset.push_back(out.total);
        out.width.push_back(w);
        out.total += static_cast<std::size_t>(w);
    }
    return out;
}

Matrix multiplication_matrix(const KernelPresentation& kp, int m, const Layout& layout) {
    Matrix mat(static_cast<std::size_t>(std::max(m + 1, 0)), layout.total);
    for (std::size_t i = 0; i < kp.entries().size(); ++i) {
        const Entry& entry = kp.entries()[i];
        if (entry.form.is_zero()) continue;
        for (int j = 0; j < layout.width[i]; ++j) {
            for (int l = 0; l <= entry.delta; ++l) mat(j + l, layout.offset[i] + j) = entry.form.coeff(l);
        }
    }
    return mat;
}

Vec to_flat(const Section& section, const Layout& layout, int shift = 0) {
    Vec out(layout.total, 0);
    for (std::size_t i = 0; i < section.components.size(); ++i) {
        const Form& h = section.components[i];
        for (std::size_t j = 0; j < h.coeffs().size(); ++j) out[layout.offset[i] + j + shift] = h.coeffs()[j];
    }
    return out;
}

Section from_flat(const KernelPresentation& kp, std::span<const Fe> flat, int m, const Layout& layout) {
    Section out{m, {}};
    for (std::size_t i = 0; i < kp.entries().size(); ++i) {
        const int deg = m - kp.entries()[i].delta;
        if (layout.width[i] == 0) {
            out.components.push_back(Form::zero(kp.field(), deg));
            continue;
        }
        const auto first = flat.begin() + static_cast<std::ptrdiff_t>(layout.offset[i]);
        out.components.emplace_back(kp.field(), std::vector<Fe>(first, first + layout.width[i]));
    }
    return out;
}

void check_section_shape(const KernelPresentation& kp, const Section& section) {
    if (section.components.size() != kp.entries().size())
        fail(ErrorKind::InvalidArgument, "section has the wrong number of components");
    for (std::size_t i = 0; i < kp.entries().size(); ++i) {
        const Form& h = section.components[i];
        if (h.degree() != section.degree - kp.entries()[i].delta && !(h.is_zero()))
            fail(ErrorKind::InvalidArgument, "section component has the wrong degree");
        if (!(h.field() == kp.field())) fail(ErrorKind::InvalidArgument, "section over a different field");
    }
}

int scan_upper_bound(const KernelPresentation& kp) {
    int bound = kp.rank();
    for (const Entry& entry : kp.entries()) bound += std::abs(entry.delta);
    return bound;
}

// Every summand is <= -min(delta), so h0 vanishes below min(delta); one
// extra step of margin.
int scan_lower_bound(const KernelPresentation& kp) { return kp.min_delta() - 2; }

[[noreturn]] void certificate_failure(const std::string& what) { fail(ErrorKind::CertificateFailure, what); }

}  // namespace

KernelPresentation::KernelPresentation(std::vector<Entry> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) fail(ErrorKind::InvalidArgument, "empty presentation");
    std::vector<Form> nonzero;
    for (const Entry& entry : entries_) {
        if (!(entry.form.field() == entries_.front().form.field()))
            fail(ErrorKind::InvalidArgument, "presentation entries over different fields");
        if (entry.form.is_zero()) continue;
        if (entry.form.degree() != entry.delta)
            fail(ErrorKind::InvalidArgument, "entry degree " + std::to_string(entry.form.degree()) +
                                                 " differs from declared twist " + std::to_string(entry.delta));
        nonzero.push_back(entry.form);
    }
    if (nonzero.empty()) fail(ErrorKind::AllZero, "presentation has no nonzero entry");
    if (forms::form_gcd(nonzero).degree() > 0) fail(ErrorKind::CommonZero, "presentation row is not surjective");
}

int KernelPresentation::degree() const noexcept {
    int sum = 0;
    for (const Entry& entry : entries_) sum -= entry.delta;
    return sum;
}

int KernelPresentation::min_delta() const noexcept {
    int out = entries_.front().delta;
    for (const Entry& entry : entries_) out = std::min(out, entry.delta);
    return out;
}

int SplittingType::degree() const noexcept { return std::accumulate(summands.begin(), summands.end(), 0); }

int SplittingType::min() const {
    if (summands.empty()) fail(ErrorKind::InvalidArgument, "rank-zero splitting type");
    return summands.back();
}

int SplittingType::max() const {
    if (summands.empty()) fail(ErrorKind::InvalidArgument, "rank-zero splitting type");
    return summands.front();
}

long SplittingType::h0(int m) const noexcept {
    long out = 0;
    for (int a : summands) out += std::max(a + m + 1, 0);
    return out;
}

long SplittingType::h1(int m) const noexcept {
    long out = 0;
    for (int a : summands) out += std::max(-a - m - 1, 0);
    return out;
}

SplittingType SplittingType::dual() const {
    std::vector<int> out;
    for (auto it = summands.rbegin(); it != summands.rend(); ++it) out.push_back(-*it);
    return {out};
}

SplittingType SplittingType::shifted(int c) const {
    SplittingType out = *this;
    for (int& a : out.summands) a += c;
    return out;
}

SplittingType SplittingType::scaled(int k) const {
    SplittingType out = *this;
    for (int& a : out.summands) a *= k;
    if (k < 0) std::reverse(out.summands.begin(), out.summands.end());
    return out;
}

SplittingType make_splitting(std::vector<int> summands) {
    std::sort(summands.begin(), summands.end(), std::greater<>());
    return {std::move(summands)};
}

std::size_t h0(const KernelPresentation& kp, int m) {
    const Layout layout = layout_at(kp, m);
    return layout.total - linalg::rank(kp.field(), multiplication_matrix(kp, m, layout));
}

SplittingType splitting_type(const KernelPresentation& kp) {
    const int lo = scan_lower_bound(kp);
    const int hi = scan_upper_bound(kp);
    std::size_t prev_h0 = h0(kp, lo);
    if (prev_h0 != 0) certificate_failure("sections below the scan start");
    long prev_diff = 0;
    std::vector<int> summands;
    long sum = 0;
    for (int m = lo + 1; m <= hi; ++m) {
        const std::size_t cur = h0(kp, m);
        const long diff = static_cast<long>(cur) - static_cast<long>(prev_h0);  // #{a_i >= -m}
        const long mult = diff - prev_diff;                                     // #{a_i == -m}
        if (mult < 0) certificate_failure("h0 is not convex at twist " + std::to_string(m));
        for (long i = 0; i < mult; ++i) {
            summands.push_back(-m);
            sum -= m;
        }
        if (static_cast<int>(summands.size()) > kp.rank()) certificate_failure("more summands than the rank");
        if (static_cast<int>(summands.size()) == kp.rank() && sum == kp.degree()) return {summands};
        prev_h0 = cur;
        prev_diff = diff;
    }
    certificate_failure("scan bound reached without rank and degree certificates");
}

std::vector<Section> module_generators(const KernelPresentation& kp) {
    const Field& k = kp.field();
    const int lo = scan_lower_bound(kp);
    const int hi = scan_upper_bound(kp);
    if (h0(kp, lo) != 0) certificate_failure("sections below the scan start");
    std::vector<Section> gens;
    long degree_sum = 0;
    for (int m = lo + 1; m <= hi; ++m) {
        const Layout layout = layout_at(kp, m);
        Matrix mat = multiplication_matrix(kp, m, layout);
        const auto pivots = linalg::rref(k, mat);
        const long kernel_dim = static_cast<long>(layout.total - pivots.size());
        // The section module is free, so the old generators span exactly
        // sum_j (m - m_j + 1) dimensions in degree m.
        long old_dim = 0;
        for (const Section& g : gens) old_dim += m - g.degree + 1;
        const long fresh = kernel_dim - old_dim;
        if (fresh < 0) certificate_failure("kernel shrank at twist " + std::to_string(m));
        if (fresh > 0) {
            linalg::RowSpace span(k, layout.total);
            for (const Section& g : gens) {
                for (int u = 0; u <= m - g.degree; ++u) {
                    if (!span.insert(to_flat(g, layout, u))) certificate_failure("generator multiples are dependent");
                }
            }
            std::vector<bool> is_pivot(layout.total, false);
            for (auto c : pivots) is_pivot[c] = true;
            long added = 0;
            for (std::size_t f = 0; f < layout.total && added < fresh; ++f) {
                if (is_pivot[f]) continue;
                Vec v(layout.total, 0);
                v[f] = 1;
                for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(mat(i, f));
                if (!span.insert(v)) continue;
                const auto lead = std::find_if(v.begin(), v.end(), [](Fe x) { return x != 0; });
                k.scale(v, k.inv(*lead));
                gens.push_back(from_flat(kp, v, m, layout));
                degree_sum -= m;
                ++added;
            }
            if (added != fresh) certificate_failure("could not extend to a kernel basis at twist " + std::to_string(m));
        }
        if (static_cast<int>(gens.size()) > kp.rank()) certificate_failure("more generators than the rank");
        if (static_cast<int>(gens.size()) == kp.rank() && degree_sum == kp.degree()) return gens;
    }
    certificate_failure("scan bound reached without rank and degree certificates");
}

std::vector<Form> coordinates_in_basis(const KernelPresentation& kp, std::span<const Section> gens,
                                       const Section& element) {
    check_section_shape(kp, element);
    const int m = element.degree;
    const Layout layout = layout_at(kp, m);
    std::size_t cols = 0;
    for (const Section& g : gens) cols += static_cast<std::size_t>(std::max(m - g.degree + 1, 0));
    Matrix mat(layout.total, cols);
    std::size_t col = 0;
    for (const Section& g : gens) {
        for (int u = 0; u <= m - g.degree; ++u, ++col) {
            const Vec flat = to_flat(g, layout, u);
            for (std::size_t r = 0; r < layout.total; ++r) mat(r, col) = flat[r];
        }
    }
    const auto x = linalg::solve(kp.field(), std::move(mat), to_flat(element, layout));
    if (!x) fail(ErrorKind::NotInModule, "element is not in the span of the generators");
    std::vector<Form> out;
    col = 0;
    for (const Section& g : gens) {
        const int deg = m - g.degree;
        if (deg < 0) {
            out.push_back(Form::zero(kp.field(), deg));
            continue;
        }
        std::vector<Fe> coeffs(x->begin() + static_cast<std::ptrdiff_t>(col),
                               x->begin() + static_cast<std::ptrdiff_t>(col + deg + 1));
        out.emplace_back(kp.field(), std::move(coeffs));
        col += static_cast<std::size_t>(deg) + 1;
    }
    return out;
}

Form apply_row(const KernelPresentation& kp, const Section& section) {
    check_section_shape(kp, section);
    Form total = Form::zero(kp.field(), section.degree);
    for (std::size_t i = 0; i < kp.entries().size(); ++i) {
        const Entry& entry = kp.entries()[i];
        if (entry.form.is_zero() || section.components[i].is_zero()) continue;
        total = add(total, mul(entry.form, section.components[i]));
    }
    return total;
}

KernelPresentation omega_presentation(std::span<const Form> forms) {
    if (forms.empty()) fail(ErrorKind::InvalidArgument, "no forms");
    std::vector<Entry> entries;
    for (const Form& f : forms) entries.push_back({f, forms.front().degree()});
    return KernelPresentation(std::move(entries));
}

KernelPresentation frobenius_presentation(std::span<const Form> forms, unsigned r) {
    if (forms.empty()) fail(ErrorKind::InvalidArgument, "no forms");
    std::vector<Entry> entries;
    for (const Form& f : forms) {
        Form g = frob_power(f, r);
        const int delta = g.degree();
        entries.push_back({std::move(g), delta});
    }
    return KernelPresentation(std::move(entries));
}

SplittingType splitting_omega_P(std::span<const Form> forms) { return splitting_type(omega_presentation(forms)); }

SplittingType splitting_T_P(std::span<const Form> forms) { return splitting_omega_P(forms).dual(); }

SplittingType splitting_F(const fermat::Curve& curve) {
    const auto kp = frobenius_presentation(curve.forms(), curve.params().r());
    return splitting_type(kp).shifted(curve.params().d() * curve.e());
}

std::size_t h0_TX_direct(const fermat::Curve& curve, int m) {
    if (m < -1) fail(ErrorKind::TwistOutOfRange, "direct formula needs m >= -1");
    const auto kp = frobenius_presentation(curve.forms(), curve.params().r());
    const std::size_t sections = h0(kp, curve.params().d() * curve.e() + m);
    return sections - static_cast<std::size_t>(m + 1);
}

TangentPipeline tangent_pipeline(const fermat::Curve& curve) {
    const int de = curve.params().d() * curve.e();
    const auto kp = frobenius_presentation(curve.forms(), curve.params().r());

    TangentPipeline out;
    out.generators = module_generators(kp);
    std::vector<int> b;
    for (const Section& g : out.generators) b.push_back(de - g.degree);
    out.F = make_splitting(b);

    // Euler section (f_0, ..., f_N) of f^*F lives in degree d*e of the kernel.
    const Section euler{de, curve.forms()};
    try {
        out.euler_coordinates = coordinates_in_basis(kp, out.generators, euler);
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::NotInModule) throw;
        fail(ErrorKind::NotOnHypersurface, "Euler section is not a section of the Frobenius kernel");
    }

    // f^*T_X = coker(O -> (+)_j O(b_j)); its dual is again a kernel.
    std::vector<Entry> dual_entries;
    for (std::size_t j = 0; j < b.size(); ++j) dual_entries.push_back({out.euler_coordinates[j], b[j]});
    try {
        out.TX = splitting_type(KernelPresentation(std::move(dual_entries))).dual();
    } catch (const Error& err) {
        if (err.kind() == ErrorKind::CertificateFailure) throw;
        certificate_failure(std::string("dual tangent presentation is invalid: ") + err.what());
    }

    const int N = curve.N();
    if (out.TX.rank() != N - 1 || out.TX.degree() != curve.e() * (N + 1 - curve.params().d()))
        certificate_failure("f^*T_X has the wrong rank or degree");
    for (int m = -1; m <= 1; ++m) {
        if (static_cast<long>(h0_TX_direct(curve, m)) != out.TX.h0(m))
            certificate_failure("f^*T_X disagrees with the direct h0 at twist " + std::to_string(m));
    }
    return out;
}

}  // namespace fermatrc::splitbundle
