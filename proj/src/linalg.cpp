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

#include "fermatrc/linalg.hpp"

#include <algorithm>

#include "fermatrc/error.hpp"

namespace fermatrc::linalg {

std::vector<std::size_t> rref(const Field& k, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t r = lead;
        while (r < m.rows() && m(r, c) == 0) ++r;
        if (r == m.rows()) continue;
        if (r != lead) std::swap_ranges(m.row(r).begin(), m.row(r).end(), m.row(lead).begin());
        const Fe pivot_inv = k.inv(m(lead, c));
        if (pivot_inv != 1) k.scale(m.row(lead).subspan(c), pivot_inv);
        const auto pivot_row = m.row(lead).subspan(c);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != lead && m(i, c) != 0) k.sub_scaled(m.row(i).subspan(c), pivot_row, m(i, c));
        }
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

std::size_t rank(const Field& k, Matrix m) { return rref(k, m).size(); }

std::vector<Vec> nullspace(const Field& k, Matrix m) {
    const auto pivots = rref(k, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(m(i, f));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Field& k, Matrix m, std::span<const Fe> b) {
    if (b.size() != m.rows()) fail(ErrorKind::InvalidArgument, "right-hand side has the wrong length");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::copy(m.row(r).begin(), m.row(r).end(), aug.row(r).begin());
        aug(r, m.cols()) = b[r];
    }
    const auto pivots = rref(k, aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
    return x;
}

Vec RowSpace::reduce(Vec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Fe c = v[pivots_[i]];
        if (c != 0) field_.sub_scaled(std::span<Fe>(v).subspan(pivots_[i]), std::span<const Fe>(rows_[i]).subspan(pivots_[i]), c);
    }
    return v;
}

bool RowSpace::contains(std::span<const Fe> v) const {
    const Vec r = reduce(Vec(v.begin(), v.end()));
    return std::all_of(r.begin(), r.end(), [](Fe x) { return x == 0; });
}

bool RowSpace::insert(std::span<const Fe> v) {
    if (v.size() != dim_) fail(ErrorKind::InvalidArgument, "vector has the wrong dimension");
    Vec r = reduce(Vec(v.begin(), v.end()));
    const auto it = std::find_if(r.begin(), r.end(), [](Fe x) { return x != 0; });
    if (it == r.end()) return false;
    const auto pivot = static_cast<std::size_t>(it - r.begin());
    field_.scale(std::span<Fe>(r).subspan(pivot), field_.inv(r[pivot]));
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pivot);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
}

}  // namespace fermatrc::linalg
