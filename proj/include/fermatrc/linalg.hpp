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
#include <optional>
#include <span>
#include <vector>

#include "fermatrc/ff.hpp"

// Dense exact linear algebra over a Field. Pivoting always takes the first
// nonzero entry so every result is reproducible.
namespace fermatrc::linalg {

using ff::Fe;
using ff::Field;
using Vec = std::vector<Fe>;

class Matrix {
   public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Fe& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Fe operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<Fe> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Fe> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

   private:
    std::size_t rows_, cols_;
    std::vector<Fe> data_;
};

// In-place reduced row echelon form; returns the pivot column of each leading row.
std::vector<std::size_t> rref(const Field& k, Matrix& m);

std::size_t rank(const Field& k, Matrix m);

// Basis of {x : m x = 0}, one vector per free column in ascending order, with
// that free coordinate set to 1.
std::vector<Vec> nullspace(const Field& k, Matrix m);

// Some x with m x = b (free coordinates zero), or nothing if inconsistent.
std::optional<Vec> solve(const Field& k, Matrix m, std::span<const Fe> b);

// Incrementally grown row space kept in echelon form (ascending pivots).
class RowSpace {
   public:
    RowSpace(Field field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

    std::size_t dim() const noexcept { return rows_.size(); }
    // Residue of v after elimination against the stored rows.
    Vec reduce(Vec v) const;
    bool contains(std::span<const Fe> v) const;
    // Adds v if independent; returns whether the space grew.
    bool insert(std::span<const Fe> v);
    const std::vector<Vec>& rows() const noexcept { return rows_; }

   private:
    Field field_;
    std::size_t dim_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace fermatrc::linalg
