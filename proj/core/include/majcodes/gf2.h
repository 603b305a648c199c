// Copyright 2026 The majcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAJCODES_GF2_H
#define MAJCODES_GF2_H

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "majcodes/bit_vector.h"

namespace majcodes {

/// A list of equal-length GF(2) row vectors. Row order is preserved by every
/// operation that does not say otherwise.
class BitMatrix {
   public:
    BitMatrix() = default;
    explicit BitMatrix(size_t num_cols) : num_cols_(num_cols) {
    }
    BitMatrix(size_t num_cols, std::vector<BitVector> rows);

    /// Rows given as '0'/'1' strings; all must have the same length.
    static BitMatrix from_strings(std::span<const std::string> rows);
    static BitMatrix from_strings(std::initializer_list<std::string> rows);
    static BitMatrix identity(size_t n);

    size_t num_rows() const noexcept {
        return rows_.size();
    }
    size_t num_cols() const noexcept {
        return num_cols_;
    }
    bool empty() const noexcept {
        return rows_.empty();
    }

    const BitVector &row(size_t i) const {
        return rows_[i];
    }
    const std::vector<BitVector> &rows() const noexcept {
        return rows_;
    }
    void push_back(BitVector row);

    /// M * v over GF(2); bit i is row(i) . v.
    BitVector multiply(const BitVector &v) const;
    BitMatrix transpose() const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    size_t num_cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Reduced row echelon form of a row space. Each stored row has a distinct
/// pivot column and every other stored row is zero in that column.
class Echelon {
   public:
    Echelon() = default;
    explicit Echelon(const BitMatrix &m);

    size_t rank() const noexcept {
        return rows_.size();
    }
    size_t num_cols() const noexcept {
        return num_cols_;
    }
    const std::vector<BitVector> &rows() const noexcept {
        return rows_;
    }
    const std::vector<size_t> &pivots() const noexcept {
        return pivots_;
    }

    /// v minus its projection onto the row space along pivot columns. Zero
    /// iff v is in the row space.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector &v) const {
        return reduce(v).none();
    }
    /// Adds v to the row space. Returns false when v was already in it.
    bool insert(const BitVector &v);

    BitMatrix basis() const {
        return BitMatrix(num_cols_, rows_);
    }

   private:
    size_t num_cols_ = 0;
    std::vector<BitVector> rows_;
    std::vector<size_t> pivots_;
};

size_t rank(const BitMatrix &m);

/// Basis of {v : m v = 0}. One vector per free column of the reduced echelon
/// form, in increasing free-column order.
BitMatrix kernel_basis(const BitMatrix &m);

bool in_span(const BitVector &v, const BitMatrix &m);

/// Basis of {v : v . r = 0 for every row r}.
BitMatrix orthogonal_complement(const BitMatrix &m);

/// Basis of the row space of m restricted to `coords`, as vectors of length
/// coords.size() (entry j is coordinate coords[j]).
BitMatrix project(const BitMatrix &m, std::span<const size_t> coords);

/// Basis of rowspace(m) intersected with the vectors vanishing outside
/// `region`. Vectors keep their full length.
BitMatrix subspace_supported_on(const BitMatrix &m, const BitVector &region);

/// Linearly independent subset of the rows, preserving order.
BitMatrix independent_rows(const BitMatrix &m);

bool row_spaces_equal(const BitMatrix &a, const BitMatrix &b);

}  // namespace majcodes

#endif
