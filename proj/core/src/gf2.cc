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

#include "majcodes/gf2.h"

#include <algorithm>

#include "majcodes/error.h"

namespace majcodes {

BitMatrix::BitMatrix(size_t num_cols, std::vector<BitVector> rows) : num_cols_(num_cols), rows_(std::move(rows)) {
    for (const auto &r : rows_) {
        if (r.size() != num_cols_) {
            throw Error(
                ErrorCode::kDimensionMismatch,
                "row of length " + std::to_string(r.size()) + " in matrix with " + std::to_string(num_cols_) +
                    " columns");
        }
    }
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows) {
    if (rows.empty()) {
        return BitMatrix();
    }
    std::vector<BitVector> parsed;
    for (const auto &r : rows) {
        parsed.push_back(BitVector::from_string(r));
    }
    return BitMatrix(rows.front().size(), std::move(parsed));
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string> rows) {
    return from_strings(std::span<const std::string>(rows.begin(), rows.size()));
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix out(n);
    for (size_t i = 0; i < n; i++) {
        BitVector r(n);
        r.set(i);
        out.push_back(std::move(r));
    }
    return out;
}

void BitMatrix::push_back(BitVector row) {
    if (row.size() != num_cols_) {
        throw Error(
            ErrorCode::kDimensionMismatch,
            "row of length " + std::to_string(row.size()) + " in matrix with " + std::to_string(num_cols_) +
                " columns");
    }
    rows_.push_back(std::move(row));
}

BitVector BitMatrix::multiply(const BitVector &v) const {
    BitVector out(rows_.size());
    for (size_t i = 0; i < rows_.size(); i++) {
        if (rows_[i].dot(v)) {
            out.set(i);
        }
    }
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix out(rows_.size());
    for (size_t c = 0; c < num_cols_; c++) {
        BitVector col(rows_.size());
        for (size_t r = 0; r < rows_.size(); r++) {
            if (rows_[r][c]) {
                col.set(r);
            }
        }
        out.push_back(std::move(col));
    }
    return out;
}

Echelon::Echelon(const BitMatrix &m) : num_cols_(m.num_cols()) {
    for (const auto &r : m.rows()) {
        insert(r);
    }
}

BitVector Echelon::reduce(BitVector v) const {
    for (size_t i = 0; i < rows_.size(); i++) {
        if (v[pivots_[i]]) {
            v ^= rows_[i];
        }
    }
    return v;
}

bool Echelon::insert(const BitVector &v) {
    if (v.size() != num_cols_) {
        throw Error(ErrorCode::kDimensionMismatch, "vector length does not match echelon width");
    }
    BitVector r = reduce(v);
    auto pivot = r.first_set();
    if (!pivot) {
        return false;
    }
    // Keep the form fully reduced: clear the new pivot from existing rows.
    for (auto &row : rows_) {
        if (row[*pivot]) {
            row ^= r;
        }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), *pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, *pivot);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
}

size_t rank(const BitMatrix &m) {
    return Echelon(m).rank();
}

BitMatrix kernel_basis(const BitMatrix &m) {
    Echelon e(m);
    size_t n = m.num_cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t p : e.pivots()) {
        is_pivot[p] = true;
    }
    BitMatrix out(n);
    for (size_t f = 0; f < n; f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector v(n);
        v.set(f);
        for (size_t i = 0; i < e.rank(); i++) {
            if (e.rows()[i][f]) {
                v.set(e.pivots()[i]);
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

bool in_span(const BitVector &v, const BitMatrix &m) {
    if (v.size() != m.num_cols()) {
        throw Error(ErrorCode::kDimensionMismatch, "vector length does not match matrix width");
    }
    return Echelon(m).contains(v);
}

BitMatrix orthogonal_complement(const BitMatrix &m) {
    // Over GF(2) with the standard dot product, v is orthogonal to every row
    // exactly when m v = 0.
    return kernel_basis(m);
}

BitMatrix project(const BitMatrix &m, std::span<const size_t> coords) {
    for (size_t c : coords) {
        if (c >= m.num_cols()) {
            throw Error(ErrorCode::kDimensionMismatch, "projection coordinate " + std::to_string(c) + " out of range");
        }
    }
    Echelon e(BitMatrix(coords.size()));
    for (const auto &r : m.rows()) {
        e.insert(r.select(coords));
    }
    return e.basis();
}

BitMatrix subspace_supported_on(const BitMatrix &m, const BitVector &region) {
    if (region.size() != m.num_cols()) {
        throw Error(ErrorCode::kDimensionMismatch, "region length does not match matrix width");
    }
    std::vector<BitVector> pool = m.rows();
    BitVector outside = region.complement();
    for (size_t c : outside.support()) {
        auto it = std::find_if(pool.begin(), pool.end(), [&](const BitVector &r) {
            return r[c];
        });
        if (it == pool.end()) {
            continue;
        }
        BitVector pivot = *it;
        pool.erase(it);
        for (auto &r : pool) {
            if (r[c]) {
                r ^= pivot;
            }
        }
    }
    Echelon e(BitMatrix(m.num_cols()));
    for (const auto &r : pool) {
        e.insert(r);
    }
    return e.basis();
}

BitMatrix independent_rows(const BitMatrix &m) {
    Echelon e(BitMatrix(m.num_cols()));
    BitMatrix out(m.num_cols());
    for (const auto &r : m.rows()) {
        if (e.insert(r)) {
            out.push_back(r);
        }
    }
    return out;
}

bool row_spaces_equal(const BitMatrix &a, const BitMatrix &b) {
    if (a.num_cols() != b.num_cols()) {
        return false;
    }
    Echelon ea(a);
    Echelon eb(b);
    return ea.rows() == eb.rows();
}

}  // namespace majcodes
