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

#include "majcodes/bit_vector.h"

#include <algorithm>

#include "majcodes/error.h"

namespace majcodes {

namespace {

void require_same_size(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size()) {
        throw Error(
            ErrorCode::kDimensionMismatch,
            "bit vectors of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
}

}  // namespace

BitVector::BitVector(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
}

BitVector BitVector::from_indices(size_t num_bits, std::span<const size_t> indices) {
    BitVector v(num_bits);
    for (size_t i : indices) {
        if (i >= num_bits) {
            throw Error(
                ErrorCode::kDimensionMismatch,
                "index " + std::to_string(i) + " out of range for length " + std::to_string(num_bits));
        }
        v.set(i);
    }
    return v;
}

BitVector BitVector::from_indices(size_t num_bits, std::initializer_list<size_t> indices) {
    return from_indices(num_bits, std::span<const size_t>(indices.begin(), indices.size()));
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw Error(ErrorCode::kParse, "bit string contains '" + std::string(1, bits[i]) + "'");
        }
    }
    return v;
}

BitVector BitVector::ones(size_t num_bits) {
    BitVector v(num_bits);
    for (auto &w : v.words_) {
        w = ~uint64_t{0};
    }
    if (num_bits & 63) {
        v.words_.back() &= (uint64_t{1} << (num_bits & 63)) - 1;
    }
    return v;
}

size_t BitVector::weight() const noexcept {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) {
        return w == 0;
    });
}

bool BitVector::dot(const BitVector &other) const {
    return overlap(other) & 1;
}

size_t BitVector::overlap(const BitVector &other) const {
    require_same_size(*this, other);
    size_t total = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        total += std::popcount(words_[k] & other.words_[k]);
    }
    return total;
}

std::optional<size_t> BitVector::first_set() const noexcept {
    for (size_t k = 0; k < words_.size(); k++) {
        if (words_[k]) {
            return k * 64 + std::countr_zero(words_[k]);
        }
    }
    return std::nullopt;
}

std::vector<size_t> BitVector::support() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            out.push_back(k * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::string BitVector::str() const {
    std::string out(num_bits_, '0');
    for (size_t i = 0; i < num_bits_; i++) {
        if ((*this)[i]) {
            out[i] = '1';
        }
    }
    return out;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    require_same_size(*this, other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    require_same_size(*this, other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    require_same_size(*this, other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

BitVector BitVector::complement() const {
    return *this ^ ones(num_bits_);
}

BitVector BitVector::select(std::span<const size_t> coords) const {
    BitVector out(coords.size());
    for (size_t j = 0; j < coords.size(); j++) {
        if ((*this)[coords[j]]) {
            out.set(j);
        }
    }
    return out;
}

BitVector BitVector::scatter(size_t num_bits, std::span<const size_t> coords) const {
    if (coords.size() != num_bits_) {
        throw Error(ErrorCode::kDimensionMismatch, "scatter coordinate count does not match vector length");
    }
    BitVector out(num_bits);
    for (size_t j = 0; j < coords.size(); j++) {
        if ((*this)[j]) {
            out.set(coords[j]);
        }
    }
    return out;
}

BitVector BitVector::concat(const BitVector &tail) const {
    BitVector out(num_bits_ + tail.num_bits_);
    for (size_t i = 0; i < num_bits_; i++) {
        if ((*this)[i]) {
            out.set(i);
        }
    }
    for (size_t i = 0; i < tail.num_bits_; i++) {
        if (tail[i]) {
            out.set(num_bits_ + i);
        }
    }
    return out;
}

BitVector BitVector::slice(size_t start, size_t length) const {
    if (start + length > num_bits_) {
        throw Error(ErrorCode::kDimensionMismatch, "slice out of range");
    }
    BitVector out(length);
    for (size_t i = 0; i < length; i++) {
        if ((*this)[start + i]) {
            out.set(i);
        }
    }
    return out;
}

size_t BitVector::hash() const noexcept {
    uint64_t h = 0xcbf29ce484222325ULL ^ num_bits_;
    for (uint64_t w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
}

bool support_less(const BitVector &a, const BitVector &b) {
    auto sa = a.support();
    auto sb = b.support();
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

}  // namespace majcodes
