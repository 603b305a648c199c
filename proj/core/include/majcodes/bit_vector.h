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

#ifndef MAJCODES_BIT_VECTOR_H
#define MAJCODES_BIT_VECTOR_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace majcodes {

/// A fixed-length vector over GF(2), packed 64 bits per word.
///
/// Bits past `size()` in the last word are always zero, so word-wise
/// comparisons and popcounts never see garbage.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits);

    static BitVector from_indices(size_t num_bits, std::span<const size_t> indices);
    static BitVector from_indices(size_t num_bits, std::initializer_list<size_t> indices);
    /// Parses a string of '0'/'1' characters, index 0 first.
    static BitVector from_string(std::string_view bits);
    static BitVector ones(size_t num_bits);

    size_t size() const noexcept {
        return num_bits_;
    }
    size_t num_words() const noexcept {
        return words_.size();
    }
    std::span<const uint64_t> words() const noexcept {
        return words_;
    }
    std::span<uint64_t> words() noexcept {
        return words_;
    }

    bool operator[](size_t i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool value = true) noexcept {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(size_t i) noexcept {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    size_t weight() const noexcept;
    bool parity() const noexcept {
        return weight() & 1;
    }
    bool none() const noexcept;
    bool any() const noexcept {
        return !none();
    }

    /// Standard GF(2) dot product.
    bool dot(const BitVector &other) const;
    /// Size of the intersection of the two supports.
    size_t overlap(const BitVector &other) const;

    std::optional<size_t> first_set() const noexcept;
    std::vector<size_t> support() const;
    /// '0'/'1' string, index 0 first.
    std::string str() const;

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        a ^= b;
        return a;
    }
    friend BitVector operator&(BitVector a, const BitVector &b) {
        a &= b;
        return a;
    }
    friend BitVector operator|(BitVector a, const BitVector &b) {
        a |= b;
        return a;
    }
    BitVector complement() const;

    bool operator==(const BitVector &other) const = default;

    /// Keeps only the listed coordinates, in the listed order.
    BitVector select(std::span<const size_t> coords) const;
    /// Inverse of `select`: places bit j of `this` at position coords[j].
    BitVector scatter(size_t num_bits, std::span<const size_t> coords) const;
    BitVector concat(const BitVector &tail) const;
    BitVector slice(size_t start, size_t length) const;

    size_t hash() const noexcept;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Orders supports lexicographically as sorted index lists, then by length.
/// This is the tie-break used for every reported witness.
bool support_less(const BitVector &a, const BitVector &b);

struct BitVectorHash {
    size_t operator()(const BitVector &v) const noexcept {
        return v.hash();
    }
};

}  // namespace majcodes

#endif
