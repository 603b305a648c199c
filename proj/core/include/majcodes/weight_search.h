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

#ifndef MAJCODES_WEIGHT_SEARCH_H
#define MAJCODES_WEIGHT_SEARCH_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "majcodes/bit_vector.h"
#include "majcodes/gf2.h"

namespace majcodes {

enum class Parity { kAny, kEven, kOdd };

/// How a vector's weight is counted. Coordinates are grouped into sites; each
/// site offers a list of nonzero local patterns ("atoms"). A candidate picks
/// at most one atom per site and its weight is the number of sites used.
///
/// Plain GF(2) weight is one site per bit with a single atom. Qubit weight on
/// (x|z) vectors is one site per qubit with atoms X, Z and Y.
struct SiteModel {
    size_t num_bits = 0;
    std::vector<std::vector<BitVector>> atoms;

    static SiteModel single_bits(size_t num_bits);
    static SiteModel qubits(size_t num_qubits);

    size_t num_sites() const {
        return atoms.size();
    }
    bool single_atom() const;
};

struct SearchHit {
    size_t weight = 0;
    BitVector vector;
};

struct SearchResult {
    std::optional<SearchHit> hit;
    /// Every weight up to and including this one was searched exhaustively.
    size_t searched_through = 0;

    bool exhausted() const {
        return !hit.has_value();
    }
};

struct SearchOptions {
    size_t max_weight = std::numeric_limits<size_t>::max();
    Parity parity = Parity::kAny;
    unsigned threads = 1;
    bool meet_in_the_middle = true;
};

/// Weight-ordered search for vectors of rowspace(kernel) \ rowspace(span).
///
/// Candidates are generated site by site and tested by syndromes: membership
/// in the kernel space is "all kernel checks vanish" and membership in the
/// span is additionally "all logical checks vanish", so a candidate is a hit
/// when its kernel syndrome is zero and its logical syndrome is not.
///
/// Each weight class is either enumerated depth-first or split into a lower
/// half (the smallest ceil(w/2) sites) and an upper half whose syndromes are
/// sorted into a table, whichever is cheaper. Among hits of minimum weight the
/// one with the lexicographically smallest support wins, then the smallest
/// vector, so results do not depend on the thread count.
class LogicalSearch {
   public:
    LogicalSearch(const BitMatrix &kernel, const BitMatrix &span, SiteModel sites);

    SearchResult find_minimum(const SearchOptions &options) const;

    /// Calls `visit` for every hit of exactly `weight` sites, in no
    /// particular order. Stops early when `visit` returns false.
    void for_each_of_weight(
        size_t weight, Parity parity, const std::function<bool(const BitVector &)> &visit) const;

    /// Number of independent logical classes, dim(kernel) - dim(span).
    size_t num_logical_classes() const noexcept {
        return num_logical_checks_;
    }

   private:
    struct Candidate;
    struct Table;

    void scan_dfs(size_t weight, Parity parity, size_t first_site_mod, size_t stride, bool stop_at_first,
                  const std::function<bool(const std::vector<uint32_t> &)> &on_hit) const;
    void scan_mitm(size_t weight, Parity parity, size_t first_site_mod, size_t stride, bool stop_at_first,
                   const Table &table, const std::function<bool(const std::vector<uint32_t> &)> &on_hit) const;
    Table build_table(size_t weight) const;
    bool prefer_mitm(size_t weight) const;
    BitVector assemble(const std::vector<uint32_t> &choice) const;

    SiteModel sites_;
    size_t kernel_words_ = 0;
    size_t logical_words_ = 0;
    size_t num_logical_checks_ = 0;
    // Per site, per atom: kernel syndrome words then logical syndrome words.
    std::vector<std::vector<std::vector<uint64_t>>> syndromes_;
    std::vector<std::vector<bool>> atom_parity_;
};

/// Minimum plain-weight vector of rowspace(kernel) \ rowspace(span) with the
/// given parity, searching weights 1..max_weight.
SearchResult min_weight_not_in_span(
    const BitMatrix &kernel, const BitMatrix &span, size_t max_weight, Parity parity = Parity::kAny);

}  // namespace majcodes

#endif
