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

#ifndef MAJCODES_MAJORANA_CODE_H
#define MAJCODES_MAJORANA_CODE_H

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "majcodes/bit_vector.h"
#include "majcodes/gf2.h"
#include "majcodes/layout.h"
#include "majcodes/weight_search.h"

namespace majcodes {

/// Exact fraction, always stored in lowest terms with a positive denominator.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n, int64_t d);

    /// "p/q", e.g. "1/1" or "1/2".
    std::string str() const;
    bool operator==(const Rational &) const = default;
};

/// A Majorana fermion code on `num_modes` modes. Each generator row is the
/// support of a stabilizer c_A; phases are not tracked.
class MajoranaCode {
   public:
    MajoranaCode() = default;
    MajoranaCode(size_t num_modes, BitMatrix generators, std::optional<Layout> layout = std::nullopt);

    static MajoranaCode from_supports(
        size_t num_modes, const std::vector<std::vector<size_t>> &supports,
        std::optional<Layout> layout = std::nullopt);

    size_t num_modes() const noexcept {
        return num_modes_;
    }
    const BitMatrix &generators() const noexcept {
        return generators_;
    }
    const std::optional<Layout> &layout() const noexcept {
        return layout_;
    }
    /// Throws NoLayout when absent.
    const Layout &require_layout() const;
    MajoranaCode with_layout(std::optional<Layout> layout) const;

    size_t rank() const;
    /// Basis of supports with even overlap with every generator.
    BitMatrix centralizer_basis() const;

   private:
    size_t num_modes_ = 0;
    BitMatrix generators_;
    std::optional<Layout> layout_;
};

/// True when c_a and c_b commute: |a||b| + |a & b| is even.
bool majorana_commutes(const BitVector &a, const BitVector &b);

struct ValidationReport {
    std::vector<size_t> odd_weight_rows;
    std::vector<std::pair<size_t, size_t>> odd_overlap_pairs;

    bool ok() const {
        return odd_weight_rows.empty() && odd_overlap_pairs.empty();
    }
    std::vector<std::string> messages() const;
};

ValidationReport validate(const MajoranaCode &code);

struct LogicalCount {
    size_t logical_modes = 0;
    Rational k;
};

LogicalCount count_logicals(const MajoranaCode &code);

/// 1 when some logical operator has odd weight, i.e. the all-modes product is
/// not a stabilizer.
int k_odd(const MajoranaCode &code);

/// Centralizer and stabilizer spaces of a code, computed once.
struct LogicalSpaces {
    explicit LogicalSpaces(const MajoranaCode &code);

    BitMatrix centralizer;
    Echelon stabilizers;
};

/// A logical operator supported inside `region` with the requested parity,
/// preferring low weight. nullopt when none exists.
std::optional<BitVector> find_logical_in_region(
    const LogicalSpaces &spaces, const BitVector &region, Parity parity);

struct MajoranaDistance {
    SearchResult search;
    bool exhausted() const {
        return search.exhausted();
    }
    size_t value() const {
        return search.hit->weight;
    }
};

/// Minimum weight over the centralizer minus the stabilizer group, searched
/// up to `max_weight`. Throws NoLogicals when there are no logical modes.
MajoranaDistance distance(
    const MajoranaCode &code, size_t max_weight = std::numeric_limits<size_t>::max(), unsigned threads = 1,
    Parity parity = Parity::kAny);

struct EvenDiameter {
    /// nullopt when no even logical operator exists.
    std::optional<size_t> diameter;
    BitVector witness;
    /// False only when the search had to fall back to an upper bound.
    bool exact = true;
};

/// Minimum layout diameter of an even logical operator.
///
/// For each candidate diameter D the search visits every maximal set of
/// modes whose pairwise per-axis distances are at most D - 1 (a product of
/// per-axis maximal cliques) and asks linear algebra whether an even logical
/// operator fits inside. The first D that succeeds is exact. Per-axis cliques
/// on periodic axes come from Bron-Kerbosch; past `clique_cap` cliques the
/// search uses arcs only and reports an upper bound.
EvenDiameter l_even(const MajoranaCode &code, size_t clique_cap = 20000);

struct LogicalPair {
    BitVector x;
    BitVector z;
};

/// Symplectic basis of logical operators under the Majorana commutation
/// rule. When the code has odd logical operators the first pair is
/// (odd X, class of the all-modes product) and every other operator is even.
std::vector<LogicalPair> canonical_logical_basis(const MajoranaCode &code);

/// Experimental: a logical basis in which every X and Z operator is odd,
/// obtained from the canonical basis by symplectic transvections. nullopt when
/// the code has no odd logical operator. Each returned basis is verified
/// before it is handed back.
std::optional<std::vector<LogicalPair>> all_odd_logical_basis(const MajoranaCode &code);

/// Largest pairwise distance inside any generator support (generator
/// diameter minus one).
int max_generator_spread(const MajoranaCode &code);

/// True when the support cannot be split into two parts whose mutual
/// distance exceeds `link`.
bool is_connected_support(const Layout &layout, const BitVector &support, int link);

struct ConnectivityReport {
    std::optional<size_t> weight;
    int link = 0;
    size_t num_minimum_logicals = 0;
    size_t num_connected = 0;
    std::optional<BitVector> connected_example;

    bool some_connected() const {
        return num_connected > 0;
    }
    bool all_connected() const {
        return num_minimum_logicals > 0 && num_connected == num_minimum_logicals;
    }
};

/// Enumerates minimum-weight logical operators and checks which have
/// connected support, with the link length set to the largest generator
/// spread.
ConnectivityReport min_logical_connected(
    const MajoranaCode &code, size_t max_weight = std::numeric_limits<size_t>::max(),
    size_t enumeration_cap = 1000000);

struct AnalyzeOptions {
    size_t max_weight = std::numeric_limits<size_t>::max();
    unsigned threads = 1;
    bool compute_l_even = true;
};

struct AnalysisReport {
    size_t modes = 0;
    size_t rank = 0;
    size_t logical_modes = 0;
    Rational k;
    int k_odd = 0;
    size_t max_weight = 0;
    /// Absent when there are no logical modes.
    std::optional<SearchResult> distance;
    /// Absent without a layout or without logical modes.
    std::optional<EvenDiameter> l_even;
    /// Minimum-weight logical supports found by the distance search.
    std::vector<BitVector> witnesses;
};

AnalysisReport analyze(const MajoranaCode &code, const AnalyzeOptions &options = {});

}  // namespace majcodes

#endif
