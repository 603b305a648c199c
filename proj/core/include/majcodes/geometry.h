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


#ifndef MAJCODES_GEOMETRY_H
#define MAJCODES_GEOMETRY_H

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "majcodes/bit_vector.h"
#include "majcodes/gf2.h"
#include "majcodes/layout.h"
#include "majcodes/majorana_code.h"

namespace majcodes {

/// Region of modes as a mask over the code's modes. Throws InvalidRegion when
/// an index is out of range.
BitVector make_region(size_t num_modes, std::span<const size_t> modes);

/// Parses "3,4,5" (mode indices) or "rect x0 y0 x1 y1" (inclusive box on the
/// layout). Throws InvalidRegion.
BitVector parse_region(std::string_view text, size_t num_modes, const std::optional<Layout> &layout);

/// Largest layout diameter of a generator support. Throws NoLayout.
size_t generator_diameter(const MajoranaCode &code);

/// Basis of the stabilizers supported inside the region, S(M).
BitMatrix stabilizers_within(const MajoranaCode &code, const BitVector &region);

/// Basis of the restrictions of stabilizers to the region, S^M, as vectors
/// over the region's modes in increasing order.
BitMatrix stabilizers_restricted(const MajoranaCode &code, const BitVector &region);

struct CleanResult {
    bool cleanable = true;
    size_t dim_within = 0;
    size_t dim_restricted = 0;
    /// A logical operator supported on the region when it is not cleanable.
    std::optional<BitVector> witness;
};

/// A region is cleanable when dim S(M) = |M| - dim S^M, i.e. every vector on
/// M orthogonal to the restricted stabilizers is itself a stabilizer.
CleanResult is_cleanable(const MajoranaCode &code, const BitVector &region);

struct Strip {
    int lo = 0;
    int hi = 0;
    BitVector modes;

    int width() const {
        return hi - lo + 1;
    }
};

struct StripPartition {
    int axis = 0;
    std::vector<Strip> strips;
};

/// Contiguous bands of `width` coordinate units along `axis`; the last band
/// absorbs the remainder. Periodic axes are cut only when `force_periodic`.
StripPartition make_strips(const Layout &layout, int axis, int width, bool force_periodic = false);

struct EvenStripWitness {
    size_t strip = 0;
    BitVector logical;
};

struct OddStripWitness {
    size_t first_strip = 0;
    size_t second_strip = 0;
    BitVector first;
    BitVector second;
};

struct StripVerdict {
    size_t generator_diameter = 0;
    int min_strip_width = 0;
    /// Case (i): an even logical operator inside a single strip.
    std::optional<EvenStripWitness> even;
    /// Case (ii): inequivalent odd logical operators in two different strips.
    std::optional<OddStripWitness> odd;
};

/// Looks for both witness kinds. Throws StripsTooNarrow when some strip is
/// narrower than the generator diameter and InconsistencyDetected when
/// neither kind exists.
StripVerdict strip_lemma_analysis(const MajoranaCode &code, const StripPartition &partition);

}  // namespace majcodes

#endif
