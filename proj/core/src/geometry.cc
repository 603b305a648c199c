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


#include "majcodes/geometry.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <string>

#include "majcodes/error.h"

namespace majcodes {

namespace {

bool parse_int(std::string_view s, long long &out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

BitVector make_region(size_t num_modes, std::span<const size_t> modes) {
    BitVector r(num_modes);
    for (size_t i : modes) {
        if (i >= num_modes) {
            throw Error(
                ErrorCode::kInvalidRegion,
                "mode " + std::to_string(i) + " out of range for " + std::to_string(num_modes) + " modes");
        }
        r.set(i);
    }
    return r;
}

BitVector parse_region(std::string_view text, size_t num_modes, const std::optional<Layout> &layout) {
    text = trim(text);
    if (text.rfind("rect", 0) == 0) {
        if (!layout) {
            throw Error(ErrorCode::kInvalidRegion, "rectangle regions need a layout");
        }
        std::istringstream in{std::string(text.substr(4))};
        std::vector<long long> v;
        std::string tok;
        while (in >> tok) {
            long long x;
            if (!parse_int(tok, x)) {
                throw Error(ErrorCode::kInvalidRegion, "bad rectangle coordinate '" + tok + "'");
            }
            v.push_back(x);
        }
        if (v.size() != 4) {
            throw Error(ErrorCode::kInvalidRegion, "expected 'rect x0 y0 x1 y1'");
        }
        BitVector r(num_modes);
        for (size_t i = 0; i < num_modes; i++) {
            const Point &p = layout->position(i);
            if (p.x >= v[0] && p.x <= v[2] && p.y >= v[1] && p.y <= v[3]) {
                r.set(i);
            }
        }
        return r;
    }
    std::vector<size_t> modes;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string_view tok = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        long long x;
        if (tok.empty() || !parse_int(tok, x) || x < 0) {
            throw Error(ErrorCode::kInvalidRegion, "bad mode index '" + std::string(tok) + "'");
        }
        modes.push_back(size_t(x));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return make_region(num_modes, modes);
}

size_t generator_diameter(const MajoranaCode &code) {
    const Layout &layout = code.require_layout();
    size_t best = 0;
    for (const auto &g : code.generators().rows()) {
        best = std::max(best, layout.diameter(g));
    }
    return best;
}

BitMatrix stabilizers_within(const MajoranaCode &code, const BitVector &region) {
    if (region.size() != code.num_modes()) {
        throw Error(ErrorCode::kDimensionMismatch, "region length does not match mode count");
    }
    return subspace_supported_on(code.generators(), region);
}

BitMatrix stabilizers_restricted(const MajoranaCode &code, const BitVector &region) {
    if (region.size() != code.num_modes()) {
        throw Error(ErrorCode::kDimensionMismatch, "region length does not match mode count");
    }
    std::vector<size_t> coords = region.support();
    return project(code.generators(), coords);
}

CleanResult is_cleanable(const MajoranaCode &code, const BitVector &region) {
    CleanResult result;
    BitMatrix within = stabilizers_within(code, region);
    BitMatrix restricted = stabilizers_restricted(code, region);
    std::vector<size_t> coords = region.support();
    result.dim_within = within.num_rows();
    result.dim_restricted = restricted.num_rows();
    result.cleanable = result.dim_within == coords.size() - result.dim_restricted;
    if (result.cleanable) {
        return result;
    }
    // Prefer a light witness; fall back to any vector of (S^M)^perp outside S(M).
    LogicalSpaces spaces(code);
    result.witness = find_logical_in_region(spaces, region, Parity::kAny);
    if (!result.witness) {
        BitMatrix perp = orthogonal_complement(restricted);
        Echelon local{BitMatrix(coords.size())};
        for (const auto &s : within.rows()) {
            local.insert(s.select(coords));
        }
        for (const auto &v : perp.rows()) {
            if (!local.contains(v)) {
                result.witness = v.scatter(code.num_modes(), coords);
                break;
            }
        }
    }
    if (!result.witness) {
        throw Error(ErrorCode::kInconsistencyDetected, "uncleanable region without a logical witness");
    }
    return result;
}

StripPartition make_strips(const Layout &layout, int axis, int width, bool force_periodic) {
    if (axis != 0 && axis != 1) {
        throw Error(ErrorCode::kBadParams, "axis must be 0 (x) or 1 (y)");
    }
    if (width < 1) {
        throw Error(ErrorCode::kBadParams, "strip width must be at least 1");
    }
    if (layout.periodic(axis) && !force_periodic) {
        throw Error(ErrorCode::kPeriodicAxis, "refusing to cut a periodic axis without force");
    }
    auto [lo, hi] = layout.axis_range(axis);
    int extent = hi - lo + 1;
    if (width > extent) {
        throw Error(
            ErrorCode::kWidthExceedsLattice,
            "width " + std::to_string(width) + " exceeds lattice extent " + std::to_string(extent));
    }
    StripPartition out;
    out.axis = axis;
    int count = extent / width;
    for (int s = 0; s < count; s++) {
        Strip strip;
        strip.lo = lo + s * width;
        strip.hi = s + 1 == count ? hi : strip.lo + width - 1;
        strip.modes = BitVector(layout.size());
        out.strips.push_back(std::move(strip));
    }
    for (size_t i = 0; i < layout.size(); i++) {
        int s = std::min((layout.coordinate(i, axis) - lo) / width, count - 1);
        out.strips[s].modes.set(i);
    }
    return out;
}

StripVerdict strip_lemma_analysis(const MajoranaCode &code, const StripPartition &partition) {
    StripVerdict verdict;
    verdict.generator_diameter = generator_diameter(code);
    if (partition.strips.empty()) {
        throw Error(ErrorCode::kBadParams, "empty strip partition");
    }
    verdict.min_strip_width = partition.strips.front().width();
    for (const auto &s : partition.strips) {
        verdict.min_strip_width = std::min(verdict.min_strip_width, s.width());
        if (s.modes.size() != code.num_modes()) {
            throw Error(ErrorCode::kDimensionMismatch, "strip masks do not match mode count");
        }
    }
    if (size_t(verdict.min_strip_width) < verdict.generator_diameter) {
        throw Error(
            ErrorCode::kStripsTooNarrow, "strip width " + std::to_string(verdict.min_strip_width) +
                                             " is below the generator diameter " +
                                             std::to_string(verdict.generator_diameter));
    }
    if (count_logicals(code).logical_modes == 0) {
        throw Error(ErrorCode::kNoLogicals, "the code has no logical modes");
    }

    LogicalSpaces spaces(code);
    std::vector<std::optional<BitVector>> odd(partition.strips.size());
    for (size_t i = 0; i < partition.strips.size(); i++) {
        const BitVector &region = partition.strips[i].modes;
        if (!verdict.even) {
            if (auto hit = find_logical_in_region(spaces, region, Parity::kEven)) {
                verdict.even = EvenStripWitness{i, std::move(*hit)};
            }
        }
        odd[i] = find_logical_in_region(spaces, region, Parity::kOdd);
    }
    for (size_t i = 0; i < odd.size() && !verdict.odd; i++) {
        for (size_t j = i + 1; j < odd.size() && odd[i]; j++) {
            if (odd[j] && !spaces.stabilizers.contains(*odd[i] ^ *odd[j])) {
                verdict.odd = OddStripWitness{i, j, *odd[i], *odd[j]};
                break;
            }
        }
    }
    if (!verdict.even && !verdict.odd) {
        throw Error(ErrorCode::kInconsistencyDetected, "no strip supports an even logical or an odd pair");
    }
    return verdict;
}

}  // namespace majcodes
