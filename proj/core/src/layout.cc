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

#include "majcodes/layout.h"

#include <algorithm>
#include <cstdlib>

#include "majcodes/error.h"

namespace majcodes {

Layout::Layout(std::vector<Point> positions, std::array<std::optional<int>, 2> periods)
    : positions_(std::move(positions)), periods_(periods) {
    for (int axis = 0; axis < 2; axis++) {
        if (!periods_[axis]) {
            continue;
        }
        int p = *periods_[axis];
        if (p <= 0) {
            throw Error(ErrorCode::kBadParams, "periodic extent must be positive");
        }
        for (const auto &pt : positions_) {
            int c = axis == 0 ? pt.x : pt.y;
            if (c < 0 || c >= p) {
                throw Error(
                    ErrorCode::kBadParams,
                    "coordinate " + std::to_string(c) + " outside periodic extent " + std::to_string(p));
            }
        }
    }
}

Layout Layout::line(size_t num_modes) {
    std::vector<Point> pts;
    for (size_t i = 0; i < num_modes; i++) {
        pts.push_back({int(i), 0});
    }
    return Layout(std::move(pts));
}

int Layout::axis_distance(int axis, int a, int b) const {
    int d = std::abs(a - b);
    if (periods_[axis]) {
        d = std::min(d, *periods_[axis] - d);
    }
    return d;
}

int Layout::distance(size_t u, size_t v) const {
    return std::max(
        axis_distance(0, positions_[u].x, positions_[v].x), axis_distance(1, positions_[u].y, positions_[v].y));
}

int Layout::axis_spread(int axis, std::vector<int> values) const {
    if (values.empty()) {
        return 0;
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (!periods_[axis]) {
        return values.back() - values.front();
    }
    int best = 0;
    for (size_t i = 0; i < values.size(); i++) {
        for (size_t j = i + 1; j < values.size(); j++) {
            best = std::max(best, axis_distance(axis, values[i], values[j]));
        }
    }
    return best;
}

size_t Layout::diameter(const BitVector &support) const {
    if (support.size() != positions_.size()) {
        throw Error(ErrorCode::kDimensionMismatch, "support length does not match layout size");
    }
    auto modes = support.support();
    if (modes.empty()) {
        return 0;
    }
    std::vector<int> xs;
    std::vector<int> ys;
    for (size_t m : modes) {
        xs.push_back(positions_[m].x);
        ys.push_back(positions_[m].y);
    }
    // Chebyshev distance is a max over axes, so the largest pairwise
    // distance is the larger of the two per-axis spreads.
    return size_t(std::max(axis_spread(0, std::move(xs)), axis_spread(1, std::move(ys)))) + 1;
}

std::pair<int, int> Layout::axis_range(int axis) const {
    if (periods_[axis]) {
        return {0, *periods_[axis] - 1};
    }
    if (positions_.empty()) {
        return {0, -1};
    }
    int lo = coordinate(0, axis);
    int hi = lo;
    for (size_t i = 0; i < positions_.size(); i++) {
        lo = std::min(lo, coordinate(i, axis));
        hi = std::max(hi, coordinate(i, axis));
    }
    return {lo, hi};
}

}  // namespace majcodes
