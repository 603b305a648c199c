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

#ifndef MAJCODES_LAYOUT_H
#define MAJCODES_LAYOUT_H

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "majcodes/bit_vector.h"

namespace majcodes {

struct Point {
    int x = 0;
    int y = 0;
    bool operator==(const Point &) const = default;
};

/// Integer 2D positions for the modes of a code, with optional periodicity
/// per axis (axis 0 is x, axis 1 is y).
///
/// Distances are Chebyshev distances, wrapped on periodic axes. The diameter
/// of a support is its largest pairwise distance plus one lattice unit, so a
/// single mode has diameter 1 and the two ends of a chain of n sites have
/// diameter n. The empty support has diameter 0.
class Layout {
   public:
    Layout() = default;
    explicit Layout(std::vector<Point> positions, std::array<std::optional<int>, 2> periods = {});

    /// Mode i at (i, 0), open boundaries.
    static Layout line(size_t num_modes);

    size_t size() const noexcept {
        return positions_.size();
    }
    const std::vector<Point> &positions() const noexcept {
        return positions_;
    }
    const Point &position(size_t mode) const {
        return positions_[mode];
    }
    const std::array<std::optional<int>, 2> &periods() const noexcept {
        return periods_;
    }
    bool periodic(int axis) const {
        return periods_[axis].has_value();
    }

    int coordinate(size_t mode, int axis) const {
        return axis == 0 ? positions_[mode].x : positions_[mode].y;
    }
    int axis_distance(int axis, int a, int b) const;
    int distance(size_t u, size_t v) const;
    /// Largest wrapped distance between any two of the given coordinates.
    int axis_spread(int axis, std::vector<int> values) const;
    size_t diameter(const BitVector &support) const;

    /// Smallest and largest coordinate along an axis; for a periodic axis
    /// this is [0, period - 1].
    std::pair<int, int> axis_range(int axis) const;

    bool operator==(const Layout &) const = default;

   private:
    std::vector<Point> positions_;
    std::array<std::optional<int>, 2> periods_;
};

}  // namespace majcodes

#endif
