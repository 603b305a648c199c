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


#ifndef MAJCODES_CODE_MAPS_H
#define MAJCODES_CODE_MAPS_H

#include <cstddef>
#include <optional>
#include <vector>

#include "majcodes/bit_vector.h"
#include "majcodes/layout.h"
#include "majcodes/majorana_code.h"
#include "majcodes/pauli_code.h"

namespace majcodes {

/// Four modes per qubit j, at indices 4j..4j+3 in the order (b^x, b^y, b^z, c).
/// X_j, Y_j and Z_j become {b^x, c}, {b^y, c} and {b^z, c}; each qubit also
/// contributes the block generator {4j, 4j+1, 4j+2, 4j+3} after all mapped
/// Pauli generators. Qubit j sits at `qubit_positions[j]` (default (j, 0)) and
/// its modes fill the 2x2 block with that corner scaled by 2.
MajoranaCode stabilizer_to_majorana(
    const StabilizerCode &code, const std::optional<std::vector<Point>> &qubit_positions = std::nullopt);

/// X-type copies of every generator followed by Z-type copies. Throws
/// OddModeCount for an odd number of modes.
StabilizerCode double_code(const MajoranaCode &code);

/// Image of c_A on m/2 qubits: mode u acts on qubit u/2 as X (even u) or Y
/// (odd u), preceded by a Z string on lower qubits. Throws OddTotalModes.
PauliOperator jordan_wigner(const BitVector &support);

StabilizerCode jw_map_code(const MajoranaCode &code);

/// Block `first`, then 2 * `spacer_pairs` idle modes bound in adjacent pairs,
/// then block `second`. Positions are kept for `first`, the spacer continues
/// along x and `second` is shifted past it; the result carries a layout only
/// when both inputs have one (or are empty) and neither is periodic in x.
MajoranaCode product(const MajoranaCode &first, const MajoranaCode &second, size_t spacer_pairs = 0);

}  // namespace majcodes

#endif
