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


#ifndef MAJCODES_CATALOG_H
#define MAJCODES_CATALOG_H

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "majcodes/majorana_code.h"
#include "majcodes/pauli_code.h"

namespace majcodes {

/// 2n modes on a line with generators {2j-1, 2j} for j = 1..n-1, leaving the
/// two end modes unpaired.
MajoranaCode kitaev_chain(size_t n);

/// Four modes on a line with the single generator {0, 1, 2, 3}.
MajoranaCode four_mode_code();

/// The [[7,1,3]] code with Hamming checks 1010101, 0110011, 0001111 for both
/// X and Z.
StabilizerCode steane_code();

/// Seven modes with generators {0,2,4,6}, {1,2,5,6}, {3,4,5,6}.
MajoranaCode steane_majorana();

/// Face code of build_hex_torus(lx, ly).
MajoranaCode hex_torus_code(int lx, int ly);

/// Face code of build_cylinder(r, l).
MajoranaCode color_cylinder_code(int r, int l);

using CatalogEntry = std::variant<MajoranaCode, StabilizerCode>;

/// Names: kitaev-chain (n), four-mode, steane, steane-majorana,
/// hex-torus (Lx, Ly), color-cylinder (R, L). Throws UnknownName for other
/// names and BadParams for missing or unexpected parameters.
CatalogEntry catalog_build(std::string_view name, const std::map<std::string, int> &params = {});

std::vector<std::string> catalog_names();

}  // namespace majcodes

#endif
