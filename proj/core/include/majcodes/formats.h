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


#ifndef MAJCODES_FORMATS_H
#define MAJCODES_FORMATS_H

#include <string>
#include <string_view>

#include "majcodes/color_code.h"
#include "majcodes/majorana_code.h"

namespace majcodes {

/// Reads the `.mfc` text format:
///
///     # comment
///     modes 10
///     period x 15          (optional, x or y, needs pos lines)
///     gen 1 2              (one per generator, strictly increasing indices)
///     pos 0 0 0            (mode x y; all modes or none)
///
/// Throws Parse with the offending line number.
MajoranaCode parse_mfc(std::string_view text);

std::string format_mfc(const MajoranaCode &code, std::string_view comment = {});

/// JSON object with sorted keys: modes, rank, logical_modes, k ("p/q"),
/// k_odd, max_weight, distance (number, {"exhausted": bound} or null),
/// l_even (number or null), l_even_exact and witnesses (lists of modes).
std::string report_to_json(const AnalysisReport &report, int indent = 2);

/// {"vertices": [[x, y], ...], "periods": [px, py], "edges": [[u, v], ...],
///  "faces": [[...], ...], "boundaries": [[...], ...]} with null periods for
/// open axes.
std::string surface_to_json(const SurfaceGraph &g, int indent = 2);
SurfaceGraph surface_from_json(std::string_view text);

}  // namespace majcodes

#endif
