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


#include "majcodes/catalog.h"

#include <set>

#include "majcodes/color_code.h"
#include "majcodes/error.h"

namespace majcodes {

MajoranaCode kitaev_chain(size_t n) {
    if (n < 1) {
        throw Error(ErrorCode::kBadParams, "kitaev-chain needs n >= 1");
    }
    std::vector<std::vector<size_t>> gens;
    for (size_t j = 1; j < n; j++) {
        gens.push_back({2 * j - 1, 2 * j});
    }
    return MajoranaCode::from_supports(2 * n, gens, Layout::line(2 * n));
}

MajoranaCode four_mode_code() {
    return MajoranaCode::from_supports(4, {{0, 1, 2, 3}}, Layout::line(4));
}

StabilizerCode steane_code() {
    const char *checks[] = {"1010101", "0110011", "0001111"};
    std::vector<PauliOperator> gens;
    for (const char *c : checks) {
        gens.emplace_back(BitVector::from_string(c), BitVector(7));
    }
    for (const char *c : checks) {
        gens.emplace_back(BitVector(7), BitVector::from_string(c));
    }
    return StabilizerCode(7, std::move(gens));
}

MajoranaCode steane_majorana() {
    return MajoranaCode::from_supports(7, {{0, 2, 4, 6}, {1, 2, 5, 6}, {3, 4, 5, 6}}, Layout::line(7));
}

MajoranaCode hex_torus_code(int lx, int ly) {
    return face_code(build_hex_torus(lx, ly));
}

MajoranaCode color_cylinder_code(int r, int l) {
    return face_code(build_cylinder(r, l));
}

namespace {

int take(const std::map<std::string, int> &params, std::set<std::string> &used, const std::string &key,
         std::string_view name) {
    auto it = params.find(key);
    if (it == params.end()) {
        throw Error(ErrorCode::kBadParams, std::string(name) + " needs parameter " + key);
    }
    used.insert(key);
    return it->second;
}

}  // namespace

CatalogEntry catalog_build(std::string_view name, const std::map<std::string, int> &params) {
    std::set<std::string> used;
    auto finish = [&](CatalogEntry entry) -> CatalogEntry {
        for (const auto &[k, _] : params) {
            if (!used.count(k)) {
                throw Error(ErrorCode::kBadParams, std::string(name) + " does not take parameter " + k);
            }
        }
        return entry;
    };
    if (name == "kitaev-chain") {
        int n = take(params, used, "n", name);
        if (n < 1) {
            throw Error(ErrorCode::kBadParams, "kitaev-chain needs n >= 1");
        }
        return finish(kitaev_chain(size_t(n)));
    }
    if (name == "four-mode") {
        return finish(four_mode_code());
    }
    if (name == "steane") {
        return finish(steane_code());
    }
    if (name == "steane-majorana") {
        return finish(steane_majorana());
    }
    if (name == "hex-torus") {
        int lx = take(params, used, "Lx", name);
        int ly = take(params, used, "Ly", name);
        return finish(hex_torus_code(lx, ly));
    }
    if (name == "color-cylinder") {
        int r = take(params, used, "R", name);
        int l = take(params, used, "L", name);
        return finish(color_cylinder_code(r, l));
    }
    throw Error(ErrorCode::kUnknownName, "no catalog entry named '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
    return {"kitaev-chain", "four-mode", "steane", "steane-majorana", "hex-torus", "color-cylinder"};
}

}  // namespace majcodes
