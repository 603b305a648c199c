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


#include "majcodes/code_maps.h"

#include <algorithm>
#include <limits>

#include "majcodes/error.h"

namespace majcodes {

MajoranaCode stabilizer_to_majorana(const StabilizerCode &code, const std::optional<std::vector<Point>> &qubit_positions) {
    size_t n = code.num_qubits();
    if (qubit_positions && qubit_positions->size() != n) {
        throw Error(ErrorCode::kInvalidInputCode, "qubit position count does not match the code");
    }
    size_t m = 4 * n;
    BitMatrix gens(m);
    for (const auto &g : code.generators()) {
        BitVector row(m);
        for (size_t j = 0; j < n; j++) {
            if (!g.x[j] && !g.z[j]) {
                continue;
            }
            size_t axis = g.x[j] && g.z[j] ? 1 : (g.x[j] ? 0 : 2);
            row.flip(4 * j + axis);
            row.flip(4 * j + 3);
        }
        gens.push_back(std::move(row));
    }
    for (size_t j = 0; j < n; j++) {
        gens.push_back(BitVector::from_indices(m, {4 * j, 4 * j + 1, 4 * j + 2, 4 * j + 3}));
    }
    std::vector<Point> pos;
    for (size_t j = 0; j < n; j++) {
        Point q = qubit_positions ? (*qubit_positions)[j] : Point{int(j), 0};
        pos.push_back({2 * q.x, 2 * q.y});
        pos.push_back({2 * q.x + 1, 2 * q.y});
        pos.push_back({2 * q.x, 2 * q.y + 1});
        pos.push_back({2 * q.x + 1, 2 * q.y + 1});
    }
    return MajoranaCode(m, std::move(gens), Layout(std::move(pos)));
}

StabilizerCode double_code(const MajoranaCode &code) {
    size_t m = code.num_modes();
    if (m % 2) {
        throw Error(ErrorCode::kOddModeCount, "doubling needs an even number of modes, got " + std::to_string(m));
    }
    std::vector<PauliOperator> gens;
    for (const auto &g : code.generators().rows()) {
        gens.emplace_back(g, BitVector(m));
    }
    for (const auto &g : code.generators().rows()) {
        gens.emplace_back(BitVector(m), g);
    }
    return StabilizerCode(m, std::move(gens));
}

PauliOperator jordan_wigner(const BitVector &support) {
    size_t m = support.size();
    if (m % 2) {
        throw Error(ErrorCode::kOddTotalModes, "Jordan-Wigner needs an even number of modes, got " + std::to_string(m));
    }
    PauliOperator p(m / 2);
    for (size_t u : support.support()) {
        size_t q = u / 2;
        for (size_t i = 0; i < q; i++) {
            p.z.flip(i);
        }
        p.x.flip(q);
        if (u % 2) {
            p.z.flip(q);
        }
    }
    return p;
}

StabilizerCode jw_map_code(const MajoranaCode &code) {
    if (code.num_modes() % 2) {
        throw Error(
            ErrorCode::kOddTotalModes,
            "Jordan-Wigner needs an even number of modes, got " + std::to_string(code.num_modes()));
    }
    std::vector<PauliOperator> gens;
    for (const auto &g : code.generators().rows()) {
        gens.push_back(jordan_wigner(g));
    }
    return StabilizerCode(code.num_modes() / 2, std::move(gens));
}

namespace {

bool layout_usable(const MajoranaCode &code) {
    return code.num_modes() == 0 || (code.layout() && !code.layout()->periodic(0));
}

}  // namespace

MajoranaCode product(const MajoranaCode &first, const MajoranaCode &second, size_t spacer_pairs) {
    size_t m1 = first.num_modes();
    size_t ms = 2 * spacer_pairs;
    size_t m2 = second.num_modes();
    size_t m = m1 + ms + m2;
    BitMatrix gens(m);
    for (const auto &g : first.generators().rows()) {
        gens.push_back(g.concat(BitVector(ms + m2)));
    }
    for (size_t i = 0; i < spacer_pairs; i++) {
        gens.push_back(BitVector::from_indices(m, {m1 + 2 * i, m1 + 2 * i + 1}));
    }
    for (const auto &g : second.generators().rows()) {
        gens.push_back(BitVector(m1 + ms).concat(g));
    }

    std::optional<Layout> layout;
    if (layout_usable(first) && layout_usable(second)) {
        std::vector<Point> pos;
        int next_x = 0;
        std::array<std::optional<int>, 2> periods;
        if (m1 > 0) {
            pos = first.layout()->positions();
            next_x = first.layout()->axis_range(0).second + 1;
            periods[1] = first.layout()->periods()[1];
        }
        for (size_t i = 0; i < ms; i++) {
            pos.push_back({next_x + int(i), 0});
        }
        next_x += int(ms);
        if (m2 > 0) {
            int shift = next_x - second.layout()->axis_range(0).first;
            for (const auto &p : second.layout()->positions()) {
                pos.push_back({p.x + shift, p.y});
            }
            if (m1 > 0 && periods[1] != second.layout()->periods()[1]) {
                periods[1].reset();
            } else if (m1 == 0) {
                periods[1] = second.layout()->periods()[1];
            }
        }
        if (ms > 0 && periods[1]) {
            periods[1].reset();
        }
        layout = Layout(std::move(pos), periods);
    }
    return MajoranaCode(m, std::move(gens), std::move(layout));
}

}  // namespace majcodes
