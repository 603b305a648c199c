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


#include <gtest/gtest.h>

#include <random>

#include "majcodes/catalog.h"
#include "majcodes/code_maps.h"
#include "majcodes/error.h"
#include "majcodes/gf2.h"
#include "majcodes/majorana_code.h"
#include "majcodes/pauli_code.h"
#include "oracles.h"

namespace majcodes {
namespace {

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an exception";
    return ErrorCode::kParse;
}

TEST(QubitToMajorana, Steane) {
    auto image = stabilizer_to_majorana(steane_code());
    EXPECT_EQ(image.num_modes(), 28u);
    EXPECT_EQ(image.generators().num_rows(), 13u);
    EXPECT_EQ(image.rank(), 13u);
    EXPECT_TRUE(validate(image).ok());
    EXPECT_EQ(count_logicals(image).k, Rational(1, 1));
    EXPECT_EQ(distance(image).value(), 6u);
    ASSERT_TRUE(image.layout());
}

TEST(QubitToMajorana, SingleQubitZ) {
    auto image = stabilizer_to_majorana(parse_pauli_code("Z"));
    EXPECT_EQ(image.num_modes(), 4u);
    ASSERT_EQ(image.generators().num_rows(), 2u);
    EXPECT_EQ(image.generators().row(0).support(), (std::vector<size_t>{2, 3}));
    EXPECT_EQ(image.generators().row(1).support(), (std::vector<size_t>{0, 1, 2, 3}));
    EXPECT_EQ(count_logicals(image).logical_modes, 0u);
}

TEST(QubitToMajorana, PauliLettersMapToBlockPairs) {
    auto image = stabilizer_to_majorana(parse_pauli_code("XYZ"));
    EXPECT_EQ(image.generators().row(0).support(), (std::vector<size_t>{0, 3, 5, 7, 10, 11}));
}

TEST(QubitToMajorana, FourTwoTwo) {
    auto image = stabilizer_to_majorana(parse_pauli_code("XXXX\nZZZZ"));
    EXPECT_EQ(image.num_modes(), 16u);
    EXPECT_EQ(count_logicals(image).k, Rational(2, 1));
    oracle::MajoranaSpace space(image);
    EXPECT_EQ(oracle::distance(space), 4u);
    EXPECT_EQ(distance(image).value(), 4u);
}

TEST(QubitToMajorana, LayoutUsesQubitBlocks) {
    std::vector<Point> qubits{{0, 0}, {3, 1}};
    auto image = stabilizer_to_majorana(parse_pauli_code("ZZ"), qubits);
    const auto &layout = *image.layout();
    EXPECT_EQ(layout.position(4), (Point{6, 2}));
    EXPECT_EQ(layout.position(7), (Point{7, 3}));
    EXPECT_EQ(code_of([] { stabilizer_to_majorana(parse_pauli_code("ZZ"), std::vector<Point>{{0, 0}}); }),
              ErrorCode::kInvalidInputCode);
}

TEST(Double, FourModeCode) {
    auto doubled = double_code(four_mode_code());
    EXPECT_EQ(format_pauli_code(doubled), "XXXX\nZZZZ\n");
    EXPECT_EQ(doubled.num_logical_qubits(), 2u);
    EXPECT_EQ(oracle::qubit_distance(doubled), 2u);
    EXPECT_EQ(qubit_distance(doubled).value(), 2u);
    EXPECT_TRUE(is_weakly_self_dual_css(doubled));
}

TEST(Double, KitaevChain) {
    auto doubled = double_code(kitaev_chain(5));
    EXPECT_EQ(doubled.num_qubits(), 10u);
    EXPECT_EQ(doubled.num_logical_qubits(), 2u);
    EXPECT_EQ(qubit_distance(doubled).value(), 1u);
    EXPECT_EQ(oracle::qubit_distance(doubled), 1u);
}

TEST(Double, SteaneImage) {
    auto doubled = double_code(stabilizer_to_majorana(steane_code()));
    EXPECT_EQ(doubled.num_qubits(), 28u);
    EXPECT_EQ(doubled.num_logical_qubits(), 2u);
    EXPECT_EQ(qubit_distance(doubled).value(), 6u);
    EXPECT_TRUE(is_weakly_self_dual_css(doubled));
}

TEST(Double, OddModeCount) {
    EXPECT_EQ(code_of([] { double_code(steane_majorana()); }), ErrorCode::kOddModeCount);
}

TEST(JordanWigner, SingleModes) {
    auto mode = [](size_t u) { return jordan_wigner(BitVector::from_indices(4, {u})).str(); };
    EXPECT_EQ(mode(0), "XI");
    EXPECT_EQ(mode(1), "YI");
    EXPECT_EQ(mode(2), "ZX");
    EXPECT_EQ(mode(3), "ZY");
    EXPECT_EQ(jordan_wigner(BitVector::from_indices(4, {0, 1})).str(), "ZI");
    EXPECT_EQ(code_of([] { jordan_wigner(BitVector(3)); }), ErrorCode::kOddTotalModes);
}

TEST(JordanWigner, CodeImages) {
    auto chain = jw_map_code(kitaev_chain(5));
    EXPECT_EQ(chain.num_qubits(), 5u);
    EXPECT_EQ(chain.num_logical_qubits(), 1u);
    auto four = jw_map_code(four_mode_code());
    EXPECT_EQ(four.num_qubits(), 2u);
    EXPECT_EQ(four.num_logical_qubits(), 1u);
    auto empty = jw_map_code(MajoranaCode(4, BitMatrix(4)));
    EXPECT_EQ(empty.num_logical_qubits(), 2u);
    EXPECT_EQ(code_of([] { jw_map_code(steane_majorana()); }), ErrorCode::kOddTotalModes);
}

TEST(Product, SteaneHalves) {
    auto code = product(steane_majorana(), steane_majorana(), 0);
    EXPECT_EQ(code.num_modes(), 14u);
    EXPECT_EQ(count_logicals(code).k, Rational(1, 1));
    auto d = distance(code);
    EXPECT_EQ(d.value(), 3u);
    const auto &w = d.search.hit->vector;
    EXPECT_EQ(w.weight() % 2, 1u);
    EXPECT_LT(w.support().back(), 7u);
}

TEST(Product, TrivialEndsMakeKitaevChain) {
    MajoranaCode one(1, BitMatrix(1), Layout::line(1));
    for (size_t n = 1; n <= 6; n++) {
        auto code = product(one, one, n - 1);
        auto chain = kitaev_chain(n);
        EXPECT_EQ(code.num_modes(), chain.num_modes());
        EXPECT_TRUE(row_spaces_equal(code.generators(), chain.generators()));
        ASSERT_TRUE(code.layout());
        EXPECT_EQ(*code.layout(), *chain.layout());
    }
}

TEST(Product, EmptySecondCodeIsIdentity) {
    auto code = steane_majorana();
    auto same = product(code, MajoranaCode(0, BitMatrix(0), Layout::line(0)), 0);
    EXPECT_EQ(same.num_modes(), code.num_modes());
    EXPECT_EQ(same.generators(), code.generators());
    EXPECT_EQ(same.layout(), code.layout());
}

TEST(Product, NoLayoutWhenEitherSideLacksOne) {
    auto bare = MajoranaCode::from_supports(4, {{0, 1, 2, 3}});
    EXPECT_FALSE(product(bare, four_mode_code(), 1).layout());
}

TEST(Catalog, Entries) {
    auto chain = std::get<MajoranaCode>(catalog_build("kitaev-chain", {{"n", 5}}));
    EXPECT_EQ(chain.num_modes(), 10u);
    EXPECT_EQ(chain.generators().num_rows(), 4u);
    auto sm = std::get<MajoranaCode>(catalog_build("steane-majorana"));
    EXPECT_EQ(sm.num_modes(), 7u);
    EXPECT_EQ(sm.generators().row(0).support(), (std::vector<size_t>{0, 2, 4, 6}));
    EXPECT_EQ(sm.generators().row(1).support(), (std::vector<size_t>{1, 2, 5, 6}));
    EXPECT_EQ(sm.generators().row(2).support(), (std::vector<size_t>{3, 4, 5, 6}));
    auto hex = std::get<MajoranaCode>(catalog_build("hex-torus", {{"Lx", 2}, {"Ly", 2}}));
    EXPECT_EQ(count_logicals(hex).k, Rational(2, 1));
    auto steane = std::get<StabilizerCode>(catalog_build("steane"));
    EXPECT_EQ(steane.num_qubits(), 7u);
    auto cyl = std::get<MajoranaCode>(catalog_build("color-cylinder", {{"R", 3}, {"L", 1}}));
    EXPECT_EQ(count_logicals(cyl).k, Rational(1, 1));
    for (const auto &name : catalog_names()) {
        EXPECT_FALSE(name.empty());
    }
}

TEST(Catalog, Errors) {
    EXPECT_EQ(code_of([] { catalog_build("toric"); }), ErrorCode::kUnknownName);
    EXPECT_EQ(code_of([] { catalog_build("kitaev-chain"); }), ErrorCode::kBadParams);
    EXPECT_EQ(code_of([] { catalog_build("four-mode", {{"n", 2}}); }), ErrorCode::kBadParams);
    EXPECT_EQ(code_of([] { catalog_build("kitaev-chain", {{"n", 0}}); }), ErrorCode::kBadParams);
    EXPECT_EQ(code_of([] { catalog_build("color-cylinder", {{"R", 4}, {"L", 1}}); }), ErrorCode::kEvenR);
}

// Parameter preservation on random inputs, checked by enumeration.

TEST(CodeMapsProperty, QubitToMajoranaDoublesDistance) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 40; t++) {
        auto code = oracle::random_stabilizer_code(rng, 1, t < 30 ? 4 : 5);
        auto image = stabilizer_to_majorana(code);
        ASSERT_TRUE(validate(image).ok());
        EXPECT_EQ(image.rank(), 2 * code.num_qubits() - code.num_logical_qubits());
        EXPECT_EQ(count_logicals(image).k, Rational(static_cast<int64_t>(code.num_logical_qubits()), 1));
        oracle::MajoranaSpace space(image);
        EXPECT_EQ(oracle::distance(space), 2 * *oracle::qubit_distance(code));
    }
}

TEST(CodeMapsProperty, ImageLogicalsMeetBlocksEvenly) {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 20; t++) {
        auto code = oracle::random_stabilizer_code(rng, 1, 3);
        auto image = stabilizer_to_majorana(code);
        oracle::MajoranaSpace space(image);
        for (oracle::Mask v = 1; v < space.size(); v++) {
            if (!space.logical(v)) {
                continue;
            }
            for (size_t j = 0; j < code.num_qubits(); j++) {
                EXPECT_EQ(oracle::popcount(v & (oracle::Mask{0xF} << (4 * j))) % 2, 0);
            }
        }
    }
}

TEST(CodeMapsProperty, DoublingPreservesParameters) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; t++) {
        auto code = oracle::random_majorana_code(rng, 2, 10, true);
        auto doubled = double_code(code);
        EXPECT_EQ(doubled.num_qubits(), code.num_modes());
        EXPECT_EQ(doubled.num_logical_qubits(), count_logicals(code).logical_modes);
        EXPECT_TRUE(is_weakly_self_dual_css(doubled));
        oracle::MajoranaSpace space(code);
        EXPECT_EQ(oracle::qubit_distance(doubled), oracle::distance(space));
    }
}

TEST(CodeMapsProperty, CompositionOnFixtures) {
    for (const char *text : {"XXXXIII\nXXIIXXI\nXIXIXIX\nZZZZIII\nZZIIZZI\nZIZIZIZ", "XXXX\nZZZZ",
                             "XZZXI\nIXZZX\nXIXZZ\nZXIXZ", "ZZ", "ZZI\nIZZ"}) {
        auto code = parse_pauli_code(text);
        auto css = double_code(stabilizer_to_majorana(code));
        EXPECT_EQ(css.num_qubits(), 4 * code.num_qubits());
        EXPECT_EQ(css.num_logical_qubits(), 2 * code.num_logical_qubits());
        EXPECT_EQ(qubit_distance(css).value(), 2 * qubit_distance(code).value()) << text;
        EXPECT_TRUE(is_weakly_self_dual_css(css));
    }
}

TEST(CodeMapsProperty, JordanWignerPreservesCommutationAndK) {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 100; t++) {
        size_t m = 2 * (1 + rng() % 8);
        auto a = oracle::from_mask(static_cast<oracle::Mask>(rng()) & ((oracle::Mask{1} << m) - 1), m);
        auto b = oracle::from_mask(static_cast<oracle::Mask>(rng()) & ((oracle::Mask{1} << m) - 1), m);
        EXPECT_EQ(majorana_commutes(a, b), jordan_wigner(a).commutes(jordan_wigner(b)));
        auto code = oracle::random_majorana_code(rng, 2, 14, true, false);
        EXPECT_EQ(jw_map_code(code).num_logical_qubits() * 2, count_logicals(code).logical_modes);
    }
}

}  // namespace
}  // namespace majcodes
