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

#include <queue>
#include <set>

#include "majcodes/color_code.h"
#include "majcodes/error.h"
#include "majcodes/gf2.h"
#include "majcodes/majorana_code.h"

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

std::vector<std::vector<size_t>> faces_at_vertices(const SurfaceGraph &g) {
    std::vector<std::vector<size_t>> at(g.num_vertices());
    for (size_t f = 0; f < g.faces.size(); f++) {
        for (size_t v : g.faces[f]) {
            at[v].push_back(f);
        }
    }
    return at;
}

// Breadth-first search over the dual links, skipping the banned ones.
std::optional<std::vector<Edge>> dual_path(const DualGraph &d, const std::set<size_t> &banned) {
    std::vector<std::optional<size_t>> via(d.num_nodes);
    std::vector<bool> seen(d.num_nodes, false);
    std::queue<size_t> q;
    q.push(d.ext0);
    seen[d.ext0] = true;
    while (!q.empty()) {
        size_t u = q.front();
        q.pop();
        for (size_t i = 0; i < d.links.size(); i++) {
            const auto &l = d.links[i];
            if (banned.count(i) || (l.a != u && l.b != u)) {
                continue;
            }
            size_t w = l.a == u ? l.b : l.a;
            if (!seen[w]) {
                seen[w] = true;
                via[w] = i;
                q.push(w);
            }
        }
    }
    if (!seen[d.ext1]) {
        return std::nullopt;
    }
    std::vector<Edge> path;
    for (size_t at = d.ext1; at != d.ext0;) {
        const auto &l = d.links[*via[at]];
        path.push_back(l.edge);
        at = l.a == at ? l.b : l.a;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

bool is_logical(const MajoranaCode &code, const BitVector &v) {
    return in_span(v, code.centralizer_basis()) && !in_span(v, code.generators());
}

TEST(BuildCylinder, FigureInstance) {
    auto g = build_cylinder(5, 2);
    EXPECT_TRUE(validate_surface(g).ok());
    ASSERT_EQ(g.boundaries.size(), 2u);
    EXPECT_EQ(g.boundaries[0].size(), 5u);
    EXPECT_EQ(g.boundaries[1].size(), 5u);
    EXPECT_EQ(partition_faces(g).f0.size(), 10u);
}

TEST(BuildCylinder, Errors) {
    EXPECT_EQ(code_of([] { build_cylinder(4, 2); }), ErrorCode::kEvenR);
    EXPECT_EQ(code_of([] { build_cylinder(1, 1); }), ErrorCode::kRTooSmall);
    EXPECT_EQ(code_of([] { build_cylinder(3, 0); }), ErrorCode::kBadParams);
}

TEST(BuildCylinder, SmallestInstance) {
    auto g = build_cylinder(3, 1);
    EXPECT_TRUE(validate_surface(g).ok());
    EXPECT_EQ(g.num_vertices() % 2, 0u);
    EXPECT_EQ(g.num_vertices(), 24u);
    EXPECT_EQ(g.faces.size(), 12u);
}

TEST(ValidateSurface, ContrastCases) {
    auto torus = validate_surface(build_hex_torus(2, 2));
    EXPECT_TRUE(torus.has(SurfaceCondition::kOddBoundaries));
    EXPECT_FALSE(torus.has(SurfaceCondition::kEvenFaces));
    EXPECT_FALSE(torus.has(SurfaceCondition::kTrivalent));

    auto g = build_cylinder(3, 1);
    auto &face = g.faces[0];
    face.erase(face.begin());
    auto broken = validate_surface(g);
    EXPECT_TRUE(broken.has(SurfaceCondition::kEvenFaces));
    for (const auto &v : broken.violations) {
        EXPECT_FALSE(v.message.empty());
    }
    EXPECT_EQ(code_of([&] { face_code(g); }), ErrorCode::kInvalidSurface);
}

TEST(FaceCode, LogicalCounts) {
    EXPECT_EQ(count_logicals(face_code(build_cylinder(5, 2))).logical_modes, 2u);
    EXPECT_EQ(count_logicals(face_code(build_cylinder(3, 1))).k, Rational(1, 1));
    EXPECT_EQ(count_logicals(face_code(build_hex_torus(2, 2))).k, Rational(2, 1));
}

TEST(BoundaryLogicals, WeightsAndCommutation) {
    for (int r : {3, 5}) {
        auto g = build_cylinder(r, 2);
        auto code = face_code(g);
        auto [c0, c1] = boundary_logicals(g);
        EXPECT_EQ(c0.weight(), static_cast<size_t>(r));
        EXPECT_EQ(c1.weight(), static_cast<size_t>(r));
        EXPECT_TRUE(is_logical(code, c0));
        EXPECT_TRUE(is_logical(code, c1));
        EXPECT_FALSE(majorana_commutes(c0, c1));
    }
    EXPECT_EQ(code_of([] { boundary_logicals(build_hex_torus(2, 2)); }), ErrorCode::kInvalidSurface);
}

TEST(PartitionFaces, BoundaryFacesAreInF1) {
    auto g = build_cylinder(5, 2);
    auto p = partition_faces(g);
    auto at = faces_at_vertices(g);
    for (const auto &cycle : g.boundaries) {
        for (size_t v : cycle) {
            for (size_t f : at[v]) {
                EXPECT_TRUE(p.in_f1[f]);
            }
        }
    }
}

TEST(PartitionFaces, PropagationFromAnyStartAgrees) {
    auto g = build_cylinder(3, 1);
    auto p = partition_faces(g);
    for (size_t v = 0; v < g.num_vertices(); v++) {
        EXPECT_EQ(partition_faces_by_propagation(g, v), p) << "start " << v;
    }
}

TEST(PartitionFaces, ClosedSurfaceIsRejected) {
    EXPECT_EQ(code_of([] { partition_faces(build_hex_torus(2, 2)); }), ErrorCode::kInvalidSurface);
}

TEST(StringLogical, ShortestPath) {
    auto g = build_cylinder(5, 2);
    auto code = face_code(g);
    auto p = partition_faces(g);
    auto path = shortest_string_path(g, p);
    auto s = string_logical(g, p, path);
    EXPECT_EQ(s.weight(), 2 * path.size());
    EXPECT_EQ(s.weight(), 6u);
    EXPECT_TRUE(is_logical(code, s));
    auto [c0, c1] = boundary_logicals(g);
    EXPECT_FALSE(majorana_commutes(s, c0));
    EXPECT_FALSE(majorana_commutes(s, c1));
}

TEST(StringLogical, DifferentPathsShareAClass) {
    auto g = build_cylinder(5, 2);
    auto code = face_code(g);
    auto p = partition_faces(g);
    auto d = dual_graph(g, p);
    auto first = dual_path(d, {});
    ASSERT_TRUE(first);
    std::set<size_t> banned;
    for (size_t i = 0; i < d.links.size(); i++) {
        if (d.links[i].edge == first->front()) {
            banned.insert(i);
        }
    }
    auto second = dual_path(d, banned);
    ASSERT_TRUE(second);
    ASSERT_NE(*first, *second);
    auto a = string_logical(g, p, *first);
    auto b = string_logical(g, p, *second);
    EXPECT_TRUE(in_span(a ^ b, code.generators()));
}

TEST(StringLogical, Errors) {
    auto g = build_cylinder(5, 2);
    auto p = partition_faces(g);
    auto path = shortest_string_path(g, p);
    EXPECT_EQ(code_of([&] { string_logical(g, p, {}); }), ErrorCode::kPathDoesNotConnectExternalFaces);
    auto truncated = path;
    truncated.pop_back();
    EXPECT_EQ(code_of([&] { string_logical(g, p, truncated); }), ErrorCode::kPathDoesNotConnectExternalFaces);
    auto reversed = path;
    std::reverse(reversed.begin(), reversed.end());
    EXPECT_EQ(code_of([&] { string_logical(g, p, reversed); }), ErrorCode::kPathDoesNotConnectExternalFaces);
    EXPECT_EQ(code_of([&] { string_logical(g, p, {path[0], path[0]}); }), ErrorCode::kNotAPath);
    // An edge on a boundary cycle borders only one internal face.
    Edge boundary_edge{g.boundaries[0][0], g.boundaries[0][1]};
    bool is_edge = std::find(g.edges.begin(), g.edges.end(), boundary_edge) != g.edges.end();
    if (is_edge) {
        EXPECT_EQ(code_of([&] { string_logical(g, p, {boundary_edge}); }), ErrorCode::kNotAPath);
    }
}

TEST(DisjointPaths, EqualsR) {
    for (int r : {3, 5, 7}) {
        auto g = build_cylinder(r, 2);
        EXPECT_EQ(max_disjoint_string_paths(g, partition_faces(g)), static_cast<size_t>(r));
    }
}

TEST(Colorability, CylinderAndTorus) {
    auto g = build_cylinder(5, 2);
    auto p = partition_faces(g);
    auto report = colorability(g, p, 0);
    EXPECT_FALSE(report.full_three_colorable);
    ASSERT_TRUE(report.cut_x);
    EXPECT_GT(report.cut_faces_removed, 0u);
    EXPECT_TRUE(report.cut_three_colorable);

    auto torus = build_hex_torus(2, 2);
    EXPECT_TRUE(face_three_colorable(torus, std::vector<bool>(torus.faces.size(), true)));
}

TEST(Colorability, BipartiteTestAgreesWithBacktracking) {
    for (int r : {3, 5, 7}) {
        for (int l : {1, 2, 3}) {
            auto g = build_cylinder(r, l);
            auto p = partition_faces(g);
            for (int cut = 0; cut < 3 * r; cut++) {
                auto report = colorability(g, p, cut);
                std::vector<bool> keep(g.faces.size(), true);
                EXPECT_EQ(report.full_three_colorable, face_three_colorable(g, keep));
                size_t removed = 0;
                for (size_t f = 0; f < g.faces.size(); f++) {
                    for (size_t v : g.faces[f]) {
                        if (g.positions[v].x == cut) {
                            keep[f] = false;
                        }
                    }
                    removed += !keep[f];
                }
                EXPECT_EQ(report.cut_faces_removed, removed);
                EXPECT_EQ(report.cut_three_colorable, face_three_colorable(g, keep)) << r << " " << l << " " << cut;
            }
        }
    }
}

TEST(Scaling, ExactRows) {
    auto rows = scaling_experiment({3, 5}, {1, 2});
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].r, 3);
    EXPECT_EQ(rows[0].l, 1);
    EXPECT_EQ(rows[0].modes, 24u);
    EXPECT_EQ(rows[0].d, 3u);
    EXPECT_EQ(rows[0].l_even, 7u);
    EXPECT_EQ(rows[0].min_odd_weight, 3u);
    EXPECT_EQ(rows[0].disjoint_paths, 3u);
    EXPECT_EQ(rows[3].r, 5);
    EXPECT_EQ(rows[3].l, 2);
    EXPECT_EQ(rows[3].d, 5u);
    EXPECT_EQ(rows[3].l_even, 11u);
}

TEST(Scaling, SkipsLargeInstances) {
    ScalingOptions options;
    options.max_modes = 30;
    auto rows = scaling_experiment({3, 5}, {1}, options);
    EXPECT_FALSE(rows[0].skipped);
    EXPECT_TRUE(rows[1].skipped);
    EXPECT_FALSE(rows[1].d);
}

TEST(Scaling, BoundedSearchIsMarked) {
    ScalingOptions options;
    options.max_weight = 2;
    auto rows = scaling_experiment({3}, {1}, options);
    EXPECT_FALSE(rows[0].d);
    EXPECT_EQ(rows[0].d_searched_through, 2u);
}

// Structural properties over a family of instances.

class CylinderFamily : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(CylinderFamily, Invariants) {
    auto [r, l] = GetParam();
    auto g = build_cylinder(r, l);
    EXPECT_TRUE(validate_surface(g).ok());
    EXPECT_EQ(g.num_vertices(), static_cast<size_t>(2 * r + 6 * r * l));
    EXPECT_EQ(g.faces.size(), static_cast<size_t>(r * (3 * l + 1)));
    auto code = face_code(g);
    EXPECT_EQ(count_logicals(code).logical_modes, 2u);
    EXPECT_EQ(k_odd(code), 1);
    const auto &gens = code.generators().rows();
    for (size_t a = 0; a < gens.size(); a++) {
        for (size_t b = a + 1; b < gens.size(); b++) {
            EXPECT_EQ(gens[a].overlap(gens[b]) % 2, 0u);
        }
    }

    // The face dependency space is one-dimensional.
    std::vector<BitVector> rows(g.num_vertices(), BitVector(g.faces.size()));
    for (size_t f = 0; f < g.faces.size(); f++) {
        for (size_t v : g.faces[f]) {
            rows[v].set(f);
        }
    }
    auto deps = kernel_basis(BitMatrix(g.faces.size(), rows));
    ASSERT_EQ(deps.num_rows(), 1u);

    auto p = partition_faces(g);
    for (size_t f = 0; f < g.faces.size(); f++) {
        EXPECT_EQ(p.in_f1[f], deps.row(0)[f]);
    }
    EXPECT_EQ(p.f0.size(), static_cast<size_t>(r * l));
    EXPECT_EQ(partition_faces_by_propagation(g, g.num_vertices() / 2), p);
    std::set<size_t> boundary;
    for (const auto &cycle : g.boundaries) {
        boundary.insert(cycle.begin(), cycle.end());
    }
    auto at = faces_at_vertices(g);
    for (size_t v = 0; v < g.num_vertices(); v++) {
        size_t f1 = 0;
        for (size_t f : at[v]) {
            f1 += p.in_f1[f];
        }
        EXPECT_EQ(f1, 2u);
        if (!boundary.count(v)) {
            EXPECT_EQ(at[v].size() - f1, 1u);
        }
    }

    // X = C0, Y = C1 and Z = any string: pairwise anticommuting.
    auto [c0, c1] = boundary_logicals(g);
    auto s = string_logical(g, p, shortest_string_path(g, p));
    EXPECT_FALSE(majorana_commutes(c0, c1));
    EXPECT_FALSE(majorana_commutes(c0, s));
    EXPECT_FALSE(majorana_commutes(c1, s));
    EXPECT_TRUE(is_logical(code, s));
    EXPECT_EQ(s.weight(), static_cast<size_t>(2 * (l + 1)));
}

INSTANTIATE_TEST_SUITE_P(Sizes, CylinderFamily,
                         ::testing::Values(std::pair{3, 1}, std::pair{3, 2}, std::pair{3, 3}, std::pair{5, 1},
                                           std::pair{5, 2}, std::pair{5, 3}, std::pair{7, 2}, std::pair{9, 4}));

}  // namespace
}  // namespace majcodes
