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


#ifndef MAJCODES_COLOR_CODE_H
#define MAJCODES_COLOR_CODE_H

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "majcodes/bit_vector.h"
#include "majcodes/layout.h"
#include "majcodes/majorana_code.h"

namespace majcodes {

using Edge = std::pair<size_t, size_t>;

/// A cellular surface with one Majorana mode per vertex. Faces and boundary
/// cycles list their vertices in cyclic order.
struct SurfaceGraph {
    std::vector<Point> positions;
    std::array<std::optional<int>, 2> periods;
    std::vector<Edge> edges;
    std::vector<std::vector<size_t>> faces;
    std::vector<std::vector<size_t>> boundaries;

    size_t num_vertices() const {
        return positions.size();
    }
    Layout layout() const {
        return Layout(positions, periods);
    }
};

/// Cylinder of circumference 3R (periodic in x) with R vertices on each
/// boundary cycle and L layers of square/hexagon pairs between them.
///
/// Rings from bottom to top: gamma_0 (R vertices at x = 3i), then for each
/// layer j a pair of full rings A_j, B_j of 3R vertices, then gamma_1. Rows
/// are 2 units apart in y. Rungs join A_j and B_j at x = 3i+1, 3i+2 and join
/// consecutive layers (and the boundaries) at x = 3i. The result has
/// 2R + 6RL vertices and R(3L + 1) faces: hexagons along both boundaries,
/// squares and hexagons inside each layer and octagons between layers.
/// Throws EvenR or RTooSmall.
SurfaceGraph build_cylinder(int r, int l);

/// Brick-wall hexagonal torus with 3*lx hexagons per row and 2*ly rows
/// (6*lx vertices per row), periodic in both axes.
SurfaceGraph build_hex_torus(int lx, int ly);

enum class SurfaceCondition {
    kEvenVertexCount,  // G1
    kTrivalent,        // G2
    kEvenFaces,        // G3
    kOddBoundaries,    // G4
    kCellular,
};

const char *surface_condition_name(SurfaceCondition c);

struct SurfaceViolation {
    SurfaceCondition condition;
    std::string message;
};

struct SurfaceReport {
    std::vector<SurfaceViolation> violations;

    bool ok() const {
        return violations.empty();
    }
    bool has(SurfaceCondition c) const;
};

SurfaceReport validate_surface(const SurfaceGraph &g);

/// One generator per face. Closed surfaces (no boundary cycles) are accepted;
/// any other violation throws InvalidSurface.
MajoranaCode face_code(const SurfaceGraph &g);

/// Products over gamma_0 and gamma_1. Throws InvalidSurface without exactly
/// two boundary cycles.
std::pair<BitVector, BitVector> boundary_logicals(const SurfaceGraph &g);

struct FacePartition {
    std::vector<bool> in_f1;
    std::vector<size_t> f0;
    std::vector<size_t> f1;

    bool operator==(const FacePartition &) const = default;
};

/// F1 is the support of the unique nonzero face dependency (a set of faces
/// whose product is the identity). Throws InvalidSurface when the dependency
/// space is not one-dimensional and InconsistencyDetected when the split
/// breaks the per-vertex conditions.
FacePartition partition_faces(const SurfaceGraph &g);

/// Same split found by fixing two faces at `start_vertex` and propagating the
/// even-incidence constraint vertex by vertex.
FacePartition partition_faces_by_propagation(const SurfaceGraph &g, size_t start_vertex = 0);

/// The graph on F0 plus the two external faces whose edges are the surface
/// edges with F1 faces on both sides.
struct DualGraph {
    static constexpr size_t kNoFace = std::numeric_limits<size_t>::max();

    struct Link {
        size_t a = 0;
        size_t b = 0;
        Edge edge;
    };

    size_t num_nodes = 0;
    size_t ext0 = 0;
    size_t ext1 = 0;
    /// Face index of each node, kNoFace for the external faces.
    std::vector<size_t> node_face;
    /// Node hosting each vertex.
    std::vector<size_t> vertex_node;
    std::vector<Link> links;
};

DualGraph dual_graph(const SurfaceGraph &g, const FacePartition &p);

/// Product of c_u c_v over the edges of a path from the external face at
/// gamma_0 to the one at gamma_1. Throws NotAPath or
/// PathDoesNotConnectExternalFaces.
BitVector string_logical(const SurfaceGraph &g, const FacePartition &p, const std::vector<Edge> &path);

/// A shortest path between the external faces, as surface edges.
std::vector<Edge> shortest_string_path(const SurfaceGraph &g, const FacePartition &p);

/// Maximum number of edge-disjoint paths between the external faces.
size_t max_disjoint_string_paths(const SurfaceGraph &g, const FacePartition &p);

/// Backtracking face 3-coloring (faces sharing an edge get different
/// colors), restricted to faces with keep[f] set.
bool face_three_colorable(const SurfaceGraph &g, const std::vector<bool> &keep);

struct ColorabilityReport {
    bool full_three_colorable = false;
    std::optional<int> cut_x;
    size_t cut_faces_removed = 0;
    bool cut_three_colorable = false;
};

/// Tests bipartiteness of the graph on F1 whose edges are the dual links.
/// With `cut_x`, also tests the subsurface left after removing every face
/// touching that column.
ColorabilityReport colorability(const SurfaceGraph &g, const FacePartition &p, std::optional<int> cut_x);

struct ScalingOptions {
    size_t max_weight = std::numeric_limits<size_t>::max();
    size_t max_modes = 128;
    unsigned threads = 1;
};

struct ScalingRow {
    int r = 0;
    int l = 0;
    size_t modes = 0;
    bool skipped = false;
    /// Distances searched through `searched_through`; nullopt when exhausted.
    std::optional<size_t> d;
    size_t d_searched_through = 0;
    std::optional<size_t> l_even;
    bool l_even_exact = true;
    std::optional<size_t> min_odd_weight;
    size_t odd_searched_through = 0;
    size_t disjoint_paths = 0;
};

/// One row per (R, L) in input order. Instances above `max_modes` are marked
/// skipped.
std::vector<ScalingRow> scaling_experiment(
    const std::vector<int> &rs, const std::vector<int> &ls, const ScalingOptions &options = {});

}  // namespace majcodes

#endif
