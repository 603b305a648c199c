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


#include "majcodes/color_code.h"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "majcodes/error.h"
#include "majcodes/gf2.h"

namespace majcodes {

namespace {

Edge ordered(size_t u, size_t v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

template <typename F>
void for_each_cycle_edge(const std::vector<size_t> &cycle, F f) {
    for (size_t i = 0; i < cycle.size(); i++) {
        f(ordered(cycle[i], cycle[(i + 1) % cycle.size()]));
    }
}

// Sides of every edge: internal face indices, or ~alpha for boundary alpha.
std::map<Edge, std::vector<long>> edge_sides(const SurfaceGraph &g) {
    std::map<Edge, std::vector<long>> sides;
    for (const auto &e : g.edges) {
        sides[ordered(e.first, e.second)];
    }
    for (size_t f = 0; f < g.faces.size(); f++) {
        for_each_cycle_edge(g.faces[f], [&](Edge e) { sides[e].push_back(long(f)); });
    }
    for (size_t b = 0; b < g.boundaries.size(); b++) {
        for_each_cycle_edge(g.boundaries[b], [&](Edge e) { sides[e].push_back(~long(b)); });
    }
    return sides;
}

std::vector<std::vector<size_t>> vertex_faces(const SurfaceGraph &g) {
    std::vector<std::vector<size_t>> out(g.num_vertices());
    for (size_t f = 0; f < g.faces.size(); f++) {
        for (size_t v : g.faces[f]) {
            out[v].push_back(f);
        }
    }
    return out;
}

std::vector<int> boundary_of(const SurfaceGraph &g) {
    std::vector<int> out(g.num_vertices(), -1);
    for (size_t b = 0; b < g.boundaries.size(); b++) {
        for (size_t v : g.boundaries[b]) {
            out[v] = int(b);
        }
    }
    return out;
}

FacePartition make_partition(std::vector<bool> in_f1) {
    FacePartition p;
    for (size_t f = 0; f < in_f1.size(); f++) {
        (in_f1[f] ? p.f1 : p.f0).push_back(f);
    }
    p.in_f1 = std::move(in_f1);
    return p;
}

void check_vertex_conditions(const SurfaceGraph &g, const FacePartition &p) {
    auto vf = vertex_faces(g);
    auto bnd = boundary_of(g);
    for (size_t v = 0; v < g.num_vertices(); v++) {
        size_t n1 = 0;
        for (size_t f : vf[v]) {
            n1 += p.in_f1[f];
        }
        size_t n0 = vf[v].size() - n1;
        if (n1 != 2 || (bnd[v] < 0 && n0 != 1)) {
            throw Error(
                ErrorCode::kInconsistencyDetected, "vertex " + std::to_string(v) + " touches " + std::to_string(n1) +
                                                       " faces of F1 and " + std::to_string(n0) + " of F0");
        }
    }
}

void require_surface(const SurfaceGraph &g, bool allow_closed) {
    SurfaceReport report = validate_surface(g);
    for (const auto &v : report.violations) {
        if (allow_closed && v.condition == SurfaceCondition::kOddBoundaries && g.boundaries.empty()) {
            continue;
        }
        throw Error(ErrorCode::kInvalidSurface, std::string(surface_condition_name(v.condition)) + ": " + v.message);
    }
}

}  // namespace

SurfaceGraph build_cylinder(int r, int l) {
    if (r % 2 == 0) {
        throw Error(ErrorCode::kEvenR, "R must be odd, got " + std::to_string(r));
    }
    if (r < 3) {
        throw Error(ErrorCode::kRTooSmall, "R must be at least 3, got " + std::to_string(r));
    }
    if (l < 1) {
        throw Error(ErrorCode::kBadParams, "L must be at least 1, got " + std::to_string(l));
    }
    const int period = 3 * r;
    SurfaceGraph g;
    g.periods[0] = period;
    auto add_ring = [&](int count, int step, int y) {
        size_t first = g.positions.size();
        for (int i = 0; i < count; i++) {
            g.positions.push_back({i * step, y});
        }
        return first;
    };
    size_t g0 = add_ring(r, 3, 0);
    std::vector<size_t> a(l + 1);
    std::vector<size_t> b(l + 1);
    for (int j = 1; j <= l; j++) {
        a[j] = add_ring(period, 1, 2 * (2 * j - 1));
        b[j] = add_ring(period, 1, 2 * (2 * j));
    }
    size_t g1 = add_ring(r, 3, 2 * (2 * l + 1));

    auto wrap = [&](int x) { return size_t(((x % period) + period) % period); };
    auto av = [&](int j, int x) { return a[j] + wrap(x); };
    auto bv = [&](int j, int x) { return b[j] + wrap(x); };
    auto gamma0 = [&](int i) { return g0 + size_t(((i % r) + r) % r); };
    auto gamma1 = [&](int i) { return g1 + size_t(((i % r) + r) % r); };

    for (int i = 0; i < r; i++) {
        g.edges.push_back({gamma0(i), gamma0(i + 1)});
        g.edges.push_back({gamma1(i), gamma1(i + 1)});
        g.edges.push_back({gamma0(i), av(1, 3 * i)});
        g.edges.push_back({bv(l, 3 * i), gamma1(i)});
    }
    for (int j = 1; j <= l; j++) {
        for (int x = 0; x < period; x++) {
            g.edges.push_back({av(j, x), av(j, x + 1)});
            g.edges.push_back({bv(j, x), bv(j, x + 1)});
            if (x % 3 != 0) {
                g.edges.push_back({av(j, x), bv(j, x)});
            } else if (j < l) {
                g.edges.push_back({bv(j, x), av(j + 1, x)});
            }
        }
    }

    for (int i = 0; i < r; i++) {
        g.faces.push_back(
            {gamma0(i), av(1, 3 * i), av(1, 3 * i + 1), av(1, 3 * i + 2), av(1, 3 * i + 3), gamma0(i + 1)});
    }
    for (int j = 1; j <= l; j++) {
        for (int i = 0; i < r; i++) {
            int x = 3 * i;
            g.faces.push_back({av(j, x + 1), av(j, x + 2), bv(j, x + 2), bv(j, x + 1)});
            g.faces.push_back(
                {av(j, x + 2), av(j, x + 3), av(j, x + 4), bv(j, x + 4), bv(j, x + 3), bv(j, x + 2)});
        }
        if (j < l) {
            for (int i = 0; i < r; i++) {
                int x = 3 * i;
                g.faces.push_back(
                    {bv(j, x), bv(j, x + 1), bv(j, x + 2), bv(j, x + 3), av(j + 1, x + 3), av(j + 1, x + 2),
                     av(j + 1, x + 1), av(j + 1, x)});
            }
        }
    }
    for (int i = 0; i < r; i++) {
        g.faces.push_back(
            {bv(l, 3 * i), bv(l, 3 * i + 1), bv(l, 3 * i + 2), bv(l, 3 * i + 3), gamma1(i + 1), gamma1(i)});
    }

    std::vector<size_t> c0;
    std::vector<size_t> c1;
    for (int i = 0; i < r; i++) {
        c0.push_back(gamma0(i));
        c1.push_back(gamma1(i));
    }
    g.boundaries = {c0, c1};
    return g;
}

SurfaceGraph build_hex_torus(int lx, int ly) {
    if (lx < 1 || ly < 1) {
        throw Error(ErrorCode::kBadParams, "hex-torus needs Lx >= 1 and Ly >= 1");
    }
    const int w = 2 * 3 * lx;
    const int h = 2 * ly;
    SurfaceGraph g;
    g.periods = {w, h};
    for (int y = 0; y < h; y++) {
        for (int x = 0; x < w; x++) {
            g.positions.push_back({x, y});
        }
    }
    auto v = [&](int x, int y) { return size_t(((y % h) + h) % h) * size_t(w) + size_t(((x % w) + w) % w); };
    for (int y = 0; y < h; y++) {
        for (int x = 0; x < w; x++) {
            g.edges.push_back({v(x, y), v(x + 1, y)});
            if ((x + y) % 2 == 0) {
                g.edges.push_back({v(x, y), v(x, y + 1)});
            }
        }
    }
    for (int y = 0; y < h; y++) {
        for (int x = y % 2; x < w; x += 2) {
            g.faces.push_back({v(x, y), v(x + 1, y), v(x + 2, y), v(x + 2, y + 1), v(x + 1, y + 1), v(x, y + 1)});
        }
    }
    return g;
}

const char *surface_condition_name(SurfaceCondition c) {
    switch (c) {
        case SurfaceCondition::kEvenVertexCount:
            return "G1";
        case SurfaceCondition::kTrivalent:
            return "G2";
        case SurfaceCondition::kEvenFaces:
            return "G3";
        case SurfaceCondition::kOddBoundaries:
            return "G4";
        case SurfaceCondition::kCellular:
            return "cellular";
    }
    return "unknown";
}

bool SurfaceReport::has(SurfaceCondition c) const {
    return std::any_of(violations.begin(), violations.end(), [c](const auto &v) { return v.condition == c; });
}

SurfaceReport validate_surface(const SurfaceGraph &g) {
    SurfaceReport report;
    auto add = [&](SurfaceCondition c, std::string msg) { report.violations.push_back({c, std::move(msg)}); };
    size_t n = g.num_vertices();

    bool indices_ok = true;
    auto check_index = [&](size_t v, const std::string &where) {
        if (v >= n) {
            add(SurfaceCondition::kCellular, where + " references vertex " + std::to_string(v) + " out of range");
            indices_ok = false;
        }
    };
    for (const auto &e : g.edges) {
        check_index(e.first, "edge");
        check_index(e.second, "edge");
    }
    for (const auto &f : g.faces) {
        for (size_t v : f) {
            check_index(v, "face");
        }
    }
    for (const auto &b : g.boundaries) {
        for (size_t v : b) {
            check_index(v, "boundary");
        }
    }
    if (!indices_ok) {
        return report;
    }

    if (n % 2) {
        add(SurfaceCondition::kEvenVertexCount, "the surface has " + std::to_string(n) + " vertices");
    }
    std::vector<size_t> degree(n, 0);
    std::set<Edge> edge_set;
    for (const auto &e : g.edges) {
        Edge o = ordered(e.first, e.second);
        if (e.first == e.second || !edge_set.insert(o).second) {
            add(SurfaceCondition::kCellular,
                "edge (" + std::to_string(e.first) + ", " + std::to_string(e.second) + ") is a loop or repeated");
            continue;
        }
        degree[e.first]++;
        degree[e.second]++;
    }
    for (size_t v = 0; v < n; v++) {
        if (degree[v] != 3) {
            add(SurfaceCondition::kTrivalent, "vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]));
        }
    }
    for (size_t f = 0; f < g.faces.size(); f++) {
        if (g.faces[f].size() % 2) {
            add(SurfaceCondition::kEvenFaces,
                "face " + std::to_string(f) + " has " + std::to_string(g.faces[f].size()) + " vertices");
        }
    }
    if (g.boundaries.size() != 2) {
        add(SurfaceCondition::kOddBoundaries,
            "the surface has " + std::to_string(g.boundaries.size()) + " boundary cycles, expected 2");
    }
    for (size_t b = 0; b < g.boundaries.size(); b++) {
        if (g.boundaries[b].size() % 2 == 0) {
            add(SurfaceCondition::kOddBoundaries,
                "boundary " + std::to_string(b) + " has " + std::to_string(g.boundaries[b].size()) + " vertices");
        }
    }

    auto check_cycle = [&](const std::vector<size_t> &cycle, const std::string &what) {
        if (cycle.size() < 3) {
            add(SurfaceCondition::kCellular, what + " has fewer than 3 vertices");
            return;
        }
        for_each_cycle_edge(cycle, [&](Edge e) {
            if (!edge_set.count(e)) {
                add(SurfaceCondition::kCellular, what + " uses non-edge (" + std::to_string(e.first) + ", " +
                                                     std::to_string(e.second) + ")");
            }
        });
    };
    for (size_t f = 0; f < g.faces.size(); f++) {
        check_cycle(g.faces[f], "face " + std::to_string(f));
    }
    for (size_t b = 0; b < g.boundaries.size(); b++) {
        check_cycle(g.boundaries[b], "boundary " + std::to_string(b));
    }
    for (const auto &[e, sides] : edge_sides(g)) {
        if (edge_set.count(e) && sides.size() != 2) {
            add(SurfaceCondition::kCellular, "edge (" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                                                 ") borders " + std::to_string(sides.size()) + " faces");
        }
    }
    return report;
}

MajoranaCode face_code(const SurfaceGraph &g) {
    require_surface(g, true);
    size_t n = g.num_vertices();
    BitMatrix gens(n);
    for (const auto &f : g.faces) {
        gens.push_back(BitVector::from_indices(n, f));
    }
    for (size_t i = 0; i < gens.num_rows(); i++) {
        for (size_t j = i + 1; j < gens.num_rows(); j++) {
            if (gens.row(i).overlap(gens.row(j)) % 2) {
                throw Error(
                    ErrorCode::kInvalidSurface,
                    "faces " + std::to_string(i) + " and " + std::to_string(j) + " share an odd number of vertices");
            }
        }
    }
    return MajoranaCode(n, std::move(gens), g.layout());
}

std::pair<BitVector, BitVector> boundary_logicals(const SurfaceGraph &g) {
    require_surface(g, false);
    size_t n = g.num_vertices();
    return {BitVector::from_indices(n, g.boundaries[0]), BitVector::from_indices(n, g.boundaries[1])};
}

FacePartition partition_faces(const SurfaceGraph &g) {
    require_surface(g, true);
    size_t n = g.num_vertices();
    BitMatrix incidence(n);
    for (const auto &f : g.faces) {
        incidence.push_back(BitVector::from_indices(n, f));
    }
    BitMatrix deps = kernel_basis(incidence.transpose());
    if (deps.num_rows() != 1) {
        throw Error(
            ErrorCode::kInvalidSurface,
            "face dependencies span " + std::to_string(deps.num_rows()) + " dimensions, expected 1");
    }
    std::vector<bool> in_f1(g.faces.size());
    for (size_t f = 0; f < g.faces.size(); f++) {
        in_f1[f] = deps.row(0)[f];
    }
    FacePartition p = make_partition(std::move(in_f1));
    check_vertex_conditions(g, p);
    return p;
}

FacePartition partition_faces_by_propagation(const SurfaceGraph &g, size_t start_vertex) {
    require_surface(g, true);
    auto vf = vertex_faces(g);
    if (start_vertex >= g.num_vertices() || vf[start_vertex].size() < 2) {
        throw Error(ErrorCode::kBadParams, "start vertex must touch at least two faces");
    }
    size_t nf = g.faces.size();

    auto propagate = [&](std::vector<int> x) -> std::optional<std::vector<int>> {
        bool progress = true;
        while (progress) {
            progress = false;
            for (size_t v = 0; v < g.num_vertices(); v++) {
                int sum = 0;
                int unknown = -1;
                size_t num_unknown = 0;
                for (size_t f : vf[v]) {
                    if (x[f] < 0) {
                        unknown = int(f);
                        num_unknown++;
                    } else {
                        sum ^= x[f];
                    }
                }
                if (num_unknown == 0 && sum) {
                    return std::nullopt;
                }
                if (num_unknown == 1) {
                    x[unknown] = sum;
                    progress = true;
                }
            }
        }
        return x;
    };

    const auto &faces = vf[start_vertex];
    std::vector<std::pair<int, int>> seeds = {{1, 1}, {1, 0}, {0, 1}};
    std::optional<std::vector<bool>> found;
    for (auto [s0, s1] : seeds) {
        std::vector<int> x(nf, -1);
        x[faces[0]] = s0;
        x[faces[1]] = s1;
        auto solved = propagate(std::move(x));
        if (!solved || std::count(solved->begin(), solved->end(), -1)) {
            continue;
        }
        if (std::count(solved->begin(), solved->end(), 1) == 0) {
            continue;
        }
        std::vector<bool> in_f1(nf);
        for (size_t f = 0; f < nf; f++) {
            in_f1[f] = (*solved)[f] == 1;
        }
        if (found && *found != in_f1) {
            throw Error(ErrorCode::kInconsistencyDetected, "propagation found two different partitions");
        }
        found = std::move(in_f1);
    }
    if (!found) {
        throw Error(ErrorCode::kInconsistencyDetected, "propagation found no partition");
    }
    FacePartition p = make_partition(std::move(*found));
    check_vertex_conditions(g, p);
    return p;
}

DualGraph dual_graph(const SurfaceGraph &g, const FacePartition &p) {
    require_surface(g, false);
    DualGraph d;
    std::vector<size_t> node_of_face(g.faces.size(), DualGraph::kNoFace);
    for (size_t f : p.f0) {
        node_of_face[f] = d.node_face.size();
        d.node_face.push_back(f);
    }
    d.ext0 = d.node_face.size();
    d.node_face.push_back(DualGraph::kNoFace);
    d.ext1 = d.node_face.size();
    d.node_face.push_back(DualGraph::kNoFace);
    d.num_nodes = d.node_face.size();

    auto vf = vertex_faces(g);
    auto bnd = boundary_of(g);
    d.vertex_node.assign(g.num_vertices(), DualGraph::kNoFace);
    for (size_t v = 0; v < g.num_vertices(); v++) {
        for (size_t f : vf[v]) {
            if (!p.in_f1[f]) {
                d.vertex_node[v] = node_of_face[f];
            }
        }
        if (bnd[v] >= 0) {
            d.vertex_node[v] = bnd[v] == 0 ? d.ext0 : d.ext1;
        }
    }
    for (const auto &[e, sides] : edge_sides(g)) {
        bool both_f1 = sides.size() == 2 &&
                       std::all_of(sides.begin(), sides.end(), [&](long s) { return s >= 0 && p.in_f1[size_t(s)]; });
        if (both_f1) {
            d.links.push_back({d.vertex_node[e.first], d.vertex_node[e.second], e});
        }
    }
    return d;
}

BitVector string_logical(const SurfaceGraph &g, const FacePartition &p, const std::vector<Edge> &path) {
    DualGraph d = dual_graph(g, p);
    std::map<Edge, const DualGraph::Link *> by_edge;
    for (const auto &link : d.links) {
        by_edge[link.edge] = &link;
    }
    if (path.empty()) {
        throw Error(ErrorCode::kPathDoesNotConnectExternalFaces, "empty path");
    }
    BitVector support(g.num_vertices());
    std::set<Edge> used;
    size_t at = d.ext0;
    for (size_t i = 0; i < path.size(); i++) {
        Edge e = ordered(path[i].first, path[i].second);
        auto it = by_edge.find(e);
        if (it == by_edge.end()) {
            throw Error(ErrorCode::kNotAPath, "edge (" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                                                  ") does not join two F1 faces");
        }
        if (!used.insert(e).second) {
            throw Error(ErrorCode::kNotAPath, "path repeats an edge");
        }
        const auto &link = *it->second;
        if (link.a == at) {
            at = link.b;
        } else if (link.b == at) {
            at = link.a;
        } else if (i == 0) {
            throw Error(ErrorCode::kPathDoesNotConnectExternalFaces, "path does not start at the gamma_0 face");
        } else {
            throw Error(ErrorCode::kNotAPath, "edges " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                                  " are not consecutive");
        }
        support.flip(e.first);
        support.flip(e.second);
    }
    if (at != d.ext1) {
        throw Error(ErrorCode::kPathDoesNotConnectExternalFaces, "path does not end at the gamma_1 face");
    }
    return support;
}

std::vector<Edge> shortest_string_path(const SurfaceGraph &g, const FacePartition &p) {
    DualGraph d = dual_graph(g, p);
    std::vector<std::vector<size_t>> adj(d.num_nodes);
    for (size_t i = 0; i < d.links.size(); i++) {
        adj[d.links[i].a].push_back(i);
        adj[d.links[i].b].push_back(i);
    }
    std::vector<size_t> via(d.num_nodes, DualGraph::kNoFace);
    std::vector<bool> seen(d.num_nodes, false);
    std::queue<size_t> q;
    q.push(d.ext0);
    seen[d.ext0] = true;
    while (!q.empty()) {
        size_t u = q.front();
        q.pop();
        for (size_t li : adj[u]) {
            const auto &link = d.links[li];
            size_t w = link.a == u ? link.b : link.a;
            if (!seen[w]) {
                seen[w] = true;
                via[w] = li;
                q.push(w);
            }
        }
    }
    if (!seen[d.ext1]) {
        throw Error(ErrorCode::kInvalidSurface, "the external faces are not connected");
    }
    std::vector<Edge> path;
    for (size_t at = d.ext1; at != d.ext0;) {
        const auto &link = d.links[via[at]];
        path.push_back(link.edge);
        at = link.a == at ? link.b : link.a;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

size_t max_disjoint_string_paths(const SurfaceGraph &g, const FacePartition &p) {
    DualGraph d = dual_graph(g, p);
    // Undirected unit capacities: arc 2i runs a->b and arc 2i+1 runs b->a,
    // and each is the other's residual.
    struct Arc {
        size_t to;
        int cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<size_t>> out(d.num_nodes);
    for (const auto &link : d.links) {
        if (link.a == link.b) {
            continue;
        }
        out[link.a].push_back(arcs.size());
        arcs.push_back({link.b, 1});
        out[link.b].push_back(arcs.size());
        arcs.push_back({link.a, 1});
    }
    size_t flow = 0;
    while (true) {
        std::vector<size_t> via(d.num_nodes, DualGraph::kNoFace);
        std::vector<bool> seen(d.num_nodes, false);
        std::queue<size_t> q;
        q.push(d.ext0);
        seen[d.ext0] = true;
        while (!q.empty() && !seen[d.ext1]) {
            size_t u = q.front();
            q.pop();
            for (size_t a : out[u]) {
                if (arcs[a].cap > 0 && !seen[arcs[a].to]) {
                    seen[arcs[a].to] = true;
                    via[arcs[a].to] = a;
                    q.push(arcs[a].to);
                }
            }
        }
        if (!seen[d.ext1]) {
            return flow;
        }
        for (size_t at = d.ext1; at != d.ext0;) {
            size_t a = via[at];
            arcs[a].cap--;
            arcs[a ^ 1].cap++;
            at = arcs[a ^ 1].to;
        }
        flow++;
    }
}

bool face_three_colorable(const SurfaceGraph &g, const std::vector<bool> &keep) {
    size_t nf = g.faces.size();
    std::vector<std::vector<size_t>> adj(nf);
    for (const auto &[e, sides] : edge_sides(g)) {
        for (long a : sides) {
            for (long b : sides) {
                if (a >= 0 && b >= 0 && a != b && keep[size_t(a)] && keep[size_t(b)]) {
                    adj[size_t(a)].push_back(size_t(b));
                }
            }
        }
    }
    // Breadth-first order keeps each face next to already-colored neighbors.
    std::vector<size_t> order;
    std::vector<bool> queued(nf, false);
    for (size_t s = 0; s < nf; s++) {
        if (!keep[s] || queued[s]) {
            continue;
        }
        std::queue<size_t> q;
        q.push(s);
        queued[s] = true;
        while (!q.empty()) {
            size_t f = q.front();
            q.pop();
            order.push_back(f);
            for (size_t h : adj[f]) {
                if (!queued[h]) {
                    queued[h] = true;
                    q.push(h);
                }
            }
        }
    }
    std::vector<int> color(nf, -1);
    std::function<bool(size_t)> assign = [&](size_t k) {
        if (k == order.size()) {
            return true;
        }
        size_t f = order[k];
        for (int c = 0; c < 3; c++) {
            bool clash = std::any_of(adj[f].begin(), adj[f].end(), [&](size_t h) { return color[h] == c; });
            if (clash) {
                continue;
            }
            color[f] = c;
            if (assign(k + 1)) {
                return true;
            }
        }
        color[f] = -1;
        return false;
    };
    return assign(0);
}

namespace {

bool bipartite(size_t num_nodes, const std::vector<std::pair<size_t, size_t>> &links, const std::vector<bool> &keep) {
    std::vector<std::vector<size_t>> adj(num_nodes);
    for (auto [a, b] : links) {
        if (keep[a] && keep[b]) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
    std::vector<int> side(num_nodes, -1);
    for (size_t s = 0; s < num_nodes; s++) {
        if (!keep[s] || side[s] >= 0) {
            continue;
        }
        side[s] = 0;
        std::queue<size_t> q;
        q.push(s);
        while (!q.empty()) {
            size_t u = q.front();
            q.pop();
            for (size_t w : adj[u]) {
                if (side[w] < 0) {
                    side[w] = side[u] ^ 1;
                    q.push(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

ColorabilityReport colorability(const SurfaceGraph &g, const FacePartition &p, std::optional<int> cut_x) {
    require_surface(g, false);
    auto sides = edge_sides(g);
    std::vector<std::pair<size_t, size_t>> links;
    for (const auto &[e, s] : sides) {
        if (s.size() == 2 && s[0] >= 0 && s[1] >= 0 && p.in_f1[size_t(s[0])] && p.in_f1[size_t(s[1])]) {
            links.emplace_back(size_t(s[0]), size_t(s[1]));
        }
    }
    ColorabilityReport report;
    report.full_three_colorable = bipartite(g.faces.size(), links, p.in_f1);
    report.cut_x = cut_x;
    if (cut_x) {
        std::vector<bool> keep = p.in_f1;
        for (size_t f = 0; f < g.faces.size(); f++) {
            bool touches = std::any_of(
                g.faces[f].begin(), g.faces[f].end(), [&](size_t v) { return g.positions[v].x == *cut_x; });
            if (touches) {
                report.cut_faces_removed++;
                keep[f] = false;
            }
        }
        report.cut_three_colorable = bipartite(g.faces.size(), links, keep);
    }
    return report;
}

std::vector<ScalingRow> scaling_experiment(
    const std::vector<int> &rs, const std::vector<int> &ls, const ScalingOptions &options) {
    std::vector<ScalingRow> rows;
    for (int r : rs) {
        for (int l : ls) {
            ScalingRow row;
            row.r = r;
            row.l = l;
            SurfaceGraph g = build_cylinder(r, l);
            row.modes = g.num_vertices();
            if (row.modes > options.max_modes) {
                row.skipped = true;
                rows.push_back(row);
                continue;
            }
            MajoranaCode code = face_code(g);
            MajoranaDistance d = distance(code, options.max_weight, options.threads);
            row.d_searched_through = d.search.searched_through;
            if (!d.exhausted()) {
                row.d = d.value();
            }
            MajoranaDistance odd = distance(code, options.max_weight, options.threads, Parity::kOdd);
            row.odd_searched_through = odd.search.searched_through;
            if (!odd.exhausted()) {
                row.min_odd_weight = odd.value();
            }
            EvenDiameter le = l_even(code);
            row.l_even = le.diameter;
            row.l_even_exact = le.exact;
            row.disjoint_paths = max_disjoint_string_paths(g, partition_faces(g));
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace majcodes
