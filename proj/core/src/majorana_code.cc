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


#include "majcodes/majorana_code.h"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_set>

#include "majcodes/error.h"

namespace majcodes {

namespace {

bool omega(const BitVector &a, const BitVector &b) {
    return (a.parity() && b.parity()) ^ (a.overlap(b) & 1);
}

void require_valid(const MajoranaCode &code) {
    ValidationReport report = validate(code);
    if (!report.ok()) {
        std::string msg;
        for (const auto &m : report.messages()) {
            msg += (msg.empty() ? "" : "; ") + m;
        }
        throw Error(ErrorCode::kInvalidInputCode, msg);
    }
}

void require_logicals(const MajoranaCode &code) {
    if (count_logicals(code).logical_modes == 0) {
        throw Error(ErrorCode::kNoLogicals, "the code has no logical modes");
    }
}

// Lowest-weight vector in span(basis) (optionally shifted by `offset`) that
// has the requested parity and lies outside the stabilizer space.
std::optional<BitVector> lightest_in_span(
    const std::vector<BitVector> &basis, const BitVector &offset, const Echelon &stabilizers, Parity parity) {
    std::optional<BitVector> best;
    BitVector v = offset;
    size_t d = basis.size();
    for (uint64_t i = 0; i < (uint64_t{1} << d); i++) {
        if (i > 0) {
            v ^= basis[std::countr_zero(i)];
        }
        if (v.none()) {
            continue;
        }
        if (parity == Parity::kEven && v.parity()) {
            continue;
        }
        if (parity == Parity::kOdd && !v.parity()) {
            continue;
        }
        if (best && (v.weight() > best->weight() || (v.weight() == best->weight() && !support_less(v, *best)))) {
            continue;
        }
        if (!stabilizers.contains(v)) {
            best = v;
        }
    }
    return best;
}

constexpr size_t kMaxEnumerationDim = 14;
constexpr size_t kMaxRegionSearchWeight = 8;

// Greedy local descent: add basis vectors while the weight drops and the
// result stays outside the stabilizer space. Parity is preserved because the
// basis vectors used here are even whenever a parity is requested.
BitVector descend(BitVector v, const std::vector<BitVector> &basis, const Echelon &stabilizers) {
    bool improved = true;
    while (improved) {
        improved = false;
        for (const auto &b : basis) {
            BitVector w = v ^ b;
            if (w.weight() < v.weight() && !stabilizers.contains(w)) {
                v = std::move(w);
                improved = true;
            }
        }
    }
    return v;
}

}  // namespace

Rational::Rational(int64_t n, int64_t d) : num(n), den(d) {
    if (den == 0) {
        throw Error(ErrorCode::kBadParams, "zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

MajoranaCode::MajoranaCode(size_t num_modes, BitMatrix generators, std::optional<Layout> layout)
    : num_modes_(num_modes), generators_(std::move(generators)), layout_(std::move(layout)) {
    if (generators_.num_cols() != num_modes_) {
        throw Error(
            ErrorCode::kDimensionMismatch, "generator matrix has " + std::to_string(generators_.num_cols()) +
                                               " columns for " + std::to_string(num_modes_) + " modes");
    }
    if (layout_ && layout_->size() != num_modes_) {
        throw Error(
            ErrorCode::kDimensionMismatch, "layout has " + std::to_string(layout_->size()) + " positions for " +
                                               std::to_string(num_modes_) + " modes");
    }
}

MajoranaCode MajoranaCode::from_supports(
    size_t num_modes, const std::vector<std::vector<size_t>> &supports, std::optional<Layout> layout) {
    BitMatrix m(num_modes);
    for (const auto &s : supports) {
        for (size_t i : s) {
            if (i >= num_modes) {
                throw Error(
                    ErrorCode::kDimensionMismatch,
                    "mode " + std::to_string(i) + " out of range for " + std::to_string(num_modes) + " modes");
            }
        }
        m.push_back(BitVector::from_indices(num_modes, s));
    }
    return MajoranaCode(num_modes, std::move(m), std::move(layout));
}

const Layout &MajoranaCode::require_layout() const {
    if (!layout_) {
        throw Error(ErrorCode::kNoLayout, "the code has no mode layout");
    }
    return *layout_;
}

MajoranaCode MajoranaCode::with_layout(std::optional<Layout> layout) const {
    return MajoranaCode(num_modes_, generators_, std::move(layout));
}

size_t MajoranaCode::rank() const {
    return majcodes::rank(generators_);
}

BitMatrix MajoranaCode::centralizer_basis() const {
    return kernel_basis(generators_);
}

bool majorana_commutes(const BitVector &a, const BitVector &b) {
    return !omega(a, b);
}

std::vector<std::string> ValidationReport::messages() const {
    std::vector<std::string> out;
    for (size_t r : odd_weight_rows) {
        out.push_back("generator " + std::to_string(r) + " has odd weight");
    }
    for (auto [i, j] : odd_overlap_pairs) {
        out.push_back("generators " + std::to_string(i) + " and " + std::to_string(j) + " have odd overlap");
    }
    return out;
}

ValidationReport validate(const MajoranaCode &code) {
    ValidationReport report;
    const auto &rows = code.generators().rows();
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i].parity()) {
            report.odd_weight_rows.push_back(i);
        }
    }
    for (size_t i = 0; i < rows.size(); i++) {
        for (size_t j = i + 1; j < rows.size(); j++) {
            if (rows[i].overlap(rows[j]) & 1) {
                report.odd_overlap_pairs.emplace_back(i, j);
            }
        }
    }
    return report;
}

LogicalCount count_logicals(const MajoranaCode &code) {
    size_t r = code.rank();
    if (2 * r > code.num_modes()) {
        throw Error(ErrorCode::kInvalidInputCode, "generator rank exceeds half the number of modes");
    }
    size_t logical = code.num_modes() - 2 * r;
    return LogicalCount{logical, Rational(int64_t(logical), 2)};
}

int k_odd(const MajoranaCode &code) {
    Echelon s(code.generators());
    return s.contains(BitVector::ones(code.num_modes())) ? 0 : 1;
}

LogicalSpaces::LogicalSpaces(const MajoranaCode &code)
    : centralizer(code.centralizer_basis()), stabilizers(code.generators()) {
}

namespace {

std::optional<BitVector> logical_in_region(
    const LogicalSpaces &spaces, const BitVector &region, Parity parity, bool light) {
    BitMatrix w = subspace_supported_on(spaces.centralizer, region);
    std::vector<BitVector> basis = w.rows();
    const Echelon &s = spaces.stabilizers;

    std::optional<size_t> odd;
    for (size_t i = 0; i < basis.size(); i++) {
        if (basis[i].parity()) {
            odd = i;
            break;
        }
    }

    std::vector<BitVector> search_basis;
    BitVector offset(region.size());
    bool found = false;
    if (parity == Parity::kEven) {
        for (size_t i = 0; i < basis.size(); i++) {
            if (odd && i == *odd) {
                continue;
            }
            BitVector v = basis[i];
            if (v.parity()) {
                v ^= basis[*odd];
            }
            found = found || !s.contains(v);
            search_basis.push_back(std::move(v));
        }
    } else if (parity == Parity::kOdd) {
        if (!odd) {
            return std::nullopt;
        }
        offset = basis[*odd];
        for (size_t i = 0; i < basis.size(); i++) {
            if (i == *odd) {
                continue;
            }
            BitVector v = basis[i];
            if (v.parity()) {
                v ^= basis[*odd];
            }
            search_basis.push_back(std::move(v));
        }
        found = !s.contains(offset);
    } else {
        for (const auto &v : basis) {
            found = found || !s.contains(v);
        }
        search_basis = basis;
    }
    if (!found) {
        return std::nullopt;
    }
    if (!light) {
        if (parity == Parity::kOdd) {
            return offset;
        }
        for (const auto &v : search_basis) {
            if (!s.contains(v)) {
                return v;
            }
        }
    }
    if (search_basis.size() <= kMaxEnumerationDim) {
        return lightest_in_span(search_basis, offset, s, parity);
    }
    std::optional<BitVector> start;
    if (parity == Parity::kOdd) {
        start = offset;
    } else {
        for (const auto &v : search_basis) {
            if (!s.contains(v)) {
                start = v;
                break;
            }
        }
    }
    if (!start) {
        return std::nullopt;
    }
    BitVector best = descend(*start, search_basis, s);
    if (best.weight() <= 1) {
        return best;
    }
    // Exact search on the region's coordinates, bounded below the greedy result.
    std::vector<size_t> coords = region.support();
    BitMatrix local_kernel(coords.size());
    for (const auto &v : basis) {
        local_kernel.push_back(v.select(coords));
    }
    BitMatrix local_span(coords.size());
    BitMatrix stabilizers_inside = subspace_supported_on(s.basis(), region);
    for (const auto &v : stabilizers_inside.rows()) {
        local_span.push_back(v.select(coords));
    }
    LogicalSearch search(local_kernel, local_span, SiteModel::single_bits(coords.size()));
    SearchOptions options;
    options.max_weight = std::min(best.weight() - 1, kMaxRegionSearchWeight);
    options.parity = parity;
    SearchResult r = search.find_minimum(options);
    if (r.hit) {
        return r.hit->vector.scatter(region.size(), coords);
    }
    return best;
}

}  // namespace

std::optional<BitVector> find_logical_in_region(
    const LogicalSpaces &spaces, const BitVector &region, Parity parity) {
    return logical_in_region(spaces, region, parity, true);
}

MajoranaDistance distance(const MajoranaCode &code, size_t max_weight, unsigned threads, Parity parity) {
    require_valid(code);
    require_logicals(code);
    LogicalSearch search(code.centralizer_basis(), code.generators(), SiteModel::single_bits(code.num_modes()));
    SearchOptions options;
    options.max_weight = max_weight;
    options.threads = threads;
    options.parity = parity;
    return MajoranaDistance{search.find_minimum(options)};
}

namespace {

using Clique = std::vector<int>;

struct AxisCliques {
    std::vector<Clique> cliques;
    bool exact = true;
};

// Maximal sets of distinct coordinate values whose pairwise wrapped
// distances are all at most t.
class CliqueFinder {
   public:
    CliqueFinder(const Layout &layout, int axis, std::vector<int> values, size_t cap)
        : layout_(layout), axis_(axis), values_(std::move(values)), cap_(cap) {
    }

    AxisCliques find(int t) {
        AxisCliques out;
        if (values_.empty()) {
            return out;
        }
        if (layout_.axis_spread(axis_, values_) <= t) {
            out.cliques.push_back(values_);
            return out;
        }
        if (!layout_.periodic(axis_)) {
            size_t prev_end = 0;
            for (size_t i = 0, j = 0; i < values_.size(); i++) {
                j = std::max(j, i);
                while (j + 1 < values_.size() && values_[j + 1] - values_[i] <= t) {
                    j++;
                }
                if (i == 0 || j > prev_end) {
                    out.cliques.emplace_back(values_.begin() + i, values_.begin() + j + 1);
                }
                prev_end = j;
            }
            return out;
        }
        if (bron_kerbosch(t, out.cliques)) {
            return out;
        }
        out.cliques = arcs(t);
        out.exact = false;
        return out;
    }

   private:
    bool bron_kerbosch(int t, std::vector<Clique> &out) {
        size_t k = values_.size();
        adjacency_.assign(k, BitVector(k));
        for (size_t i = 0; i < k; i++) {
            for (size_t j = 0; j < k; j++) {
                if (i != j && layout_.axis_distance(axis_, values_[i], values_[j]) <= t) {
                    adjacency_[i].set(j);
                }
            }
        }
        out.clear();
        std::vector<size_t> r;
        return expand(r, BitVector::ones(k), BitVector(k), out);
    }

    bool expand(std::vector<size_t> &r, BitVector p, BitVector x, std::vector<Clique> &out) {
        if (p.none() && x.none()) {
            if (out.size() >= cap_) {
                return false;
            }
            Clique c;
            for (size_t i : r) {
                c.push_back(values_[i]);
            }
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
            return true;
        }
        size_t pivot = 0;
        size_t best = 0;
        for (size_t u : (p | x).support()) {
            size_t n = (p & adjacency_[u]).weight();
            if (n >= best) {
                best = n;
                pivot = u;
            }
        }
        for (size_t v : (p & adjacency_[pivot].complement()).support()) {
            r.push_back(v);
            if (!expand(r, p & adjacency_[v], x & adjacency_[v], out)) {
                return false;
            }
            r.pop_back();
            p.set(v, false);
            x.set(v);
        }
        return true;
    }

    std::vector<Clique> arcs(int t) const {
        int period = *layout_.periods()[axis_];
        std::set<Clique> seen;
        for (int start : values_) {
            Clique c;
            for (int v : values_) {
                if (((v - start) % period + period) % period <= t) {
                    c.push_back(v);
                }
            }
            seen.insert(std::move(c));
        }
        return {seen.begin(), seen.end()};
    }

    const Layout &layout_;
    int axis_;
    std::vector<int> values_;
    size_t cap_;
    std::vector<BitVector> adjacency_;
};

}  // namespace

EvenDiameter l_even(const MajoranaCode &code, size_t clique_cap) {
    const Layout &layout = code.require_layout();
    require_valid(code);
    require_logicals(code);
    LogicalSpaces spaces(code);
    size_t m = code.num_modes();

    std::array<std::vector<int>, 2> values;
    std::array<std::map<int, BitVector>, 2> modes_at;
    for (int axis = 0; axis < 2; axis++) {
        for (size_t i = 0; i < m; i++) {
            int c = layout.coordinate(i, axis);
            auto [it, inserted] = modes_at[axis].try_emplace(c, BitVector(m));
            it->second.set(i);
        }
        for (const auto &[c, _] : modes_at[axis]) {
            values[axis].push_back(c);
        }
    }
    int t_max = std::max(layout.axis_spread(0, values[0]), layout.axis_spread(1, values[1]));

    CliqueFinder fx(layout, 0, values[0], clique_cap);
    CliqueFinder fy(layout, 1, values[1], clique_cap);
    EvenDiameter result;
    for (int t = 0; t <= t_max; t++) {
        AxisCliques cx = fx.find(t);
        AxisCliques cy = fy.find(t);
        result.exact = result.exact && cx.exact && cy.exact;
        auto masks = [&](int axis, const AxisCliques &cl) {
            std::vector<BitVector> out;
            for (const auto &c : cl.cliques) {
                BitVector mask(m);
                for (int v : c) {
                    mask |= modes_at[axis].at(v);
                }
                out.push_back(std::move(mask));
            }
            return out;
        };
        std::vector<BitVector> mx = masks(0, cx);
        std::vector<BitVector> my = masks(1, cy);
        std::unordered_set<BitVector, BitVectorHash> tried;
        for (const auto &a : mx) {
            for (const auto &b : my) {
                BitVector region = a & b;
                if (region.none() || !tried.insert(region).second) {
                    continue;
                }
                if (logical_in_region(spaces, region, Parity::kEven, false)) {
                    result.witness = *find_logical_in_region(spaces, region, Parity::kEven);
                    result.diameter = layout.diameter(result.witness);
                    return result;
                }
            }
        }
    }
    return result;
}

namespace {

void check_symplectic(const std::vector<LogicalPair> &pairs) {
    for (size_t i = 0; i < pairs.size(); i++) {
        for (size_t j = 0; j < pairs.size(); j++) {
            bool xz = omega(pairs[i].x, pairs[j].z);
            if (xz != (i == j) || (i != j && (omega(pairs[i].x, pairs[j].x) || omega(pairs[i].z, pairs[j].z)))) {
                throw Error(ErrorCode::kInconsistencyDetected, "logical basis is not symplectic");
            }
        }
    }
}

BitVector greedy_reduce(BitVector v, const BitMatrix &generators) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto &g : generators.rows()) {
            BitVector w = v ^ g;
            if (w.weight() < v.weight()) {
                v = std::move(w);
                changed = true;
            }
        }
    }
    return v;
}

}  // namespace

std::vector<LogicalPair> canonical_logical_basis(const MajoranaCode &code) {
    require_valid(code);
    LogicalCount count = count_logicals(code);
    if (count.logical_modes == 0) {
        throw Error(ErrorCode::kNoLogicals, "the code has no logical modes");
    }
    if (count.logical_modes % 2) {
        throw Error(
            ErrorCode::kOddLogicalModeCount,
            std::to_string(count.logical_modes) + " logical modes do not pair into qubits");
    }
    size_t m = code.num_modes();
    Echelon seen(code.generators());
    std::vector<BitVector> pool;
    BitMatrix centralizer = code.centralizer_basis();
    for (const auto &v : centralizer.rows()) {
        if (seen.insert(v)) {
            pool.push_back(v);
        }
    }

    std::vector<LogicalPair> pairs;
    auto split_off = [&](const BitVector &a, const BitVector &b, std::vector<BitVector> rest) {
        Echelon independent(code.generators());
        std::vector<BitVector> kept;
        for (auto &v : rest) {
            if (omega(v, b)) {
                v ^= a;
            }
            if (omega(v, a)) {
                v ^= b;
            }
            if (independent.insert(v)) {
                kept.push_back(std::move(v));
            }
        }
        return kept;
    };

    if (k_odd(code)) {
        BitVector z = greedy_reduce(BitVector::ones(m), code.generators());
        auto it = std::find_if(pool.begin(), pool.end(), [](const BitVector &v) { return v.parity(); });
        if (it == pool.end()) {
            throw Error(ErrorCode::kInconsistencyDetected, "no odd logical representative");
        }
        BitVector x = *it;
        pool.erase(it);
        pool = split_off(x, z, std::move(pool));
        pairs.push_back({std::move(x), std::move(z)});
    }
    while (!pool.empty()) {
        BitVector a = pool.front();
        auto it = std::find_if(pool.begin() + 1, pool.end(), [&](const BitVector &v) { return omega(a, v); });
        if (it == pool.end()) {
            throw Error(ErrorCode::kInconsistencyDetected, "degenerate logical form");
        }
        BitVector b = *it;
        pool.erase(it);
        pool.erase(pool.begin());
        pool = split_off(a, b, std::move(pool));
        pairs.push_back({std::move(a), std::move(b)});
    }
    if (2 * pairs.size() != count.logical_modes) {
        throw Error(ErrorCode::kInconsistencyDetected, "logical basis has the wrong size");
    }
    check_symplectic(pairs);
    return pairs;
}

std::optional<std::vector<LogicalPair>> all_odd_logical_basis(const MajoranaCode &code) {
    if (!k_odd(code)) {
        return std::nullopt;
    }
    std::vector<LogicalPair> pairs = canonical_logical_basis(code);
    size_t m = code.num_modes();
    Echelon s(code.generators());
    BitVector z = BitVector::ones(m);
    BitVector w(m);
    for (const auto &p : pairs) {
        w ^= p.x;
        w ^= p.z;
    }
    // Symplectic transvections T_u(v) = v + omega(v, u) u carrying w to z.
    std::vector<BitVector> moves;
    if (!s.contains(w ^ z)) {
        if (omega(w, z)) {
            moves.push_back(w ^ z);
        } else {
            auto pick = [&](const BitVector &target) -> BitVector {
                for (const auto &p : pairs) {
                    if (omega(target, p.x)) {
                        return p.x;
                    }
                    if (omega(target, p.z)) {
                        return p.z;
                    }
                }
                throw Error(ErrorCode::kInconsistencyDetected, "logical form is degenerate");
            };
            BitVector y1 = pick(w);
            BitVector y2 = pick(z);
            BitVector y = omega(z, y1) ? y1 : (omega(w, y2) ? y2 : y1 ^ y2);
            moves.push_back(w ^ y);
            moves.push_back(y ^ z);
        }
    }
    for (const auto &u : moves) {
        for (auto &p : pairs) {
            if (omega(p.x, u)) {
                p.x ^= u;
            }
            if (omega(p.z, u)) {
                p.z ^= u;
            }
        }
    }
    check_symplectic(pairs);
    for (const auto &p : pairs) {
        if (!p.x.parity() || !p.z.parity()) {
            throw Error(ErrorCode::kInconsistencyDetected, "transvected basis has an even operator");
        }
    }
    return pairs;
}

int max_generator_spread(const MajoranaCode &code) {
    const Layout &layout = code.require_layout();
    int best = 0;
    for (const auto &g : code.generators().rows()) {
        size_t d = layout.diameter(g);
        if (d > 0) {
            best = std::max(best, int(d) - 1);
        }
    }
    return best;
}

bool is_connected_support(const Layout &layout, const BitVector &support, int link) {
    std::vector<size_t> modes = support.support();
    if (modes.size() <= 1) {
        return true;
    }
    std::vector<bool> reached(modes.size(), false);
    std::queue<size_t> frontier;
    reached[0] = true;
    frontier.push(0);
    size_t count = 1;
    while (!frontier.empty()) {
        size_t i = frontier.front();
        frontier.pop();
        for (size_t j = 0; j < modes.size(); j++) {
            if (!reached[j] && layout.distance(modes[i], modes[j]) <= link) {
                reached[j] = true;
                count++;
                frontier.push(j);
            }
        }
    }
    return count == modes.size();
}

ConnectivityReport min_logical_connected(const MajoranaCode &code, size_t max_weight, size_t enumeration_cap) {
    const Layout &layout = code.require_layout();
    ConnectivityReport report;
    report.link = max_generator_spread(code);
    MajoranaDistance d = distance(code, max_weight);
    if (d.exhausted()) {
        return report;
    }
    report.weight = d.value();
    LogicalSearch search(code.centralizer_basis(), code.generators(), SiteModel::single_bits(code.num_modes()));
    search.for_each_of_weight(*report.weight, Parity::kAny, [&](const BitVector &v) {
        report.num_minimum_logicals++;
        if (is_connected_support(layout, v, report.link)) {
            report.num_connected++;
            if (!report.connected_example || support_less(v, *report.connected_example)) {
                report.connected_example = v;
            }
        }
        return report.num_minimum_logicals < enumeration_cap;
    });
    return report;
}

AnalysisReport analyze(const MajoranaCode &code, const AnalyzeOptions &options) {
    require_valid(code);
    AnalysisReport report;
    LogicalCount count = count_logicals(code);
    report.modes = code.num_modes();
    report.rank = code.rank();
    report.logical_modes = count.logical_modes;
    report.k = count.k;
    report.k_odd = k_odd(code);
    report.max_weight = std::min(options.max_weight, code.num_modes());
    if (count.logical_modes == 0) {
        return report;
    }
    MajoranaDistance d = distance(code, options.max_weight, options.threads);
    report.distance = d.search;
    if (!d.exhausted()) {
        report.witnesses.push_back(d.search.hit->vector);
    }
    if (options.compute_l_even && code.layout()) {
        report.l_even = l_even(code);
    }
    return report;
}

}  // namespace majcodes
