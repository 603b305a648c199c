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

#include "majcodes/weight_search.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "majcodes/error.h"

namespace majcodes {

namespace {

// A choice packs (site << 8) | atom, one entry per used site in increasing
// site order.
constexpr uint32_t kAtomBits = 8;

uint32_t site_of(uint32_t c) {
    return c >> kAtomBits;
}

bool parity_ok(Parity p, bool odd) {
    switch (p) {
        case Parity::kAny:
            return true;
        case Parity::kEven:
            return !odd;
        case Parity::kOdd:
            return odd;
    }
    return true;
}

double binomial(size_t n, size_t k) {
    if (k > n) {
        return 0;
    }
    return std::exp(std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) - std::lgamma(double(n - k) + 1));
}

constexpr double kMaxTableEntries = 4e6;

}  // namespace

SiteModel SiteModel::single_bits(size_t num_bits) {
    SiteModel m;
    m.num_bits = num_bits;
    for (size_t i = 0; i < num_bits; i++) {
        BitVector v(num_bits);
        v.set(i);
        m.atoms.push_back({std::move(v)});
    }
    return m;
}

SiteModel SiteModel::qubits(size_t num_qubits) {
    SiteModel m;
    m.num_bits = 2 * num_qubits;
    for (size_t q = 0; q < num_qubits; q++) {
        BitVector x(2 * num_qubits);
        x.set(q);
        BitVector z(2 * num_qubits);
        z.set(num_qubits + q);
        m.atoms.push_back({x, z, x ^ z});
    }
    return m;
}

bool SiteModel::single_atom() const {
    return std::all_of(atoms.begin(), atoms.end(), [](const auto &a) {
        return a.size() == 1;
    });
}

struct LogicalSearch::Table {
    size_t half_weight = 0;
    size_t key_words = 0;
    size_t logical_words = 0;
    std::vector<uint64_t> keys;
    std::vector<uint64_t> logical;
    std::vector<uint8_t> parity;
    std::vector<uint32_t> choices;
    // Entry indices sorted by (key, choice).
    std::vector<uint32_t> order;

    const uint64_t *key(uint32_t e) const {
        return keys.data() + size_t(e) * key_words;
    }
    const uint32_t *choice(uint32_t e) const {
        return choices.data() + size_t(e) * half_weight;
    }
};

LogicalSearch::LogicalSearch(const BitMatrix &kernel, const BitMatrix &span, SiteModel sites)
    : sites_(std::move(sites)) {
    size_t m = sites_.num_bits;
    if (kernel.num_cols() != m || span.num_cols() != m) {
        throw Error(
            ErrorCode::kDimensionMismatch,
            "kernel has " + std::to_string(kernel.num_cols()) + " columns and span has " +
                std::to_string(span.num_cols()) + " but the site model covers " + std::to_string(m) + " bits");
    }
    for (const auto &site : sites_.atoms) {
        if (site.empty() || site.size() >= (1u << kAtomBits)) {
            throw Error(ErrorCode::kBadParams, "every site needs between 1 and 255 atoms");
        }
        for (const auto &a : site) {
            if (a.size() != m || a.none()) {
                throw Error(ErrorCode::kBadParams, "atoms must be nonzero vectors of the model length");
            }
        }
    }
    Echelon kernel_space(kernel);
    for (const auto &r : span.rows()) {
        if (!kernel_space.contains(r)) {
            throw Error(ErrorCode::kInvalidInputCode, "span is not contained in the kernel space");
        }
    }

    BitMatrix kernel_checks = orthogonal_complement(kernel);
    BitMatrix span_checks = orthogonal_complement(span);
    Echelon seen(kernel_checks);
    std::vector<BitVector> logical_checks;
    for (const auto &r : span_checks.rows()) {
        if (seen.insert(r)) {
            logical_checks.push_back(r);
        }
    }
    num_logical_checks_ = logical_checks.size();
    kernel_words_ = (kernel_checks.num_rows() + 63) / 64;
    logical_words_ = (logical_checks.size() + 63) / 64;

    size_t words = kernel_words_ + logical_words_;
    syndromes_.resize(sites_.num_sites());
    atom_parity_.resize(sites_.num_sites());
    for (size_t s = 0; s < sites_.num_sites(); s++) {
        for (const auto &a : sites_.atoms[s]) {
            std::vector<uint64_t> syn(words, 0);
            for (size_t i = 0; i < kernel_checks.num_rows(); i++) {
                if (kernel_checks.row(i).dot(a)) {
                    syn[i / 64] |= uint64_t{1} << (i % 64);
                }
            }
            for (size_t j = 0; j < logical_checks.size(); j++) {
                if (logical_checks[j].dot(a)) {
                    syn[kernel_words_ + j / 64] |= uint64_t{1} << (j % 64);
                }
            }
            syndromes_[s].push_back(std::move(syn));
            atom_parity_[s].push_back(a.parity());
        }
    }
}

BitVector LogicalSearch::assemble(const std::vector<uint32_t> &choice) const {
    BitVector v(sites_.num_bits);
    for (uint32_t c : choice) {
        v ^= sites_.atoms[site_of(c)][c & ((1u << kAtomBits) - 1)];
    }
    return v;
}

bool LogicalSearch::prefer_mitm(size_t weight) const {
    if (weight < 3) {
        return false;
    }
    size_t sites = sites_.num_sites();
    double atoms = 1;
    for (const auto &s : sites_.atoms) {
        atoms = std::max(atoms, double(s.size()));
    }
    size_t upper = weight / 2;
    size_t lower = weight - upper;
    double table = binomial(sites, upper) * std::pow(atoms, double(upper));
    if (table > kMaxTableEntries) {
        return false;
    }
    double dfs = binomial(sites, weight) * std::pow(atoms, double(weight));
    double mitm = binomial(sites, lower) * std::pow(atoms, double(lower)) + 4 * table;
    return mitm < dfs;
}

namespace {

// Depth-first enumeration of `depth_target` sites in increasing order,
// maintaining the running syndrome. `leaf` returns false to stop.
struct SiteWalker {
    const std::vector<std::vector<std::vector<uint64_t>>> &syndromes;
    const std::vector<std::vector<bool>> &parities;
    size_t words;
    size_t depth_target;
    size_t first_site_mod;
    size_t stride;
    std::vector<uint64_t> acc;
    std::vector<uint8_t> par;
    std::vector<uint32_t> choice;
    std::function<bool()> leaf;

    SiteWalker(const std::vector<std::vector<std::vector<uint64_t>>> &syn, const std::vector<std::vector<bool>> &p,
               size_t w, size_t depth, size_t mod, size_t str)
        : syndromes(syn),
          parities(p),
          words(w),
          depth_target(depth),
          first_site_mod(mod),
          stride(str),
          acc((depth + 1) * w, 0),
          par(depth + 1, 0),
          choice(depth, 0) {
    }

    const uint64_t *syndrome() const {
        return acc.data() + depth_target * words;
    }
    bool odd() const {
        return par[depth_target];
    }

    bool run() {
        return rec(0, 0);
    }

    bool rec(size_t depth, size_t start) {
        if (depth == depth_target) {
            return leaf();
        }
        size_t num_sites = syndromes.size();
        size_t remaining = depth_target - depth;
        if (num_sites < remaining) {
            return true;
        }
        for (size_t s = start; s + remaining <= num_sites; s++) {
            if (depth == 0 && s % stride != first_site_mod) {
                continue;
            }
            const auto &site = syndromes[s];
            for (size_t a = 0; a < site.size(); a++) {
                const uint64_t *prev = acc.data() + depth * words;
                uint64_t *next = acc.data() + (depth + 1) * words;
                const uint64_t *syn = site[a].data();
                for (size_t k = 0; k < words; k++) {
                    next[k] = prev[k] ^ syn[k];
                }
                par[depth + 1] = par[depth] ^ uint8_t(parities[s][a]);
                choice[depth] = uint32_t(s << kAtomBits) | uint32_t(a);
                if (!rec(depth + 1, s + 1)) {
                    return false;
                }
            }
        }
        return true;
    }
};

bool all_zero(const uint64_t *p, size_t n) {
    for (size_t k = 0; k < n; k++) {
        if (p[k]) {
            return false;
        }
    }
    return true;
}

int compare_words(const uint64_t *a, const uint64_t *b, size_t n) {
    for (size_t k = 0; k < n; k++) {
        if (a[k] != b[k]) {
            return a[k] < b[k] ? -1 : 1;
        }
    }
    return 0;
}

bool choice_less(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b) {
    // Sites first (the support), then atoms.
    for (size_t i = 0; i < std::min(a.size(), b.size()); i++) {
        if (site_of(a[i]) != site_of(b[i])) {
            return site_of(a[i]) < site_of(b[i]);
        }
    }
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a < b;
}

}  // namespace

LogicalSearch::Table LogicalSearch::build_table(size_t weight) const {
    Table t;
    t.half_weight = weight;
    t.key_words = kernel_words_;
    t.logical_words = logical_words_;
    size_t words = kernel_words_ + logical_words_;
    SiteWalker walker(syndromes_, atom_parity_, words, weight, 0, 1);
    walker.leaf = [&]() {
        const uint64_t *syn = walker.syndrome();
        t.keys.insert(t.keys.end(), syn, syn + kernel_words_);
        t.logical.insert(t.logical.end(), syn + kernel_words_, syn + words);
        t.parity.push_back(walker.odd());
        t.choices.insert(t.choices.end(), walker.choice.begin(), walker.choice.end());
        return true;
    };
    walker.run();
    size_t n = t.parity.size();
    t.order.resize(n);
    std::iota(t.order.begin(), t.order.end(), 0);
    std::sort(t.order.begin(), t.order.end(), [&](uint32_t a, uint32_t b) {
        int c = compare_words(t.key(a), t.key(b), t.key_words);
        if (c != 0) {
            return c < 0;
        }
        return std::lexicographical_compare(t.choice(a), t.choice(a) + weight, t.choice(b), t.choice(b) + weight);
    });
    return t;
}

void LogicalSearch::scan_dfs(
    size_t weight, Parity parity, size_t first_site_mod, size_t stride, bool stop_at_first,
    const std::function<bool(const std::vector<uint32_t> &)> &on_hit) const {
    size_t words = kernel_words_ + logical_words_;
    SiteWalker walker(syndromes_, atom_parity_, words, weight, first_site_mod, stride);
    walker.leaf = [&]() {
        const uint64_t *syn = walker.syndrome();
        if (!all_zero(syn, kernel_words_) || all_zero(syn + kernel_words_, logical_words_) ||
            !parity_ok(parity, walker.odd())) {
            return true;
        }
        bool keep_going = on_hit(walker.choice);
        return keep_going && !stop_at_first;
    };
    walker.run();
}

void LogicalSearch::scan_mitm(
    size_t weight, Parity parity, size_t first_site_mod, size_t stride, bool stop_at_first, const Table &table,
    const std::function<bool(const std::vector<uint32_t> &)> &on_hit) const {
    size_t upper = table.half_weight;
    size_t lower = weight - upper;
    size_t words = kernel_words_ + logical_words_;
    SiteWalker walker(syndromes_, atom_parity_, words, lower, first_site_mod, stride);
    std::vector<uint32_t> combined(weight);
    std::vector<uint64_t> logical(logical_words_);
    walker.leaf = [&]() {
        const uint64_t *syn = walker.syndrome();
        uint32_t last_site = site_of(walker.choice.back());
        auto lo = std::lower_bound(table.order.begin(), table.order.end(), syn, [&](uint32_t e, const uint64_t *k) {
            return compare_words(table.key(e), k, table.key_words) < 0;
        });
        for (auto it = lo; it != table.order.end(); ++it) {
            uint32_t e = *it;
            if (compare_words(table.key(e), syn, table.key_words) != 0) {
                break;
            }
            const uint32_t *up = table.choice(e);
            if (site_of(up[0]) <= last_site) {
                continue;
            }
            const uint64_t *el = table.logical.data() + size_t(e) * logical_words_;
            bool nonzero = false;
            for (size_t k = 0; k < logical_words_; k++) {
                nonzero |= (el[k] ^ syn[kernel_words_ + k]) != 0;
            }
            if (!nonzero || !parity_ok(parity, bool(table.parity[e]) != walker.odd())) {
                continue;
            }
            std::copy(walker.choice.begin(), walker.choice.end(), combined.begin());
            std::copy(up, up + upper, combined.begin() + lower);
            if (!on_hit(combined) || stop_at_first) {
                return false;
            }
        }
        return true;
    };
    walker.run();
}

SearchResult LogicalSearch::find_minimum(const SearchOptions &options) const {
    SearchResult result;
    size_t max_weight = std::min(options.max_weight, sites_.num_sites());
    if (num_logical_checks_ == 0) {
        result.searched_through = max_weight;
        return result;
    }
    unsigned threads = std::max(1u, options.threads);
    bool single = sites_.single_atom();
    std::optional<Table> table;

    for (size_t w = 1; w <= max_weight; w++) {
        bool mitm = options.meet_in_the_middle && prefer_mitm(w);
        if (mitm && (!table || table->half_weight != w / 2)) {
            table = build_table(w / 2);
        }
        std::vector<std::optional<std::vector<uint32_t>>> best(threads);
        auto work = [&](unsigned t) {
            auto on_hit = [&](const std::vector<uint32_t> &c) {
                if (!best[t] || choice_less(c, *best[t])) {
                    best[t] = c;
                }
                return true;
            };
            // With one atom per site the enumeration order is already the
            // tie-break order, so the first hit in a partition is its best.
            if (mitm) {
                scan_mitm(w, options.parity, t, threads, single, *table, on_hit);
            } else {
                scan_dfs(w, options.parity, t, threads, single, on_hit);
            }
        };
        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; t++) {
                pool.emplace_back(work, t);
            }
            for (auto &th : pool) {
                th.join();
            }
        }
        std::optional<std::vector<uint32_t>> overall;
        for (auto &b : best) {
            if (b && (!overall || choice_less(*b, *overall))) {
                overall = b;
            }
        }
        result.searched_through = w;
        if (overall) {
            result.hit = SearchHit{w, assemble(*overall)};
            return result;
        }
    }
    return result;
}

void LogicalSearch::for_each_of_weight(
    size_t weight, Parity parity, const std::function<bool(const BitVector &)> &visit) const {
    if (weight == 0 || weight > sites_.num_sites() || num_logical_checks_ == 0) {
        return;
    }
    auto on_hit = [&](const std::vector<uint32_t> &c) {
        return visit(assemble(c));
    };
    if (prefer_mitm(weight)) {
        Table table = build_table(weight / 2);
        scan_mitm(weight, parity, 0, 1, false, table, on_hit);
    } else {
        scan_dfs(weight, parity, 0, 1, false, on_hit);
    }
}

SearchResult min_weight_not_in_span(const BitMatrix &kernel, const BitMatrix &span, size_t max_weight, Parity parity) {
    LogicalSearch search(kernel, span, SiteModel::single_bits(kernel.num_cols()));
    SearchOptions options;
    options.max_weight = max_weight;
    options.parity = parity;
    return search.find_minimum(options);
}

}  // namespace majcodes
