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


// Acceptance suite. Prints one PASS/FAIL line per criterion with the measured
// time and the limit it was held to, and exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "majcodes/catalog.h"
#include "majcodes/code_maps.h"
#include "majcodes/color_code.h"
#include "majcodes/geometry.h"
#include "majcodes/gf2.h"
#include "majcodes/majorana_code.h"
#include "majcodes/pauli_code.h"
#include "oracles.h"

namespace majcodes {
namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string &what) {
        if (!ok) {
            if (!pass) {
                detail << "; ";
            }
            pass = false;
            detail << "failed: " << what;
        }
    }
};

struct Criterion {
    std::string id;
    double limit_seconds;
    std::function<void(Outcome &)> body;
};

std::optional<size_t> hit_weight(const SearchResult &r) {
    return r.hit ? std::optional<size_t>(r.hit->weight) : std::nullopt;
}

// Random valid codes on at most 12 modes, shared by the cleanability and
// odd-logical criteria.
std::vector<MajoranaCode> corpus() {
    std::mt19937_64 rng(7);
    std::vector<MajoranaCode> codes;
    for (int i = 0; i < 200; i++) {
        codes.push_back(oracle::random_majorana_code(rng, 1, 12, false, false));
    }
    return codes;
}

void ac1(Outcome &o) {
    auto report = analyze(kitaev_chain(5));
    o.check(report.modes == 10, "10 modes");
    o.check(report.k == Rational(1, 1), "k = 1");
    o.check(report.k_odd == 1, "k_odd = 1");
    o.check(report.distance && hit_weight(*report.distance) == 1u, "d = 1");
    o.check(report.l_even && report.l_even->diameter == 10u && report.l_even->exact, "l_even = 10");
    o.detail << "k=" << report.k.str() << " k_odd=" << report.k_odd << " d=1 l_even=10";
}

void ac2(Outcome &o) {
    auto code = four_mode_code();
    o.check(count_logicals(code).k == Rational(1, 1), "k = 1");
    o.check(distance(code).value() == 2, "d = 2");
    auto doubled = double_code(code);
    o.check(format_pauli_code(doubled) == "XXXX\nZZZZ\n", "doubled generators are XXXX, ZZZZ");
    o.check(oracle::logical_qubits(doubled) == 2, "brute-force k = 2");
    o.check(oracle::qubit_distance(doubled) == 2u, "brute-force d = 2");
    o.check(qubit_distance(doubled).value() == 2, "library d = 2");
    o.detail << "[[4,2,2]] = <XXXX, ZZZZ>";
}

void ac3(Outcome &o) {
    auto steane = steane_code();
    o.check(steane.num_logical_qubits() == 1 && qubit_distance(steane).value() == 3, "[[7,1,3]]");
    auto image = stabilizer_to_majorana(steane);
    o.check(image.num_modes() == 28, "28 modes");
    o.check(count_logicals(image).k == Rational(1, 1), "Majorana k = 1");
    o.check(distance(image, 6).value() == 6, "Majorana d = 6");
    auto css = double_code(image);
    o.check(css.num_qubits() == 28 && css.num_logical_qubits() == 2, "[[28,2,.]]");
    auto d = qubit_distance(css, 6);
    o.check(!d.exhausted() && d.value() == 6, "CSS d = 6 within weight 6");
    o.check(is_weakly_self_dual_css(css), "weakly self-dual");
    o.detail << "[[7,1,3]] -> 28 modes k=1 d=6 -> [[28,2,6]] weakly self-dual";
}

void ac4(Outcome &o) {
    auto half = steane_majorana();
    o.check(half.num_modes() == 7, "7 modes");
    o.check(count_logicals(half).k.str() == "1/2", "k = 1/2");
    o.check(distance(half).value() == 3, "d = 3");
    auto both = product(half, half, 0);
    o.check(both.num_modes() == 14, "14 modes");
    o.check(count_logicals(both).k == Rational(1, 1), "product k = 1");
    auto d = distance(both);
    o.check(d.value() == 3, "product d = 3");
    const auto &w = d.search.hit->vector;
    auto modes = w.support();
    bool one_block = modes.back() < 7 || modes.front() >= 7;
    o.check(w.weight() == 3 && w.weight() % 2 == 1 && one_block, "odd weight-3 logical inside one block");
    o.detail << "k=1/2 d=3; product 14 modes k=1 d=3 witness " << w.str();
}

void ac5(Outcome &o) {
    auto g = build_cylinder(5, 2);
    auto report = validate_surface(g);
    o.check(report.ok(), "G1-G4 and cellularity");
    auto code = face_code(g);
    o.check(count_logicals(code).k == Rational(1, 1), "k = 1");
    o.check(k_odd(code) == 1, "k_odd = 1");
    auto [c0, c1] = boundary_logicals(g);
    o.check(c0.weight() == 5 && c1.weight() == 5, "boundary logicals of weight 5");
    auto p = partition_faces(g);
    o.check(p.f0.size() == 10, "|F0| = 10");
    auto colors = colorability(g, p, 0);
    o.check(!colors.full_three_colorable, "full surface not 3-colorable");
    o.check(colors.cut_three_colorable, "cut surface 3-colorable");
    o.detail << "R=5 L=2: |V|=" << g.num_vertices() << " |F0|=" << p.f0.size() << " |C0|=|C1|=5, cut at x=0 removes "
             << colors.cut_faces_removed << " faces";
}

void ac6(Outcome &o) {
    std::vector<int> rs{3, 5};
    std::vector<int> ls{1, 2, 3};
    auto rows = scaling_experiment(rs, ls);
    auto at = [&](int r, int l) -> const ScalingRow & {
        for (const auto &row : rows) {
            if (row.r == r && row.l == l) {
                return row;
            }
        }
        throw std::logic_error("missing row");
    };
    for (const auto &row : rows) {
        bool exact = !row.skipped && row.d && row.l_even && row.l_even_exact && row.min_odd_weight;
        o.check(exact, "exact values for R=" + std::to_string(row.r) + " L=" + std::to_string(row.l));
        if (!exact) {
            return;
        }
        o.check(*row.min_odd_weight == static_cast<size_t>(row.r), "min odd weight = R");
        o.detail << "(" << row.r << "," << row.l << "): d=" << *row.d << " l_even=" << *row.l_even
                 << " odd=" << *row.min_odd_weight << "  ";
    }
    for (int r : rs) {
        for (size_t i = 1; i < ls.size(); i++) {
            o.check(*at(r, ls[i]).l_even >= *at(r, ls[i - 1]).l_even, "l_even non-decreasing in L");
            o.check(*at(r, ls[i]).d >= *at(r, ls[i - 1]).d, "d non-decreasing in L");
        }
    }
    for (int l : ls) {
        o.check(*at(5, l).d >= *at(3, l).d, "d non-decreasing in R");
    }
    // Per value of min(R, L), the smallest and largest distances must not
    // drop as min(R, L) grows.
    std::map<int, std::pair<size_t, size_t>> by_min;
    for (const auto &row : rows) {
        int key = std::min(row.r, row.l);
        auto [it, fresh] = by_min.try_emplace(key, *row.d, *row.d);
        it->second.first = std::min(it->second.first, *row.d);
        it->second.second = std::max(it->second.second, *row.d);
    }
    for (auto it = std::next(by_min.begin()); it != by_min.end(); ++it) {
        auto prev = std::prev(it)->second;
        o.check(it->second.first >= prev.first && it->second.second >= prev.second, "d trend in min(R,L)");
    }
}

void ac7(Outcome &o, const std::vector<MajoranaCode> &codes) {
    std::mt19937_64 rng(8);
    size_t agree = 0;
    size_t uncleanable = 0;
    for (const auto &code : codes) {
        o.check(validate(code).ok(), "corpus code valid");
        oracle::MajoranaSpace space(code);
        oracle::Mask region = oracle::random_region(rng, code.num_modes());
        auto r = is_cleanable(code, oracle::from_mask(region, code.num_modes()));
        bool expected_uncleanable = oracle::logical_inside(space, region);
        bool ok = r.cleanable != expected_uncleanable;
        if (r.witness) {
            oracle::Mask w = oracle::to_mask(*r.witness);
            ok = ok && space.logical(w) && (w & ~region) == 0;
        }
        agree += ok;
        uncleanable += expected_uncleanable;
    }
    o.check(agree == codes.size(), "100% agreement");
    o.detail << agree << "/" << codes.size() << " agree (" << uncleanable << " uncleanable regions)";
}

void ac8(Outcome &o) {
    std::mt19937_64 rng(9);
    size_t agree = 0;
    for (int i = 0; i < 100; i++) {
        auto code = oracle::random_majorana_code(rng, 2, 12, true);
        oracle::MajoranaSpace space(code);
        auto expected = oracle::distance(space);
        auto doubled = double_code(code);
        bool ok = expected && distance(code).value() == *expected && qubit_distance(doubled).value() == *expected &&
                  oracle::qubit_distance(doubled) == expected;
        agree += ok;
    }
    o.check(agree == 100, "Majorana and doubled distances match enumeration");
    size_t image_agree = 0;
    for (int i = 0; i < 50; i++) {
        auto code = oracle::random_stabilizer_code(rng, 1, 4);
        auto d = oracle::qubit_distance(code);
        auto image = stabilizer_to_majorana(code);
        oracle::MajoranaSpace space(image);
        bool ok = d && distance(image).value() == 2 * *d && oracle::distance(space) == 2 * *d;
        image_agree += ok;
    }
    o.check(image_agree == 50, "qubit-to-Majorana images have doubled distance");
    o.detail << agree << "/100 doubled codes, " << image_agree << "/50 images with n <= 4";
}

void ac9(Outcome &o) {
    auto single = [](size_t u) { return jordan_wigner(BitVector::from_indices(4, {u})).str(); };
    o.check(single(0) == "XI", "c1 -> X1");
    o.check(single(1) == "YI", "c2 -> Y1");
    o.check(single(2) == "ZX", "c3 -> Z1 X2");
    std::vector<MajoranaCode> fixtures{kitaev_chain(5),        four_mode_code(),
                                       hex_torus_code(2, 2),   color_cylinder_code(3, 1),
                                       color_cylinder_code(5, 2), stabilizer_to_majorana(steane_code()),
                                       product(steane_majorana(), steane_majorana(), 2), MajoranaCode(4, BitMatrix(4))};
    for (const auto &code : fixtures) {
        o.check(2 * jw_map_code(code).num_logical_qubits() == count_logicals(code).logical_modes, "fixture k");
    }
    std::mt19937_64 rng(10);
    size_t agree = 0;
    for (int i = 0; i < 100; i++) {
        auto code = oracle::random_majorana_code(rng, 2, 12, true, false);
        auto image = jw_map_code(code);
        agree += 2 * image.num_logical_qubits() == count_logicals(code).logical_modes &&
                 2 * oracle::logical_qubits(image) == count_logicals(code).logical_modes;
    }
    o.check(agree == 100, "random codes keep k");
    o.detail << fixtures.size() << " fixtures and " << agree << "/100 random codes keep k; c1->XI c2->YI c3->ZX";
}

void ac10(Outcome &o) {
    auto chain = kitaev_chain(5);
    auto v = strip_lemma_analysis(chain, make_strips(*chain.layout(), 0, 2));
    o.check(v.odd && v.odd->first.support() == std::vector<size_t>{0} &&
                v.odd->second.support() == std::vector<size_t>{9},
            "chain case (ii) with end modes");
    for (int r : {3, 5}) {
        auto code = color_cylinder_code(r, 2);
        int width = static_cast<int>(generator_diameter(code));
        auto cv = strip_lemma_analysis(code, make_strips(*code.layout(), 1, width));
        o.check(cv.even || cv.odd, "cylinder R=" + std::to_string(r));
        o.detail << "cylinder R=" << r << ": " << (cv.odd ? "(ii)" : "(i)") << "; ";
    }
    auto hex = hex_torus_code(2, 2);
    int hex_width = static_cast<int>(generator_diameter(hex)) + 1;
    auto hv = strip_lemma_analysis(hex, make_strips(*hex.layout(), 0, hex_width, true));
    o.check(hv.even || hv.odd, "hex torus");
    o.detail << "hex-torus: " << (hv.even ? "(i)" : "(ii)") << "; ";
    for (size_t n = 3; n <= 8; n++) {
        auto c = kitaev_chain(n);
        o.check(distance(c).value() == 1, "chain d = 1");
        auto le = l_even(c);
        o.check(le.diameter == 2 * n && le.exact, "chain l_even = mode count");
        o.check(strip_lemma_analysis(c, make_strips(*c.layout(), 0, 2)).odd.has_value(), "chain family case (ii)");
    }
    o.detail << "chains of 6..16 modes: d=1, l_even=m";
}

void ac11(Outcome &o, const std::vector<MajoranaCode> &codes) {
    size_t agree = 0;
    size_t with_odd = 0;
    for (const auto &code : codes) {
        oracle::MajoranaSpace space(code);
        bool has_logicals = code.num_modes() > 2 * space.stabilizer_rank();
        bool even_only = oracle::all_logicals_even(space);
        agree += (k_odd(code) == 0) == even_only;
        with_odd += has_logicals && !even_only;
    }
    o.check(agree == codes.size(), "100% agreement");
    o.detail << agree << "/" << codes.size() << " agree (" << with_odd << " codes with odd logicals)";
}

}  // namespace
}  // namespace majcodes

int main() {
    using namespace majcodes;
    const auto codes = corpus();
    std::vector<Criterion> criteria{
        {"AC1", 1.0, ac1},
        {"AC2", 1.0, ac2},
        {"AC3", 300.0, ac3},
        {"AC4", 1.0, ac4},
        {"AC5", 10.0, ac5},
        {"AC6", 120.0, ac6},
        {"AC7", 120.0, [&](Outcome &o) { ac7(o, codes); }},
        {"AC8", 300.0, ac8},
        {"AC9", 60.0, ac9},
        {"AC10", 60.0, ac10},
        {"AC11", 120.0, [&](Outcome &o) { ac11(o, codes); }},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception &e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.limit_seconds) {
            o.check(false, "time limit");
        }
        failures += !o.pass;
        std::printf("%-4s %s  %.3fs (limit %.0fs)  %s\n", c.id.c_str(), o.pass ? "PASS" : "FAIL", seconds,
                    c.limit_seconds, o.detail.str().c_str());
    }
    return failures == 0 ? 0 : 1;
}
