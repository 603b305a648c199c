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


#include "cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "majcodes/catalog.h"
#include "majcodes/code_maps.h"
#include "majcodes/color_code.h"
#include "majcodes/error.h"
#include "majcodes/formats.h"
#include "majcodes/geometry.h"
#include "majcodes/majorana_code.h"
#include "majcodes/pauli_code.h"

namespace majcodes::cli {

namespace {

constexpr size_t kFullSearchModes = 20;
constexpr size_t kDefaultBoundedWeight = 6;

// Thrown for problems with the command line itself or unreadable files.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::kNonCommutingGenerators:
        case ErrorCode::kInvalidInputCode:
        case ErrorCode::kInvalidSurface:
        case ErrorCode::kNoLogicals:
        case ErrorCode::kNoLogicalQubits:
        case ErrorCode::kInconsistencyDetected:
            return 1;
        default:
            return 2;
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw UsageError("cannot write " + path);
    }
}

bool ends_with(const std::string &s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct LoadedCode {
    std::optional<MajoranaCode> majorana;
    std::optional<StabilizerCode> stabilizer;
};

bool looks_like_mfc(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        return line.compare(first, 5, "modes") == 0;
    }
    return false;
}

LoadedCode load_code(const std::string &path) {
    std::string text = read_file(path);
    LoadedCode code;
    bool mfc = ends_with(path, ".mfc") || (!ends_with(path, ".stab") && looks_like_mfc(text));
    if (mfc) {
        code.majorana = parse_mfc(text);
    } else {
        code.stabilizer = parse_pauli_code(text);
    }
    return code;
}

MajoranaCode load_majorana(const std::string &path) {
    LoadedCode c = load_code(path);
    if (!c.majorana) {
        throw UsageError(path + " holds a qubit stabilizer code, expected a Majorana code (.mfc)");
    }
    return std::move(*c.majorana);
}

StabilizerCode load_stabilizer(const std::string &path) {
    LoadedCode c = load_code(path);
    if (!c.stabilizer) {
        throw UsageError(path + " holds a Majorana code, expected a qubit stabilizer code (.stab)");
    }
    return std::move(*c.stabilizer);
}

size_t default_max_weight(size_t size, std::optional<size_t> requested) {
    if (requested) {
        return *requested;
    }
    return size <= kFullSearchModes ? size : kDefaultBoundedWeight;
}

std::string list(const BitVector &v) {
    std::string s = "[";
    bool first = true;
    for (size_t i : v.support()) {
        s += (first ? "" : ", ") + std::to_string(i);
        first = false;
    }
    return s + "]";
}

std::string human_k(const Rational &k) {
    return k.den == 1 ? std::to_string(k.num) : k.str();
}

std::string distance_text(const SearchResult &r) {
    if (r.hit) {
        return std::to_string(r.hit->weight);
    }
    return "exhausted (none up to weight " + std::to_string(r.searched_through) + ")";
}

// Returns 1 after printing the violations when the code is invalid.
int report_violations(const MajoranaCode &code, std::ostream &err) {
    ValidationReport v = validate(code);
    if (v.ok()) {
        return 0;
    }
    err << "invalid Majorana code:\n";
    for (const auto &m : v.messages()) {
        err << "  " << m << '\n';
    }
    return 1;
}

std::string summarize(const MajoranaCode &code, std::optional<size_t> max_weight) {
    std::ostringstream s;
    LogicalCount c = count_logicals(code);
    s << "modes=" << code.num_modes() << " logical_modes=" << c.logical_modes << " k=" << human_k(c.k);
    if (c.logical_modes > 0 && validate(code).ok()) {
        s << " d=" << distance_text(distance(code, default_max_weight(code.num_modes(), max_weight)).search);
    }
    return s.str();
}

std::string summarize(const StabilizerCode &code, std::optional<size_t> max_weight) {
    std::ostringstream s;
    s << "n=" << code.num_qubits() << " k=" << code.num_logical_qubits();
    if (code.num_logical_qubits() > 0) {
        s << " d=" << distance_text(qubit_distance(code, default_max_weight(code.num_qubits(), max_weight)).search);
    }
    return s.str();
}

struct BuildArgs {
    std::string name;
    std::optional<int> n, lx, ly, r, l;
    std::string out;
    std::string surface;
};

int cmd_build(const BuildArgs &a, std::ostream &out, std::ostream &err) {
    std::map<std::string, int> params;
    auto put = [&](const char *key, const std::optional<int> &v) {
        if (v) {
            params[key] = *v;
        }
    };
    put("n", a.n);
    put("Lx", a.lx);
    put("Ly", a.ly);
    put("R", a.r);
    put("L", a.l);
    CatalogEntry entry = catalog_build(a.name, params);

    std::string text;
    std::ostringstream summary;
    if (auto *maj = std::get_if<MajoranaCode>(&entry)) {
        text = format_mfc(*maj, a.name);
        summary << a.name << ": " << maj->num_modes() << " modes, " << maj->generators().num_rows() << " generators";
    } else {
        const auto &stab = std::get<StabilizerCode>(entry);
        text = format_pauli_code(stab);
        summary << a.name << ": " << stab.num_qubits() << " qubits, " << stab.generators().size() << " generators";
    }
    if (a.name == "color-cylinder") {
        SurfaceGraph g = build_cylinder(*a.r, *a.l);
        FacePartition p = partition_faces(g);
        summary << "; |V|=" << g.num_vertices() << " |F|=" << g.faces.size() << " |F0|=" << p.f0.size()
                << " |F1|=" << p.f1.size();
        if (!a.surface.empty()) {
            write_file(a.surface, surface_to_json(g) + "\n");
        }
    } else if (!a.surface.empty()) {
        throw UsageError("--surface is only available for color-cylinder");
    }
    if (a.out.empty()) {
        out << text;
        err << summary.str() << '\n';
    } else {
        write_file(a.out, text);
        out << summary.str() << " -> " << a.out << '\n';
    }
    return 0;
}

struct AnalyzeArgs {
    std::string input;
    std::optional<size_t> max_weight;
    unsigned threads = 1;
    bool json = false;
    bool sorted = false;
    bool connected = false;
    uint64_t seed = 0;
};

int analyze_stabilizer(const StabilizerCode &code, const AnalyzeArgs &a, std::ostream &out) {
    size_t max_weight = default_max_weight(code.num_qubits(), a.max_weight);
    std::optional<SearchResult> d;
    if (code.num_logical_qubits() > 0) {
        d = qubit_distance(code, max_weight, a.threads).search;
    }
    bool wsd = is_weakly_self_dual_css(code);
    if (a.json) {
        nlohmann::json j;
        j["qubits"] = code.num_qubits();
        j["logical_qubits"] = code.num_logical_qubits();
        j["independent_generators"] = code.num_independent_generators();
        j["max_weight"] = std::min(max_weight, code.num_qubits());
        j["weakly_self_dual_css"] = wsd;
        if (!d) {
            j["distance"] = nullptr;
        } else if (d->hit) {
            j["distance"] = d->hit->weight;
        } else {
            j["distance"] = {{"exhausted", d->searched_through}};
        }
        j["witnesses"] = nlohmann::json::array();
        if (d && d->hit) {
            j["witnesses"].push_back(PauliOperator::from_symplectic(d->hit->vector).str());
        }
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "qubits                 " << code.num_qubits() << '\n';
    out << "logical_qubits         " << code.num_logical_qubits() << '\n';
    out << "weakly_self_dual_css   " << (wsd ? "true" : "false") << '\n';
    if (d) {
        out << "distance               " << distance_text(*d) << '\n';
        if (d->hit) {
            out << "witness                " << PauliOperator::from_symplectic(d->hit->vector).str() << '\n';
        }
    }
    return 0;
}

int cmd_analyze(const AnalyzeArgs &a, std::ostream &out, std::ostream &err) {
    LoadedCode loaded = load_code(a.input);
    if (loaded.stabilizer) {
        return analyze_stabilizer(*loaded.stabilizer, a, out);
    }
    const MajoranaCode &code = *loaded.majorana;
    if (int rc = report_violations(code, err)) {
        return rc;
    }
    AnalyzeOptions options;
    options.max_weight = default_max_weight(code.num_modes(), a.max_weight);
    options.threads = a.threads;
    AnalysisReport report = analyze(code, options);
    std::optional<ConnectivityReport> conn;
    if (a.connected && code.layout() && report.logical_modes > 0) {
        conn = min_logical_connected(code, options.max_weight);
    }
    if (a.json) {
        nlohmann::json j = nlohmann::json::parse(report_to_json(report));
        if (conn) {
            j["min_logical_connected"] = conn->some_connected();
        }
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "modes          " << report.modes << '\n';
    out << "rank           " << report.rank << '\n';
    out << "logical_modes  " << report.logical_modes << '\n';
    out << "k              " << human_k(report.k) << '\n';
    out << "k_odd          " << report.k_odd << '\n';
    if (report.distance) {
        out << "distance       " << distance_text(*report.distance) << '\n';
    } else {
        out << "distance       n/a (no logical modes)\n";
    }
    if (report.l_even) {
        if (report.l_even->diameter) {
            out << "l_even         " << (report.l_even->exact ? "" : "<= ") << *report.l_even->diameter
                << "  witness " << list(report.l_even->witness) << '\n';
        } else {
            out << "l_even         none (no even logical operator)\n";
        }
    } else {
        out << "l_even         n/a\n";
    }
    for (const auto &w : report.witnesses) {
        out << "witness        " << list(w) << '\n';
    }
    if (conn) {
        out << "connected      " << (conn->some_connected() ? "true" : "false") << " (" << conn->num_connected << " of "
            << conn->num_minimum_logicals << " minimum logicals, link " << conn->link << ")\n";
    }
    return 0;
}

struct MapArgs {
    std::string kind;
    std::string input;
    std::string second;
    size_t spacer = 0;
    std::string out;
    std::optional<size_t> max_weight;
};

int cmd_map(const MapArgs &a, std::ostream &out, std::ostream &err) {
    std::string text;
    std::string before;
    std::string after;
    if (a.kind == "qubit-to-majorana") {
        StabilizerCode in = load_stabilizer(a.input);
        MajoranaCode m = stabilizer_to_majorana(in);
        before = summarize(in, a.max_weight);
        after = summarize(m, a.max_weight);
        text = format_mfc(m, "image of " + a.input + " with four modes per qubit");
    } else if (a.kind == "double" || a.kind == "jordan-wigner") {
        MajoranaCode in = load_majorana(a.input);
        if (int rc = report_violations(in, err)) {
            return rc;
        }
        StabilizerCode s = a.kind == "double" ? double_code(in) : jw_map_code(in);
        before = summarize(in, a.max_weight);
        after = summarize(s, a.max_weight);
        text = format_pauli_code(s);
    } else if (a.kind == "product") {
        if (a.second.empty()) {
            throw UsageError("product needs --second");
        }
        MajoranaCode first = load_majorana(a.input);
        MajoranaCode second = load_majorana(a.second);
        MajoranaCode p = product(first, second, a.spacer);
        before = summarize(first, a.max_weight) + " | " + summarize(second, a.max_weight);
        after = summarize(p, a.max_weight);
        text = format_mfc(p, "product of " + a.input + " and " + a.second);
    } else {
        throw UsageError("unknown map kind '" + a.kind + "'");
    }
    if (a.out.empty()) {
        out << text;
        err << "before: " << before << "\nafter:  " << after << '\n';
    } else {
        write_file(a.out, text);
        out << "before: " << before << "\nafter:  " << after << '\n';
    }
    return 0;
}

struct CleanArgs {
    std::string input;
    std::string region;
};

int cmd_clean(const CleanArgs &a, std::ostream &out, std::ostream &err) {
    MajoranaCode code = load_majorana(a.input);
    BitVector region = parse_region(a.region, code.num_modes(), code.layout());
    if (int rc = report_violations(code, err)) {
        return rc;
    }
    CleanResult r = is_cleanable(code, region);
    out << (r.cleanable ? "cleanable" : "uncleanable") << "  |M|=" << region.weight() << " dim S(M)=" << r.dim_within
        << " dim S^M=" << r.dim_restricted << '\n';
    if (r.witness) {
        out << "witness " << list(*r.witness) << '\n';
    }
    return 0;
}

struct StripsArgs {
    std::string input;
    std::string axis = "x";
    int width = 0;
    bool force_periodic = false;
};

int cmd_strips(const StripsArgs &a, std::ostream &out, std::ostream &err) {
    MajoranaCode code = load_majorana(a.input);
    if (int rc = report_violations(code, err)) {
        return rc;
    }
    int axis = a.axis == "x" || a.axis == "0" ? 0 : (a.axis == "y" || a.axis == "1" ? 1 : -1);
    if (axis < 0) {
        throw UsageError("axis must be x or y");
    }
    const Layout &layout = code.require_layout();
    size_t diameter = generator_diameter(code);
    StripPartition partition = make_strips(layout, axis, a.width, a.force_periodic);
    StripVerdict v;
    try {
        v = strip_lemma_analysis(code, partition);
    } catch (const Error &e) {
        if (e.code() == ErrorCode::kStripsTooNarrow) {
            err << "generator diameter " << diameter << '\n';
        }
        throw;
    }
    out << "generator diameter " << v.generator_diameter << ", " << partition.strips.size() << " strips along "
        << (axis == 0 ? "x" : "y") << " (min width " << v.min_strip_width << ")\n";
    if (v.even) {
        out << "case (i): even logical in strip " << v.even->strip << ": " << list(v.even->logical) << '\n';
    }
    if (v.odd) {
        out << "case (ii): odd logicals in strips " << v.odd->first_strip << " and " << v.odd->second_strip << '\n';
        out << "  strip " << v.odd->first_strip << ": " << list(v.odd->first) << '\n';
        out << "  strip " << v.odd->second_strip << ": " << list(v.odd->second) << '\n';
    }
    return 0;
}

struct ScaleArgs {
    std::vector<int> rs{3, 5};
    std::vector<int> ls{1, 2, 3};
    std::optional<size_t> max_weight;
    size_t max_modes = 128;
    unsigned threads = 1;
    std::string out;
};

int cmd_scale(const ScaleArgs &a, std::ostream &out) {
    ScalingOptions options;
    if (a.max_weight) {
        options.max_weight = *a.max_weight;
    }
    options.max_modes = a.max_modes;
    options.threads = a.threads;
    std::vector<ScalingRow> rows = scaling_experiment(a.rs, a.ls, options);
    std::ostringstream csv;
    csv << "R,L,modes,d,l_even,min_odd_weight\n";
    for (const auto &r : rows) {
        csv << r.r << ',' << r.l << ',' << r.modes << ',';
        if (r.skipped) {
            csv << "skipped,skipped,skipped\n";
            continue;
        }
        csv << (r.d ? std::to_string(*r.d) : "exhausted") << ',';
        csv << (r.l_even ? (r.l_even_exact ? "" : "<=") + std::to_string(*r.l_even) : "none") << ',';
        csv << (r.min_odd_weight ? std::to_string(*r.min_odd_weight) : "exhausted") << '\n';
    }
    if (a.out.empty()) {
        out << csv.str();
    } else {
        write_file(a.out, csv.str());
        out << rows.size() << " rows -> " << a.out << '\n';
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Construct, transform and analyze Majorana fermion codes and qubit stabilizer codes"};
    app.name("majcodes");
    app.require_subcommand(1);
    uint64_t seed = 0;
    app.add_option("--seed", seed, "Seed for randomized internals (none are currently randomized)");

    BuildArgs build;
    auto *b = app.add_subcommand("build", "Write a catalog code to a file");
    b->add_option("name", build.name, "kitaev-chain | four-mode | steane | steane-majorana | hex-torus | color-cylinder")
        ->required();
    b->add_option("--n", build.n, "Number of fermions (kitaev-chain)");
    b->add_option("--Lx", build.lx, "Hexagon columns / 3 (hex-torus)");
    b->add_option("--Ly", build.ly, "Hexagon rows / 2 (hex-torus)");
    b->add_option("--R", build.r, "Boundary length, odd (color-cylinder)");
    b->add_option("--L", build.l, "Number of layers (color-cylinder)");
    b->add_option("--out", build.out, "Output file (.mfc or .stab); stdout when omitted");
    b->add_option("--surface", build.surface, "Also write the surface graph as JSON (color-cylinder)");

    AnalyzeArgs analyze_args;
    auto *an = app.add_subcommand("analyze", "Report k, k_odd, distance and l_even");
    an->add_option("--input", analyze_args.input, "Code file (.mfc or .stab)")->required();
    an->add_option("--max-weight", analyze_args.max_weight,
                   "Search bound (default: full search up to 20 modes, else 6)");
    an->add_option("--threads", analyze_args.threads, "Worker threads for the distance search");
    an->add_flag("--json", analyze_args.json, "Emit JSON");
    an->add_flag("--sorted", analyze_args.sorted, "Sort JSON keys (always on)");
    an->add_flag("--connected", analyze_args.connected, "Check connectivity of minimum-weight logicals");
    an->add_option("--seed", analyze_args.seed, "Seed for randomized internals");

    MapArgs map_args;
    auto *mp = app.add_subcommand("map", "Apply a code transformation");
    mp->add_option("kind", map_args.kind, "qubit-to-majorana | double | jordan-wigner | product")->required();
    mp->add_option("--input", map_args.input, "Input code file")->required();
    mp->add_option("--second", map_args.second, "Second Majorana code (product)");
    mp->add_option("--spacer", map_args.spacer, "Number of paired idle mode pairs between blocks (product)");
    mp->add_option("--out", map_args.out, "Output file; stdout when omitted");
    mp->add_option("--max-weight", map_args.max_weight, "Search bound for the printed distances");

    CleanArgs clean_args;
    auto *cl = app.add_subcommand("clean", "Decide whether a region is cleanable");
    cl->add_option("--input", clean_args.input, "Majorana code file (.mfc)")->required();
    cl->add_option("--region", clean_args.region, "Mode list '0,1,2' or 'rect x0 y0 x1 y1'")->required();

    StripsArgs strips_args;
    auto *st = app.add_subcommand("strips", "Search strips for even logicals or odd pairs");
    st->add_option("--input", strips_args.input, "Majorana code file with positions")->required();
    st->add_option("--axis", strips_args.axis, "x or y");
    st->add_option("--width", strips_args.width, "Strip width in layout units")->required();
    st->add_flag("--force-periodic", strips_args.force_periodic, "Allow cutting a periodic axis");

    ScaleArgs scale_args;
    auto *sc = app.add_subcommand("scale", "Cylinder color-code scaling table as CSV");
    sc->add_option("--R", scale_args.rs, "Odd boundary lengths")->delimiter(',');
    sc->add_option("--L", scale_args.ls, "Layer counts")->delimiter(',');
    sc->add_option("--max-weight", scale_args.max_weight, "Distance search bound");
    sc->add_option("--max-modes", scale_args.max_modes, "Skip instances with more modes");
    sc->add_option("--threads", scale_args.threads, "Worker threads for the distance search");
    sc->add_option("--out", scale_args.out, "CSV file; stdout when omitted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (b->parsed()) {
            return cmd_build(build, out, err);
        }
        if (an->parsed()) {
            return cmd_analyze(analyze_args, out, err);
        }
        if (mp->parsed()) {
            return cmd_map(map_args, out, err);
        }
        if (cl->parsed()) {
            return cmd_clean(clean_args, out, err);
        }
        if (st->parsed()) {
            return cmd_strips(strips_args, out, err);
        }
        if (sc->parsed()) {
            return cmd_scale(scale_args, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return 2;
}

}  // namespace majcodes::cli
