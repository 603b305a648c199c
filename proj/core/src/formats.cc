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


#include "majcodes/formats.h"

#include <map>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "majcodes/error.h"

namespace majcodes {

namespace {

[[noreturn]] void fail(size_t line_no, const std::string &msg) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + msg);
}

long long to_int(const std::string &tok, size_t line_no) {
    try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) {
            fail(line_no, "bad integer '" + tok + "'");
        }
        return v;
    } catch (const std::logic_error &) {
        fail(line_no, "bad integer '" + tok + "'");
    }
}

}  // namespace

MajoranaCode parse_mfc(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    std::optional<size_t> modes;
    std::vector<std::vector<size_t>> gens;
    std::map<size_t, Point> pos;
    std::array<std::optional<int>, 2> periods;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream words(line);
        std::string key;
        if (!(words >> key)) {
            continue;
        }
        std::vector<long long> args;
        std::string tok;
        std::string axis_name;
        if (key == "period") {
            words >> axis_name;
        }
        while (words >> tok) {
            args.push_back(to_int(tok, line_no));
        }
        if (key == "modes") {
            if (modes) {
                fail(line_no, "repeated 'modes' line");
            }
            if (args.size() != 1 || args[0] < 0) {
                fail(line_no, "expected 'modes <m>'");
            }
            modes = size_t(args[0]);
            continue;
        }
        if (!modes) {
            fail(line_no, "'" + key + "' before 'modes'");
        }
        if (key == "gen") {
            if (args.empty()) {
                fail(line_no, "empty generator");
            }
            std::vector<size_t> g;
            for (size_t i = 0; i < args.size(); i++) {
                if (args[i] < 0 || size_t(args[i]) >= *modes) {
                    fail(line_no, "mode " + std::to_string(args[i]) + " out of range");
                }
                if (i > 0 && args[i] <= args[i - 1]) {
                    fail(line_no, "generator modes must be strictly increasing");
                }
                g.push_back(size_t(args[i]));
            }
            gens.push_back(std::move(g));
        } else if (key == "pos") {
            if (args.size() != 3) {
                fail(line_no, "expected 'pos <mode> <x> <y>'");
            }
            if (args[0] < 0 || size_t(args[0]) >= *modes) {
                fail(line_no, "mode " + std::to_string(args[0]) + " out of range");
            }
            if (!pos.emplace(size_t(args[0]), Point{int(args[1]), int(args[2])}).second) {
                fail(line_no, "repeated position for mode " + std::to_string(args[0]));
            }
        } else if (key == "period") {
            int axis = axis_name == "x" ? 0 : (axis_name == "y" ? 1 : -1);
            if (axis < 0 || args.size() != 1 || args[0] <= 0) {
                fail(line_no, "expected 'period <x|y> <extent>'");
            }
            periods[axis] = int(args[0]);
        } else {
            fail(line_no, "unknown keyword '" + key + "'");
        }
    }
    if (!modes) {
        throw Error(ErrorCode::kParse, "missing 'modes' line");
    }
    std::optional<Layout> layout;
    if (!pos.empty()) {
        if (pos.size() != *modes) {
            throw Error(ErrorCode::kParse, "positions given for " + std::to_string(pos.size()) + " of " +
                                               std::to_string(*modes) + " modes");
        }
        std::vector<Point> pts;
        for (const auto &[_, p] : pos) {
            pts.push_back(p);
        }
        try {
            layout = Layout(std::move(pts), periods);
        } catch (const Error &e) {
            throw Error(ErrorCode::kParse, e.what());
        }
    } else if (periods[0] || periods[1]) {
        throw Error(ErrorCode::kParse, "'period' needs 'pos' lines");
    }
    return MajoranaCode::from_supports(*modes, gens, std::move(layout));
}

std::string format_mfc(const MajoranaCode &code, std::string_view comment) {
    std::ostringstream out;
    if (!comment.empty()) {
        std::istringstream lines{std::string(comment)};
        std::string l;
        while (std::getline(lines, l)) {
            out << "# " << l << '\n';
        }
    }
    out << "modes " << code.num_modes() << '\n';
    if (code.layout()) {
        const char *names[] = {"x", "y"};
        for (int axis = 0; axis < 2; axis++) {
            if (auto p = code.layout()->periods()[axis]) {
                out << "period " << names[axis] << ' ' << *p << '\n';
            }
        }
    }
    for (const auto &g : code.generators().rows()) {
        out << "gen";
        for (size_t i : g.support()) {
            out << ' ' << i;
        }
        out << '\n';
    }
    if (code.layout()) {
        for (size_t i = 0; i < code.num_modes(); i++) {
            const Point &p = code.layout()->position(i);
            out << "pos " << i << ' ' << p.x << ' ' << p.y << '\n';
        }
    }
    return out.str();
}

std::string report_to_json(const AnalysisReport &report, int indent) {
    nlohmann::json j;
    j["modes"] = report.modes;
    j["rank"] = report.rank;
    j["logical_modes"] = report.logical_modes;
    j["k"] = report.k.str();
    j["k_odd"] = report.k_odd;
    j["max_weight"] = report.max_weight;
    if (!report.distance) {
        j["distance"] = nullptr;
    } else if (report.distance->hit) {
        j["distance"] = report.distance->hit->weight;
    } else {
        j["distance"] = {{"exhausted", report.distance->searched_through}};
    }
    if (report.l_even && report.l_even->diameter) {
        j["l_even"] = *report.l_even->diameter;
        j["l_even_exact"] = report.l_even->exact;
    } else {
        j["l_even"] = nullptr;
        j["l_even_exact"] = report.l_even ? report.l_even->exact : true;
    }
    j["witnesses"] = nlohmann::json::array();
    for (const auto &w : report.witnesses) {
        j["witnesses"].push_back(w.support());
    }
    return j.dump(indent);
}

std::string surface_to_json(const SurfaceGraph &g, int indent) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto &p : g.positions) {
        j["vertices"].push_back({p.x, p.y});
    }
    j["periods"] = nlohmann::json::array();
    for (const auto &p : g.periods) {
        j["periods"].push_back(p ? nlohmann::json(*p) : nlohmann::json(nullptr));
    }
    j["edges"] = nlohmann::json::array();
    for (const auto &[u, v] : g.edges) {
        j["edges"].push_back({u, v});
    }
    j["faces"] = g.faces;
    j["boundaries"] = g.boundaries;
    return j.dump(indent);
}

SurfaceGraph surface_from_json(std::string_view text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        SurfaceGraph g;
        for (const auto &v : j.at("vertices")) {
            g.positions.push_back({v.at(0).get<int>(), v.at(1).get<int>()});
        }
        if (j.contains("periods")) {
            for (size_t axis = 0; axis < 2 && axis < j["periods"].size(); axis++) {
                if (!j["periods"][axis].is_null()) {
                    g.periods[axis] = j["periods"][axis].get<int>();
                }
            }
        }
        for (const auto &e : j.at("edges")) {
            g.edges.emplace_back(e.at(0).get<size_t>(), e.at(1).get<size_t>());
        }
        g.faces = j.at("faces").get<std::vector<std::vector<size_t>>>();
        if (j.contains("boundaries")) {
            g.boundaries = j["boundaries"].get<std::vector<std::vector<size_t>>>();
        }
        return g;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::kParse, e.what());
    }
}

}  // namespace majcodes
