#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "antiramsey/core.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/formulas.hpp"
#include "antiramsey/motif.hpp"
#include "antiramsey/solver.hpp"

namespace antiramsey {

// ---- arc v1 ----------------------------------------------------------------
//
//   line 1: arc v1
//   line 2: n=<int> s=<int> c=<int>
//   then one line per edge: ascending vertices, " : ", color id.
//
// The writer emits edges in rank order, so read(write(c)) is byte-identical.

inline void write_coloring(const Coloring& col, std::ostream& os) {
    os << "arc v1\n";
    os << "n=" << col.host.n << " s=" << col.host.s << " c=" << col.num_colors << "\n";
    size_t r = 0;
    for_each_edge(col.host, [&](const Edge& e) {
        for (int i = 0; i < col.host.s; ++i) {
            if (i) os << ' ';
            os << e.v[i];
        }
        os << " : " << col.colors[r++] << "\n";
    });
}

inline void write_coloring(const Coloring& col, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw invalid_input("cannot open " + path + " for writing");
    write_coloring(col, f);
}

inline Coloring read_coloring(std::istream& is, const std::string& name = "<stream>") {
    auto fail = [&](int line, const std::string& msg) -> void {
        throw invalid_input(name + ":" + std::to_string(line) + ": " + msg);
    };
    std::string line;
    int lineno = 1;
    if (!std::getline(is, line) || line != "arc v1") fail(1, "expected header 'arc v1'");
    ++lineno;
    if (!std::getline(is, line)) fail(lineno, "missing dimension line");
    int n = -1, s = -1, c = -1;
    {
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok) {
            int* dst = nullptr;
            if (tok.rfind("n=", 0) == 0) dst = &n;
            else if (tok.rfind("s=", 0) == 0) dst = &s;
            else if (tok.rfind("c=", 0) == 0) dst = &c;
            if (!dst) fail(lineno, "unexpected token '" + tok + "'");
            try {
                size_t pos;
                *dst = std::stoi(tok.substr(2), &pos);
                if (pos != tok.size() - 2) throw std::invalid_argument("");
            } catch (const std::exception&) {
                fail(lineno, "bad integer in '" + tok + "'");
            }
        }
    }
    if (n < 0 || s < 0 || c < 0) fail(lineno, "dimension line must set n=, s=, c=");
    HostGraph h(n, s);
    Int mc = h.edge_count();
    if (mc > 5'000'000) fail(lineno, "edge count " + mc.str() + " too large to materialize");
    const size_t me = static_cast<size_t>(mc);
    std::vector<int> colors(me, -1);
    size_t filled = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        size_t sep = line.find(" : ");
        if (sep == std::string::npos) fail(lineno, "expected '<vertices> : <color>'");
        std::istringstream vs(line.substr(0, sep));
        std::vector<int> verts;
        int x;
        while (vs >> x) verts.push_back(x);
        if (!vs.eof()) fail(lineno, "bad vertex list");
        if (static_cast<int>(verts.size()) != s) fail(lineno, "expected " + std::to_string(s) + " vertices");
        for (size_t i = 0; i + 1 < verts.size(); ++i)
            if (verts[i] >= verts[i + 1]) fail(lineno, "vertices must be strictly ascending");
        int color = -1;
        try {
            size_t pos;
            std::string cstr = line.substr(sep + 3);
            color = std::stoi(cstr, &pos);
            if (pos != cstr.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            fail(lineno, "bad color id");
        }
        if (color < 0 || color >= c) fail(lineno, "color " + std::to_string(color) + " outside [0, " + std::to_string(c) + ")");
        Edge e(verts);
        if (e.v.back() >= n) fail(lineno, "vertex out of range for n=" + std::to_string(n));
        size_t r = static_cast<size_t>(edge_rank(h, e));
        if (colors[r] != -1) fail(lineno, "duplicate edge");
        colors[r] = color;
        ++filled;
    }
    if (filled != me)
        throw invalid_input(name + ": " + std::to_string(filled) + " edges listed, host has " + std::to_string(me));
    // surjectivity is enforced by the Coloring constructor
    try {
        return Coloring(h, std::move(colors), c);
    } catch (const invalid_input& e) {
        throw invalid_input(name + ": " + e.what());
    }
}

inline Coloring read_coloring(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw invalid_input("cannot open " + path);
    return read_coloring(f, path);
}

// ---- JSON ------------------------------------------------------------------

inline nlohmann::json edge_to_json(const Edge& e) { return nlohmann::json(e.v); }

inline nlohmann::json witness_to_json(const Witness& w, const MotifSpec& m) {
    nlohmann::json j;
    j["kind"] = motif_kind_name(m.kind);
    j["k"] = m.k;
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : w.edges) edges.push_back(edge_to_json(e));
    j["edges"] = std::move(edges);
    j["defining_vertices"] = w.defining_vertices;
    j["colors"] = w.colors;
    return j;
}

inline nlohmann::json bound_report_to_json(const BoundReport& r) {
    nlohmann::json j;
    j["motif"] = {{"kind", motif_kind_name(r.motif.kind)}, {"k", r.motif.k}};
    j["n"] = r.n;
    j["s"] = r.s;
    // exact rational as a string; integral values drop the denominator
    std::ostringstream v;
    v << r.value;
    j["value"] = v.str();
    j["bound_type"] = bound_type_name(r.bound_type);
    j["regime"] = r.regime_note;
    return j;
}

inline nlohmann::json solve_result_to_json(const SolveResult& r, const MotifSpec& m, const Budget& budget) {
    nlohmann::json j;
    j["status"] = solve_status_name(r.status);
    j["nodes_explored"] = r.nodes_explored;
    j["budget"] = {{"node_limit", budget.node_limit}, {"time_limit_s", budget.time_limit_s}};
    if (r.status == SolveStatus::Unattainable) return j;
    j["value"] = r.value;
    if (!r.extremal_edges.empty()) {
        nlohmann::json edges = nlohmann::json::array();
        for (const Edge& e : r.extremal_edges) edges.push_back(edge_to_json(e));
        j["extremal_edges"] = std::move(edges);
    }
    if (r.coloring) {
        j["coloring"] = {{"n", r.coloring->host.n},
                         {"s", r.coloring->host.s},
                         {"num_colors", r.coloring->num_colors},
                         {"colors", r.coloring->colors}};
    }
    (void)m;
    return j;
}

}  // namespace antiramsey
