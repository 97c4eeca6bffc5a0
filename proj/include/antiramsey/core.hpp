#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "antiramsey/binomial.hpp"
#include "antiramsey/bits.hpp"
#include "antiramsey/errors.hpp"

namespace antiramsey {

// Complete s-uniform hypergraph K_n^(s). Edges are identified by colex rank.
struct HostGraph {
    int n = 0;
    int s = 0;

    HostGraph(int n_, int s_) : n(n_), s(s_) {
        if (s < 2) throw invalid_input("uniformity s must be >= 2, got " + std::to_string(s));
        if (n < s) throw invalid_input("need n >= s, got n=" + std::to_string(n) + " s=" + std::to_string(s));
    }

    Int edge_count() const { return binomial(n, s); }

    bool operator==(const HostGraph& o) const { return n == o.n && s == o.s; }
};

// An s-subset of the vertex set, stored ascending. A single-word bitmask
// mirror is kept whenever all vertices fit below 64.
struct Edge {
    std::vector<int> v;
    uint64_t mask = 0;
    bool has_mask = false;

    Edge() = default;
    explicit Edge(std::vector<int> verts) : v(std::move(verts)) {
        std::sort(v.begin(), v.end());
        for (size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] == v[i + 1])
                throw invalid_input("edge has repeated vertex " + std::to_string(v[i]));
        if (v.empty()) throw invalid_input("edge must be nonempty");
        if (v.front() < 0) throw invalid_input("negative vertex index");
        if (v.back() < 64) {
            has_mask = true;
            for (int x : v) mask |= uint64_t{1} << x;
        }
    }

    int size() const { return static_cast<int>(v.size()); }

    Bits bits(int n) const {
        Bits b(n);
        for (int x : v) b.set(x);
        return b;
    }

    bool operator==(const Edge& o) const { return v == o.v; }
    bool operator!=(const Edge& o) const { return v != o.v; }
    // colex comparison: largest differing vertex decides; equals rank order
    bool operator<(const Edge& o) const {
        return std::lexicographical_compare(v.rbegin(), v.rend(), o.v.rbegin(), o.v.rend());
    }
};

// Fixed vertex set (anchors S, L, W of the constructions).
struct VertexSet {
    std::vector<int> v;

    VertexSet() = default;
    explicit VertexSet(std::vector<int> verts) : v(std::move(verts)) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        if (!v.empty() && v.front() < 0) throw invalid_input("negative vertex index in vertex set");
    }

    int size() const { return static_cast<int>(v.size()); }
    bool contains(int x) const { return std::binary_search(v.begin(), v.end(), x); }
};

inline void check_edge(const HostGraph& h, const Edge& e) {
    if (e.size() != h.s)
        throw invalid_input("edge has " + std::to_string(e.size()) + " vertices, host uniformity is " +
                            std::to_string(h.s));
    if (e.v.back() >= h.n)
        throw invalid_input("vertex " + std::to_string(e.v.back()) + " out of range for n=" + std::to_string(h.n));
}

inline void check_vertex_set(const HostGraph& h, const VertexSet& S) {
    if (!S.v.empty() && S.v.back() >= h.n)
        throw invalid_input("vertex " + std::to_string(S.v.back()) + " out of range for n=" + std::to_string(h.n));
}

// Colex rank: sum of C(v_i, i+1) over positions. Monotone in the largest
// vertex, so all edges inside a vertex prefix [0, m) occupy a rank prefix.
inline Int edge_rank(const HostGraph& h, const Edge& e) {
    check_edge(h, e);
    Int r = 0;
    for (int i = 0; i < h.s; ++i) r += binomial(e.v[i], i + 1);
    return r;
}

inline Edge edge_unrank(const HostGraph& h, Int r) {
    if (r < 0 || r >= h.edge_count())
        throw invalid_input("edge rank out of range");
    std::vector<int> verts(h.s);
    int hi = h.n - 1;
    for (int i = h.s; i >= 1; --i) {
        // largest c with C(c, i) <= r
        while (binomial(hi, i) > r) --hi;
        verts[i - 1] = hi;
        r -= binomial(hi, i);
    }
    return Edge(verts);
}

namespace detail {
// colex successor over s-subsets of [0, n)
inline bool next_colex(std::vector<int>& v, int n) {
    const int s = static_cast<int>(v.size());
    for (int i = 0; i < s; ++i) {
        int lim = (i + 1 < s) ? v[i + 1] : n;
        if (v[i] + 1 < lim) {
            ++v[i];
            for (int j = 0; j < i; ++j) v[j] = j;
            return true;
        }
    }
    return false;
}
}  // namespace detail

// Call fn(edge) for every edge of K_n^(s) in colex (rank) order.
template <class Fn>
void for_each_edge(const HostGraph& h, Fn&& fn) {
    std::vector<int> v(h.s);
    for (int i = 0; i < h.s; ++i) v[i] = i;
    do {
        fn(Edge(v));
    } while (detail::next_colex(v, h.n));
}

// Materialized edge list in rank order. Guarded: refuses hosts whose edge
// count does not fit in memory at desk scale.
inline std::vector<Edge> all_edges(const HostGraph& h, size_t cap = 5'000'000) {
    Int m = h.edge_count();
    if (m > cap) throw resource_limit("edge count " + m.str() + " exceeds materialization cap");
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(m));
    for_each_edge(h, [&](Edge e) { out.push_back(std::move(e)); });
    return out;
}

inline int intersection_size(const Edge& e, const Edge& f) {
    if (e.has_mask && f.has_mask) return std::popcount(e.mask & f.mask);
    int c = 0;
    size_t i = 0, j = 0;
    while (i < e.v.size() && j < f.v.size()) {
        if (e.v[i] == f.v[j]) ++c, ++i, ++j;
        else if (e.v[i] < f.v[j]) ++i;
        else ++j;
    }
    return c;
}

// Edges meeting S, in rank order. Count identity: C(n,s) - C(n-|S|,s).
inline std::vector<Edge> edges_meeting(const HostGraph& h, const VertexSet& S) {
    check_vertex_set(h, S);
    std::vector<Edge> out;
    for_each_edge(h, [&](Edge e) {
        for (int x : e.v)
            if (S.contains(x)) {
                out.push_back(std::move(e));
                return;
            }
    });
    return out;
}

// Total edge coloring of K_n^(s), indexed by colex rank, colors dense in [0, c).
struct Coloring {
    HostGraph host;
    std::vector<int> colors;
    int num_colors = 0;

    Coloring(HostGraph h, std::vector<int> cols, int c) : host(h), colors(std::move(cols)), num_colors(c) {
        validate();
    }

    void validate() const {
        Int m = host.edge_count();
        if (Int(colors.size()) != m)
            throw invalid_input("coloring has " + std::to_string(colors.size()) + " entries, host has " + m.str() +
                                " edges");
        if (num_colors < 1) throw invalid_input("coloring must use at least one color");
        std::vector<char> seen(num_colors, 0);
        for (int c : colors) {
            if (c < 0 || c >= num_colors)
                throw invalid_input("color id " + std::to_string(c) + " outside [0, " + std::to_string(num_colors) +
                                    ")");
            seen[c] = 1;
        }
        for (int c = 0; c < num_colors; ++c)
            if (!seen[c]) throw invalid_input("color " + std::to_string(c) + " unused; colors must be surjective");
    }

    int color_of(const Edge& e) const {
        return colors[static_cast<size_t>(edge_rank(host, e))];
    }
};

}  // namespace antiramsey
