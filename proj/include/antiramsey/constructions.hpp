#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "antiramsey/core.hpp"
#include "antiramsey/formulas.hpp"
#include "antiramsey/motif.hpp"

namespace antiramsey {

// The extremal families behind the Turán results, anchored at the
// lowest-indexed vertices: S = {0..t-1}, fixed pair = {t, t+1} (or {0,1} for
// the pair book), extra s-set = {t..t+s-1}. Anchoring is canonical so outputs
// are reproducible; the host is vertex-transitive, so nothing is lost.
enum class FamilyKind {
    Star,              // all edges meeting S, |S| = t
    StarPlusEdge,      // star plus one s-set disjoint from S
    StarPlusBook,      // star plus all s-sets outside S through the pair {t, t+1}
    StarPlusMatching,  // star plus `count` disjoint edges outside S
    PairBook,          // all s-sets through {0, 1}
    DisjointCliques,   // all s-sets inside consecutive blocks of block_size
};

struct FamilySpec {
    FamilyKind kind;
    int t = 0;
    int count = 0;       // StarPlusMatching
    int block_size = 0;  // DisjointCliques
};

inline const char* family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::Star: return "star";
        case FamilyKind::StarPlusEdge: return "star-plus-edge";
        case FamilyKind::StarPlusBook: return "star-plus-book";
        case FamilyKind::StarPlusMatching: return "star-plus-matching";
        case FamilyKind::PairBook: return "pair-book";
        case FamilyKind::DisjointCliques: return "disjoint-cliques";
    }
    return "?";
}

inline std::vector<Edge> build_family(const HostGraph& h, const FamilySpec& spec) {
    const int n = h.n, s = h.s;
    std::vector<Edge> out;
    auto star_of = [&](int t) {
        std::vector<int> sv(t);
        for (int i = 0; i < t; ++i) sv[i] = i;
        return edges_meeting(h, VertexSet(sv));
    };
    switch (spec.kind) {
        case FamilyKind::Star: {
            if (spec.t < 1 || spec.t > n) throw invalid_input("star needs 1 <= t <= n");
            out = star_of(spec.t);
            break;
        }
        case FamilyKind::StarPlusEdge: {
            if (spec.t < 1 || spec.t + s > n)
                throw invalid_input("star-plus-edge needs t >= 1 and t + s <= n for a disjoint s-set");
            out = star_of(spec.t);
            std::vector<int> extra(s);
            for (int i = 0; i < s; ++i) extra[i] = spec.t + i;
            out.push_back(Edge(extra));
            std::sort(out.begin(), out.end());
            break;
        }
        case FamilyKind::StarPlusBook: {
            if (s < 2) throw invalid_input("book needs s >= 2");
            if (spec.t < 1 || n - spec.t < s || spec.t + 2 > n)
                throw invalid_input("star-plus-book parameters infeasible");
            out = star_of(spec.t);
            const int a = spec.t, b = spec.t + 1;
            for_each_edge(h, [&](Edge e) {
                if (e.v.front() < spec.t) return;  // must avoid S
                const auto& v = e.v;
                if (std::binary_search(v.begin(), v.end(), a) && std::binary_search(v.begin(), v.end(), b))
                    out.push_back(std::move(e));
            });
            std::sort(out.begin(), out.end());
            break;
        }
        case FamilyKind::StarPlusMatching: {
            if (spec.t < 1 || spec.count < 0 || spec.t + spec.count * s > n)
                throw invalid_input("star-plus-matching needs t + count*s <= n");
            out = star_of(spec.t);
            for (int j = 0; j < spec.count; ++j) {
                std::vector<int> blk(s);
                for (int i = 0; i < s; ++i) blk[i] = spec.t + j * s + i;
                out.push_back(Edge(blk));
            }
            std::sort(out.begin(), out.end());
            break;
        }
        case FamilyKind::PairBook: {
            if (n < s || s < 2) throw invalid_input("pair-book parameters infeasible");
            for_each_edge(h, [&](Edge e) {
                if (e.v[0] == 0 && e.v[1] == 1) out.push_back(std::move(e));
            });
            break;
        }
        case FamilyKind::DisjointCliques: {
            const int b = spec.block_size;
            if (b < s) throw invalid_input("disjoint-cliques needs block_size >= s");
            for_each_edge(h, [&](Edge e) {
                if (e.v.front() / b == e.v.back() / b) out.push_back(std::move(e));
            });
            break;
        }
    }
    return out;
}

// Lower-bound coloring scheme: base edges rainbow (distinct colors in rank
// order), everything else one extra color.
inline Coloring rainbow_plus_one(const HostGraph& h, const std::vector<Edge>& base) {
    Int m = h.edge_count();
    if (base.empty()) throw invalid_input("rainbow-plus-one needs a nonempty base");
    if (Int(base.size()) >= m) throw invalid_input("rainbow-plus-one base leaves no remaining edges");
    const size_t msz = static_cast<size_t>(m);
    const int extra = static_cast<int>(base.size());
    std::vector<int> colors(msz, extra);
    std::vector<Edge> sorted = base;
    std::sort(sorted.begin(), sorted.end());
    int next = 0;
    for (const Edge& e : sorted) {
        size_t r = static_cast<size_t>(edge_rank(h, e));
        if (colors[r] != extra) throw invalid_input("duplicate edge in rainbow-plus-one base");
        colors[r] = next++;
    }
    return Coloring(h, std::move(colors), extra + 1);
}

// Block colorings that avoid rainbow Berge paths of length k. Blocks are
// consecutive index ranges; leftover vertices (fewer than a full block) fall
// into the single extra color class.
//
// When floor(k/2) >= s the blocks have size floor(k/2) and every edge inside
// a block is rainbow. Otherwise the blocks have size s+1 and only the
// floor(k/2)-1 colex-least edges of each block are rainbow.
inline Coloring berge_block_coloring(const HostGraph& h, int k) {
    if (k < 3) throw invalid_input("berge block coloring needs k >= 3");
    const int n = h.n, s = h.s;
    const int half = k / 2;
    const bool big_blocks = half >= s;
    const int bsz = big_blocks ? half : s + 1;
    const int nblocks = n / bsz;
    if (nblocks < 1) throw invalid_input("no full block fits: n=" + std::to_string(n) + " block=" + std::to_string(bsz));

    Int m = h.edge_count();
    std::vector<int> colors(static_cast<size_t>(m), -1);
    int next = 0;
    if (big_blocks) {
        for_each_edge(h, [&](const Edge& e) {
            if (e.v.back() / bsz == e.v.front() / bsz && e.v.back() < nblocks * bsz)
                colors[static_cast<size_t>(edge_rank(h, e))] = -2;  // rainbow, numbered below
        });
        // number block edges in rank order for a stable palette
        for (size_t r = 0; r < colors.size(); ++r)
            if (colors[r] == -2) colors[r] = next++;
    } else {
        const int quota = half - 1;
        for (int b = 0; b < nblocks; ++b) {
            // colex-least `quota` edges within block b
            std::vector<int> verts(s);
            for (int i = 0; i < s; ++i) verts[i] = b * bsz + i;
            int taken = 0;
            while (taken < quota) {
                colors[static_cast<size_t>(edge_rank(h, Edge(verts)))] = next++;
                ++taken;
                if (taken == quota) break;
                // successor within the block
                bool ok = false;
                for (int i = 0; i < s; ++i) {
                    int lim = (i + 1 < s) ? verts[i + 1] : (b + 1) * bsz;
                    if (verts[i] + 1 < lim) {
                        ++verts[i];
                        for (int j = 0; j < i; ++j) verts[j] = b * bsz + j;
                        ok = true;
                        break;
                    }
                }
                if (!ok) throw invalid_input("block too small for " + std::to_string(quota) + " edges");
            }
        }
    }
    bool any_rest = false;
    for (int& c : colors)
        if (c < 0) {
            c = next;
            any_rest = true;
        }
    if (!any_rest) throw invalid_input("berge block coloring leaves no remainder edge");
    return Coloring(h, std::move(colors), next + 1);
}

// -------- the oplus path-assembly gadget ---------------------------------

// A segment is either an edge token or a link vertex. Edge tokens of size s
// are used verbatim; tokens of size s-1 are completed by their adjacent link
// vertex (the preceding one if it is a link, else the following one).
// Consecutive (s-1)-edges form a cherry and connect through their one shared
// vertex instead of a link.
using GadgetSegment = std::variant<Edge, int>;

struct GadgetPath {
    std::vector<GadgetSegment> segments;
    Witness realized;
};

inline GadgetPath assemble_linear_path(const HostGraph& h, const std::vector<GadgetSegment>& segments) {
    if (segments.empty()) throw invalid_input("empty segment list");
    const int s = h.s;
    std::vector<Edge> path;
    for (size_t i = 0; i < segments.size(); ++i) {
        if (std::holds_alternative<int>(segments[i])) {
            int v = std::get<int>(segments[i]);
            if (v < 0 || v >= h.n) throw invalid_input("link vertex out of range at segment " + std::to_string(i));
            bool adj_partial = false;
            for (size_t j : {i - 1, i + 1}) {
                if (j >= segments.size()) continue;
                if (auto* e = std::get_if<Edge>(&segments[j]); e && e->size() == s - 1) adj_partial = true;
            }
            if (!adj_partial)
                throw invalid_input("link vertex at segment " + std::to_string(i) +
                                    " has no adjacent (s-1)-edge");
            continue;
        }
        const Edge& tok = std::get<Edge>(segments[i]);
        if (tok.v.back() >= h.n) throw invalid_input("segment " + std::to_string(i) + " vertex out of range");
        if (tok.size() == s) {
            path.push_back(tok);
        } else if (tok.size() == s - 1) {
            const int* link = nullptr;
            if (i > 0) link = std::get_if<int>(&segments[i - 1]);
            if (!link && i + 1 < segments.size()) link = std::get_if<int>(&segments[i + 1]);
            if (!link)
                throw invalid_input("(s-1)-edge at segment " + std::to_string(i) + " has no adjacent link vertex");
            std::vector<int> verts = tok.v;
            if (std::binary_search(verts.begin(), verts.end(), *link))
                throw invalid_input("link vertex " + std::to_string(*link) + " already inside segment " +
                                    std::to_string(i));
            verts.push_back(*link);
            path.push_back(Edge(verts));
        } else {
            throw invalid_input("segment " + std::to_string(i) + " has size " + std::to_string(tok.size()) +
                                ", expected s or s-1");
        }
    }
    if (path.empty()) throw invalid_input("segments produce no edges");
    // validate the linear-path invariants, naming the offending pair
    for (size_t i = 0; i < path.size(); ++i)
        for (size_t j = i + 1; j < path.size(); ++j) {
            int c = intersection_size(path[i], path[j]);
            int want = (j == i + 1) ? 1 : 0;
            if (c != want)
                throw invalid_input("edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect in " +
                                    std::to_string(c) + " vertices, expected " + std::to_string(want));
        }
    GadgetPath g;
    g.segments = segments;
    g.realized.edges = std::move(path);
    return g;
}

// -------- the cherry-pair greedy ------------------------------------------

struct CherryPairs {
    std::vector<std::pair<Edge, Edge>> pairs;
    bool complete = false;  // full quota max{t-1, 1} reached
};

// Greedy first-fit over (s-1)-edge pairs in colex order: each accepted pair
// (a, b) satisfies |a cap b| = 1, its union is disjoint from all previously
// accepted unions, and both edges avoid W.
inline CherryPairs find_cherry_pairs(const HostGraph& h, std::vector<Edge> gstar, const VertexSet& W, int t) {
    check_vertex_set(h, W);
    for (const Edge& e : gstar) {
        if (e.size() != h.s - 1)
            throw invalid_input("cherry input must be (s-1)-uniform, got an edge of size " +
                                std::to_string(e.size()));
        if (e.v.back() >= h.n) throw invalid_input("cherry edge vertex out of range");
    }
    std::sort(gstar.begin(), gstar.end());
    const int quota = std::max(t - 1, 1);
    Bits wmask(h.n);
    for (int v : W.v) wmask.set(v);
    Bits taken(h.n);

    CherryPairs out;
    std::vector<Bits> masks;
    masks.reserve(gstar.size());
    for (const Edge& e : gstar) masks.push_back(e.bits(h.n));

    for (size_t bi = 0; bi < gstar.size() && static_cast<int>(out.pairs.size()) < quota; ++bi) {
        if (masks[bi].intersects(wmask) || masks[bi].intersects(taken)) continue;
        for (size_t ai = 0; ai < bi; ++ai) {
            if (masks[ai].intersects(wmask) || masks[ai].intersects(taken)) continue;
            if (masks[ai].intersection_count(masks[bi]) != 1) continue;
            out.pairs.emplace_back(gstar[ai], gstar[bi]);
            taken.or_with(masks[ai]);
            taken.or_with(masks[bi]);
            break;
        }
    }
    out.complete = static_cast<int>(out.pairs.size()) == quota;
    return out;
}

// Counting precondition behind the greedy: with |W| = d vertices blocked and
// t-1 pairs to find, the pool must stay above the relevant 2-edge-path Turán
// threshold in uniformity s-1.
inline bool cherry_quota_feasible(const Int& gstar_size, int n, int s, int d, int t) {
    if (s < 3) throw invalid_input("cherry feasibility needs s >= 3");
    Int lhs = gstar_size - Int(d) * binomial(n - 1, s - 2) -
              Int(std::max(t - 1, 1) - 1) * Int(2 * s - 3) * binomial(n - 1, s - 2);
    Rat threshold = linear_p2_turan_threshold(n, s - 1);
    return Rat(lhs) > threshold;
}

}  // namespace antiramsey
