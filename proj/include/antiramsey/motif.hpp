#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "antiramsey/core.hpp"

namespace antiramsey {

enum class MotifKind { LinearPath, LoosePath, BergePath, LinearCycle, LooseCycle, BergeCycle, Matching };

inline bool is_cycle(MotifKind k) {
    return k == MotifKind::LinearCycle || k == MotifKind::LooseCycle || k == MotifKind::BergeCycle;
}
inline bool is_berge(MotifKind k) { return k == MotifKind::BergePath || k == MotifKind::BergeCycle; }

inline const char* motif_kind_name(MotifKind k) {
    switch (k) {
        case MotifKind::LinearPath: return "linear-path";
        case MotifKind::LoosePath: return "loose-path";
        case MotifKind::BergePath: return "berge-path";
        case MotifKind::LinearCycle: return "linear-cycle";
        case MotifKind::LooseCycle: return "loose-cycle";
        case MotifKind::BergeCycle: return "berge-cycle";
        case MotifKind::Matching: return "matching";
    }
    return "?";
}

// k counts edges throughout. For s=2 a linear path of length k is the graph
// path on k+1 vertices; the classical P_k notation counts vertices instead.
struct MotifSpec {
    MotifKind kind;
    int k;

    MotifSpec(MotifKind kind_, int k_) : kind(kind_), k(k_) {
        if (k < 1) throw invalid_input("motif length k must be >= 1");
        if (is_cycle(kind) && k < 3) throw invalid_input("cycles need k >= 3");
    }

    // Berge motifs need k+1 (path) or k (cycle) distinct defining vertices.
    void check_host(const HostGraph& h) const {
        if (kind == MotifKind::BergePath && k + 1 > h.n)
            throw invalid_input("Berge path of length " + std::to_string(k) + " needs " + std::to_string(k + 1) +
                                " defining vertices, host has n=" + std::to_string(h.n));
        if (kind == MotifKind::BergeCycle && k > h.n)
            throw invalid_input("Berge cycle of length " + std::to_string(k) + " needs " + std::to_string(k) +
                                " defining vertices, host has n=" + std::to_string(h.n));
    }
};

// An ordered copy of a motif. defining_vertices is used by Berge kinds only:
// length k+1 for a path (v_i, v_{i+1} in e_i), k for a cycle (cyclic).
// colors is filled when the witness certifies a rainbow copy.
struct Witness {
    std::vector<Edge> edges;
    std::vector<int> defining_vertices;
    std::vector<int> colors;
};

// Structural check of every clause of the motif definition, plus pairwise
// distinct colors when a coloring is supplied. Berge edges may contain
// defining vertices other than their own pair; the definition does not forbid
// that and neither do we.
inline bool verify_witness(const HostGraph& host, const Witness& w, const MotifSpec& m,
                           const Coloring* coloring = nullptr) {
    const int k = m.k;
    if (static_cast<int>(w.edges.size()) != k)
        throw invalid_input("witness has " + std::to_string(w.edges.size()) + " edges, motif expects " +
                            std::to_string(k));
    for (const Edge& e : w.edges) check_edge(host, e);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (w.edges[i] == w.edges[j]) return false;

    auto inter = [&](int i, int j) { return intersection_size(w.edges[i], w.edges[j]); };

    switch (m.kind) {
        case MotifKind::Matching:
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (inter(i, j) != 0) return false;
            break;
        case MotifKind::LinearPath:
        case MotifKind::LoosePath: {
            bool linear = m.kind == MotifKind::LinearPath;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    int c = inter(i, j);
                    if (j == i + 1) {
                        if (linear ? c != 1 : c < 1) return false;
                    } else if (c != 0) {
                        return false;
                    }
                }
            break;
        }
        case MotifKind::LinearCycle:
        case MotifKind::LooseCycle: {
            bool linear = m.kind == MotifKind::LinearCycle;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    int c = inter(i, j);
                    bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
                    if (consecutive) {
                        if (linear ? c != 1 : c < 1) return false;
                    } else if (c != 0) {
                        return false;
                    }
                }
            break;
        }
        case MotifKind::BergePath:
        case MotifKind::BergeCycle: {
            bool cyc = m.kind == MotifKind::BergeCycle;
            const auto& dv = w.defining_vertices;
            if (static_cast<int>(dv.size()) != (cyc ? k : k + 1))
                throw invalid_input("Berge witness needs " + std::to_string(cyc ? k : k + 1) +
                                    " defining vertices, got " + std::to_string(dv.size()));
            for (int x : dv)
                if (x < 0 || x >= host.n) throw invalid_input("defining vertex out of range");
            for (size_t i = 0; i < dv.size(); ++i)
                for (size_t j = i + 1; j < dv.size(); ++j)
                    if (dv[i] == dv[j]) return false;
            for (int i = 0; i < k; ++i) {
                int a = dv[i];
                int b = dv[(i + 1) % dv.size()];
                const auto& ev = w.edges[i].v;
                if (!std::binary_search(ev.begin(), ev.end(), a)) return false;
                if (!std::binary_search(ev.begin(), ev.end(), b)) return false;
            }
            break;
        }
    }

    if (coloring) {
        std::vector<int> cols;
        for (const Edge& e : w.edges) cols.push_back(coloring->color_of(e));
        for (size_t i = 0; i < cols.size(); ++i)
            for (size_t j = i + 1; j < cols.size(); ++j)
                if (cols[i] == cols[j]) return false;
    }
    return true;
}

// cross vertex: lies in >= 2 edges of the witness; free: in exactly 1
enum class VertexClass { Cross, Free };

inline std::map<int, VertexClass> classify_vertices(const Witness& w) {
    std::map<int, int> deg;
    for (const Edge& e : w.edges)
        for (int x : e.v) ++deg[x];
    std::map<int, VertexClass> out;
    for (auto [v, d] : deg) out[v] = d >= 2 ? VertexClass::Cross : VertexClass::Free;
    return out;
}

namespace detail {

// Shared backtracking engine over a fixed, rank-sorted candidate pool.
// Optional per-edge colors enforce the rainbow rule (at most one edge per
// color class in a partial witness). `active` masks the pool, `forced`
// requires a specific pool edge to appear in any reported witness: that is
// what makes the solver's incremental checks ("copies through the newest
// edge") cheap. Candidates are scanned in ascending rank order at every
// level, so the first witness found is deterministic.
struct MotifSearch {
    const HostGraph* host = nullptr;
    std::vector<Edge> edges;
    std::vector<Bits> masks;
    std::vector<std::vector<int>> inc;  // vertex -> pool indices, ascending

    void init(const HostGraph& h, std::vector<Edge> pool) {
        host = &h;
        edges = std::move(pool);
        std::sort(edges.begin(), edges.end());
        masks.clear();
        masks.reserve(edges.size());
        inc.assign(h.n, {});
        for (size_t i = 0; i < edges.size(); ++i) {
            check_edge(h, edges[i]);
            masks.push_back(edges[i].bits(h.n));
            for (int v : edges[i].v) inc[v].push_back(static_cast<int>(i));
        }
        for (size_t i = 0; i + 1 < edges.size(); ++i)
            if (edges[i] == edges[i + 1]) throw invalid_input("duplicate edge in search pool");
    }

    struct Query {
        MotifSpec spec{MotifKind::LinearPath, 1};
        const int* colors = nullptr;  // per pool index; null = uncolored search
        int num_colors = 0;
        const char* active = nullptr;  // per pool index; null = all active
        int forced = -1;
        uint64_t* nodes = nullptr;
        uint64_t node_limit = UINT64_MAX;
    };

    std::optional<Witness> find(const Query& q) {
        q.spec.check_host(*host);
        Run r(*this, q);
        return r.go();
    }

private:
    struct Run {
        MotifSearch& S;
        const Query& q;
        const int k;
        const MotifKind kind;
        const bool colored;
        std::vector<int> chosen;
        std::vector<char> edge_used;
        std::vector<char> color_used;
        std::vector<char> mark_a, mark_b;  // seq_feasible scratch
        std::vector<int> marked_a, marked_b;
        Bits used_union;
        uint64_t local_nodes = 0;
        bool out_of_budget = false;
        std::optional<Witness> found;

        Run(MotifSearch& s, const Query& qq)
            : S(s),
              q(qq),
              k(qq.spec.k),
              kind(qq.spec.kind),
              colored(qq.colors != nullptr),
              edge_used(s.edges.size(), 0),
              color_used(qq.num_colors, 0),
              mark_a(qq.num_colors, 0),
              mark_b(qq.num_colors, 0),
              used_union(s.host->n) {}

        ~Run() {
            if (q.nodes) *q.nodes += local_nodes;
        }

        bool usable(int i) const {
            if (q.active && !q.active[i]) return false;
            if (edge_used[i]) return false;
            if (colored && color_used[q.colors[i]]) return false;
            return true;
        }

        bool tick() {
            ++local_nodes;
            if (q.nodes && *q.nodes + local_nodes > q.node_limit) {
                out_of_budget = true;
                return false;
            }
            return true;
        }

        std::optional<Witness> go() {
            if (is_berge(kind)) {
                berge_dfs();
            } else {
                build_capacity_sets();
                seq_dfs();
            }
            if (out_of_budget) throw resource_limit("motif search exceeded node budget");
            return found;
        }

        // ---- linear/loose paths & cycles, matchings -------------------

        bool seq_place_ok(int i) const {
            const Bits& em = S.masks[i];
            const int d = static_cast<int>(chosen.size());
            if (kind == MotifKind::Matching) return !em.intersects(used_union);
            if (d == 0) return true;
            const bool linear = (kind == MotifKind::LinearPath || kind == MotifKind::LinearCycle);
            const Bits& prev = S.masks[chosen[d - 1]];
            const bool closing = is_cycle(kind) && d == k - 1;
            // forbidden region: every chosen edge except prev (and except the
            // first edge when closing a cycle)
            for (int j = 0; j < d - 1; ++j) {
                if (closing && j == 0) continue;
                if (em.intersects(S.masks[chosen[j]])) return false;
            }
            int ip = em.intersection_count(prev);
            if (linear ? ip != 1 : ip < 1) return false;
            if (closing) {
                int ic = em.intersection_count(S.masks[chosen[0]]);
                if (linear ? ic != 1 : ic < 1) return false;
            }
            return true;
        }

        // Distinct unused color classes (distinct edges when uncolored) with a
        // usable edge avoiding `forbid`, counted up to `cap`.
        int avail_colors(const Bits& forbid, int cap) {
            if (cap <= 0) return 0;
            int have = 0;
            if (colored) {
                for (size_t i = 0; i < S.edges.size(); ++i) {
                    if (!usable(static_cast<int>(i))) continue;
                    if (S.masks[i].intersects(forbid)) continue;
                    int c = q.colors[i];
                    if (mark_a[c]) continue;
                    mark_a[c] = 1;
                    marked_a.push_back(c);
                    if (++have >= cap) break;
                }
                for (int c : marked_a) mark_a[c] = 0;
                marked_a.clear();
            } else {
                for (size_t i = 0; i < S.edges.size(); ++i) {
                    if (!usable(static_cast<int>(i))) continue;
                    if (S.masks[i].intersects(forbid)) continue;
                    if (++have >= cap) break;
                }
            }
            return have;
        }

        // Greedy chain of vertex sets whose removal starves the most color
        // classes, computed once per query from the root pool. Used by the
        // capacity bound below.
        std::vector<std::vector<int>> cap_verts;
        std::vector<Bits> cap_masks;

        void build_capacity_sets() {
            if (!colored || is_berge(kind)) return;
            const int n = S.host->n;
            Bits T(n);
            std::vector<int> tv;
            int best_prev = q.num_colors + 1;
            for (int step = 0; step < 3; ++step) {
                int bestv = -1, bestcnt = best_prev;
                for (int v = 0; v < n; ++v) {
                    if (T.test(v)) continue;
                    Bits f = T;
                    f.set(v);
                    // root count: every pool edge, every color still unused
                    int cnt = 0;
                    for (size_t i = 0; i < S.edges.size(); ++i) {
                        if (q.active && !q.active[i]) continue;
                        if (S.masks[i].intersects(f)) continue;
                        int c = q.colors[i];
                        if (mark_a[c]) continue;
                        mark_a[c] = 1;
                        marked_a.push_back(c);
                        if (++cnt >= bestcnt) break;
                    }
                    for (int c : marked_a) mark_a[c] = 0;
                    marked_a.clear();
                    if (cnt < bestcnt) {
                        bestcnt = cnt;
                        bestv = v;
                    }
                }
                if (bestv < 0) break;  // no vertex improves the count
                T.set(bestv);
                tv.push_back(bestv);
                cap_verts.push_back(tv);
                cap_masks.push_back(T);
                best_prev = bestcnt;
                if (bestcnt == 0) break;
            }
        }

        // Lookahead over the r edges still missing. Necessary conditions:
        //   - a fresh-vertex budget (each extension consumes new vertices:
        //     exactly s-1 for linear kinds, at least 1 for loose kinds, s for
        //     matchings; closing a cycle saves one);
        //   - r distinct unused color classes on edges avoiding the
        //     closed-off region; all but the immediate successor must also
        //     avoid the last edge, and in a cycle all but the closing edge
        //     must avoid the first;
        //   - a vertex-capacity bound: a vertex of a path/cycle lies in at
        //     most 2 witness edges (1 for matchings), so for any vertex set T
        //     at least r - sum(cap) remaining edges avoid T entirely and need
        //     that many distinct color classes away from T.
        bool seq_feasible(int r) {
            if (r <= 0) return true;
            {
                int fresh = S.host->n - used_union.count();
                int need = 0;
                const int s = S.host->s;
                switch (kind) {
                    case MotifKind::LinearPath: need = r * (s - 1); break;
                    case MotifKind::LinearCycle: need = r * (s - 1) - 1; break;
                    case MotifKind::LoosePath: need = r; break;
                    case MotifKind::LooseCycle: need = r - 1; break;
                    case MotifKind::Matching: need = r * s; break;
                    default: break;
                }
                if (fresh < need) return false;
            }
            const bool cyc = is_cycle(kind);
            const bool has_last = kind != MotifKind::Matching;
            const bool first_is_last = chosen.size() == 1;
            Bits closedoff = used_union;
            const Bits* lastm = nullptr;
            const Bits* firstm = nullptr;
            if (has_last) {
                lastm = &S.masks[chosen.back()];
                closedoff.andnot_with(*lastm);
                if (cyc) {
                    firstm = &S.masks[chosen[0]];
                    closedoff.andnot_with(*firstm);
                }
            }
            if (avail_colors(closedoff, r) < r) return false;
            if (has_last) {
                // only the successor may touch the last edge (plus, when the
                // first edge IS the last, the closing edge of a cycle)
                int thr = (cyc && first_is_last) ? r - 2 : r - 1;
                if (thr > 0) {
                    Bits f = closedoff;
                    f.or_with(*lastm);
                    if (avail_colors(f, thr) < thr) return false;
                    if (cyc && !first_is_last && r - 2 > 0) {
                        f.or_with(*firstm);
                        if (avail_colors(f, r - 2) < r - 2) return false;
                    }
                }
                // Hall check on the successor/closing pair of a cycle: the
                // successor avoids the first edge, the closing edge avoids
                // the last, and they carry distinct colors, so two distinct
                // unused classes must have edges avoiding closedoff plus one
                // of first/last.
                if (cyc && !first_is_last && r >= 2) {
                    int have = 0;
                    if (colored) {
                        for (size_t i = 0; i < S.edges.size(); ++i) {
                            if (!usable(static_cast<int>(i))) continue;
                            const Bits& em = S.masks[i];
                            if (em.intersects(closedoff)) continue;
                            if (em.intersects(*firstm) && em.intersects(*lastm)) continue;
                            int c = q.colors[i];
                            if (mark_a[c]) continue;
                            mark_a[c] = 1;
                            marked_a.push_back(c);
                            if (++have >= 2) break;
                        }
                        for (int c : marked_a) mark_a[c] = 0;
                        marked_a.clear();
                    } else {
                        for (size_t i = 0; i < S.edges.size(); ++i) {
                            if (!usable(static_cast<int>(i))) continue;
                            const Bits& em = S.masks[i];
                            if (em.intersects(closedoff)) continue;
                            if (em.intersects(*firstm) && em.intersects(*lastm)) continue;
                            if (++have >= 2) break;
                        }
                    }
                    if (have < 2) return false;
                }
            }
            // a vertex lies in at most 2 edges of any path, or of any cycle
            // with k >= 4 (three pairwise adjacent edges only happen in a
            // 3-cycle); matchings allow 1
            const int maxdeg = kind == MotifKind::Matching ? 1 : (cyc && k == 3 ? 3 : 2);
            for (size_t j = 0; j < cap_masks.size(); ++j) {
                int capsum = 0;
                for (int v : cap_verts[j]) {
                    if (closedoff.test(v)) continue;
                    int deg = 0;
                    if (lastm && lastm->test(v)) ++deg;
                    if (firstm && !first_is_last && firstm->test(v)) ++deg;
                    capsum += maxdeg - deg;
                }
                int thr = r - capsum;
                if (thr <= 0) continue;
                Bits f = closedoff;
                f.or_with(cap_masks[j]);
                if (avail_colors(f, thr) < thr) return false;
            }
            return true;
        }

        bool seq_dfs() {
            const int d = static_cast<int>(chosen.size());
            if (d == k) {
                if (q.forced >= 0 && !edge_used[q.forced]) return false;
                record_seq();
                return true;
            }
            if (!tick()) return true;  // abort unwind
            auto try_edge = [&](int i) -> bool {
                if (!usable(i) || !seq_place_ok(i)) return false;
                chosen.push_back(i);
                edge_used[i] = 1;
                if (colored) color_used[q.colors[i]] = 1;
                Bits saved = used_union;
                used_union.or_with(S.masks[i]);
                bool done = false;
                if (seq_feasible(k - (d + 1))) done = seq_dfs();
                used_union = saved;
                if (colored) color_used[q.colors[i]] = 0;
                edge_used[i] = 0;
                chosen.pop_back();
                return done;
            };
            if (d == 0) {
                for (size_t i = 0; i < S.edges.size(); ++i)
                    if (try_edge(static_cast<int>(i))) return true;
            } else if (kind == MotifKind::Matching) {
                // matchings are unordered: enumerate ascending to visit each
                // edge set exactly once
                for (size_t i = static_cast<size_t>(chosen.back()) + 1; i < S.edges.size(); ++i)
                    if (try_edge(static_cast<int>(i))) return true;
            } else {
                // successors must meet the previous edge: walk its incidence
                // lists. Cycles are canonicalized with their least edge first
                // (any rotation puts it there), so later edges stay above it.
                const Edge& prev = S.edges[chosen[d - 1]];
                int last = is_cycle(kind) ? chosen[0] : -1;
                while (true) {
                    int next = INT32_MAX;
                    for (int v : prev.v) {
                        auto& lst = S.inc[v];
                        auto it = std::upper_bound(lst.begin(), lst.end(), last);
                        if (it != lst.end() && *it < next) next = *it;
                    }
                    if (next == INT32_MAX) break;
                    last = next;
                    if (try_edge(next)) return true;
                }
            }
            return false;
        }

        void record_seq() {
            Witness w;
            for (int i : chosen) w.edges.push_back(S.edges[i]);
            if (colored)
                for (int i : chosen) w.colors.push_back(q.colors[i]);
            found = std::move(w);
        }

        // ---- Berge paths & cycles -------------------------------------
        //
        // Branches over the alternating sequence e_1, v_2, e_2, v_3, ...
        // where v_{i+1} in e_i cap e_{i+1}; the end vertices (v_1, v_{k+1}
        // for paths, the closing v_1 for cycles) are settled last.

        std::vector<int> defs;  // v_2 .. v_d
        Bits def_used{0};

        bool berge_dfs() {
            def_used = Bits(S.host->n);
            return berge_rec();
        }

        bool berge_rec() {
            const int d = static_cast<int>(chosen.size());
            if (d == k) return berge_close();
            if (!tick()) return true;
            if (d == 0) {
                for (size_t i = 0; i < S.edges.size(); ++i) {
                    if (!usable(static_cast<int>(i))) continue;
                    chosen.push_back(static_cast<int>(i));
                    edge_used[i] = 1;
                    if (colored) color_used[q.colors[i]] = 1;
                    bool done = berge_rec();
                    if (colored) color_used[q.colors[i]] = 0;
                    edge_used[i] = 0;
                    chosen.pop_back();
                    if (done) return true;
                }
                return false;
            }
            // pick the shared defining vertex v_{d+1} in e_d, then e_{d+1} through it
            const Edge& prev = S.edges[chosen[d - 1]];
            for (int v : prev.v) {
                if (def_used.test(v)) continue;
                def_used.set(v);
                defs.push_back(v);
                for (int i : S.inc[v]) {
                    if (!usable(i)) continue;
                    chosen.push_back(i);
                    edge_used[i] = 1;
                    if (colored) color_used[q.colors[i]] = 1;
                    bool done = berge_rec();
                    if (colored) color_used[q.colors[i]] = 0;
                    edge_used[i] = 0;
                    chosen.pop_back();
                    if (done) return true;
                }
                defs.pop_back();
                def_used.reset(v);
            }
            return false;
        }

        bool berge_close() {
            if (q.forced >= 0 && !edge_used[q.forced]) return false;
            const Edge& first = S.edges[chosen[0]];
            const Edge& last = S.edges[chosen[k - 1]];
            if (kind == MotifKind::BergeCycle) {
                // closing vertex v_1 in e_k cap e_1, distinct from the others
                for (int v : last.v) {
                    if (def_used.test(v)) continue;
                    if (!std::binary_search(first.v.begin(), first.v.end(), v)) continue;
                    record_berge(v, -1);
                    return true;
                }
                return false;
            }
            // path ends: v_1 in e_1, v_{k+1} in e_k, fresh and distinct
            for (int a : first.v) {
                if (def_used.test(a)) continue;
                for (int b : last.v) {
                    if (b == a || def_used.test(b)) continue;
                    record_berge(a, b);
                    return true;
                }
            }
            return false;
        }

        void record_berge(int v_first, int v_last) {
            Witness w;
            for (int i : chosen) w.edges.push_back(S.edges[i]);
            w.defining_vertices.push_back(v_first);
            for (int v : defs) w.defining_vertices.push_back(v);
            if (kind == MotifKind::BergePath) w.defining_vertices.push_back(v_last);
            if (colored)
                for (int i : chosen) w.colors.push_back(q.colors[i]);
            found = std::move(w);
        }
    };
};

}  // namespace detail

// Search an uncolored edge set for a copy of the motif. The returned witness
// is the first one in the engine's canonical (ascending-rank DFS) order.
inline std::optional<Witness> find_copy(const HostGraph& host, const std::vector<Edge>& available, MotifSpec m,
                                        uint64_t* nodes = nullptr, uint64_t node_limit = UINT64_MAX) {
    detail::MotifSearch ms;
    ms.init(host, available);
    detail::MotifSearch::Query q;
    q.spec = m;
    q.nodes = nodes;
    q.node_limit = node_limit;
    return ms.find(q);
}

// Exhaustive rainbow search: absence of a result is a proof that the coloring
// has no rainbow copy of the motif.
inline std::optional<Witness> find_rainbow(const Coloring& col, MotifSpec m, uint64_t* nodes = nullptr,
                                           uint64_t node_limit = UINT64_MAX) {
    detail::MotifSearch ms;
    ms.init(col.host, all_edges(col.host));
    detail::MotifSearch::Query q;
    q.spec = m;
    q.colors = col.colors.data();  // pool is rank-sorted, aligned with colors
    q.num_colors = col.num_colors;
    q.nodes = nodes;
    q.node_limit = node_limit;
    return ms.find(q);
}

namespace detail {
// defining-vertex completion used only by the naive oracle
inline bool berge_defs_brute(const std::vector<Edge>& tup, bool cyc, size_t pos, std::vector<int>& dv,
                             std::vector<char>& used) {
    const size_t need = cyc ? tup.size() : tup.size() + 1;
    if (pos == need) return true;
    // dv[pos] must lie in every edge that the definition ties it to
    auto feasible = [&](int v) {
        if (used[v]) return false;
        auto in_edge = [&](size_t ei) {
            const auto& ev = tup[ei % tup.size()].v;
            return std::binary_search(ev.begin(), ev.end(), v);
        };
        if (cyc) {
            // v_{pos+1}: in e_pos and e_{pos-1} (cyclically)
            return in_edge(pos) && in_edge((pos + tup.size() - 1) % tup.size());
        }
        if (pos == 0) return in_edge(0);
        if (pos == tup.size()) return in_edge(pos - 1);
        return in_edge(pos) && in_edge(pos - 1);
    };
    const auto& scan = cyc || pos < tup.size() ? tup[pos % tup.size()].v : tup[pos - 1].v;
    for (int v : scan) {
        if (!feasible(v)) continue;
        used[v] = 1;
        dv.push_back(v);
        if (berge_defs_brute(tup, cyc, pos + 1, dv, used)) return true;
        dv.pop_back();
        used[v] = 0;
    }
    return false;
}
}  // namespace detail

// Reference oracle: enumerate every ordered k-tuple of distinct edges and
// check the definition clauses directly. Independent of the backtracking
// engine; guarded by an explicit enumeration budget.
inline std::optional<Witness> find_rainbow_naive(const Coloring& col, MotifSpec m,
                                                 uint64_t budget = 50'000'000ull) {
    const HostGraph& h = col.host;
    m.check_host(h);
    std::vector<Edge> edges = all_edges(h);
    const size_t mm = edges.size();
    const int k = m.k;
    if (static_cast<size_t>(k) > mm) return std::nullopt;
    Int tuples = binomial(static_cast<long long>(mm), k);
    for (int i = 2; i <= k; ++i) tuples *= i;
    if (tuples > budget)
        throw resource_limit("naive oracle would enumerate " + tuples.str() + " tuples (budget " +
                             std::to_string(budget) + ")");

    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<int> perm(k);
    while (true) {
        // cheap pre-filter: the k colors must already be pairwise distinct
        bool distinct = true;
        for (int i = 0; i < k && distinct; ++i)
            for (int j = i + 1; j < k; ++j)
                if (col.colors[idx[i]] == col.colors[idx[j]]) {
                    distinct = false;
                    break;
                }
        if (distinct) {
            for (int i = 0; i < k; ++i) perm[i] = i;
            do {
                Witness w;
                for (int p : perm) w.edges.push_back(edges[idx[p]]);
                bool ok;
                if (is_berge(m.kind)) {
                    std::vector<int> dv;
                    std::vector<char> used(h.n, 0);
                    ok = detail::berge_defs_brute(w.edges, m.kind == MotifKind::BergeCycle, 0, dv, used);
                    if (ok) w.defining_vertices = dv;
                } else {
                    ok = verify_witness(h, w, m);
                }
                if (ok) {
                    for (const Edge& e : w.edges) w.colors.push_back(col.color_of(e));
                    if (is_berge(m.kind) && !verify_witness(h, w, m, &col)) ok = false;
                    if (ok) return w;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        // next k-combination of indices
        int i = k - 1;
        while (i >= 0 && idx[i] == static_cast<int>(mm) - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return std::nullopt;
}

}  // namespace antiramsey
