#pragma once

#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "antiramsey/core.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/motif.hpp"

namespace antiramsey {

struct Budget {
    uint64_t node_limit = 200'000'000ull;
    double time_limit_s = 600.0;
    // hard caps on instance size; full partition search blows up much sooner
    // than branch-and-bound, hence the two different defaults
    size_t max_edges_partition = 16;
    size_t max_edges_turan = 120;

    void validate() const {
        if (node_limit == 0 || time_limit_s <= 0) throw invalid_input("budget limits must be positive");
    }
};

enum class SolveStatus { Proven, BudgetExceeded, Unattainable };

inline const char* solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Proven: return "proven";
        case SolveStatus::BudgetExceeded: return "budget-exceeded";
        case SolveStatus::Unattainable: return "unattainable";
    }
    return "?";
}

struct SolveResult {
    long long value = 0;
    SolveStatus status = SolveStatus::Proven;
    std::vector<Edge> extremal_edges;    // Turán witness (motif-free family)
    std::optional<Coloring> coloring;    // anti-Ramsey witness (rainbow-free, value-1 colors)
    uint64_t nodes_explored = 0;
};

// certificate check failed and here is the counterexample
struct refutation : certificate_refuted {
    Witness witness;
    refutation(const std::string& msg, Witness w) : certificate_refuted(msg), witness(std::move(w)) {}
};

namespace detail {

struct WallClock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double limit_s;
    uint64_t ticks = 0;

    explicit WallClock(double limit) : limit_s(limit) {}

    bool expired() {
        if ((++ticks & 0x3FF) != 0) return false;
        double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return el > limit_s;
    }
};

}  // namespace detail

// Exact Turán number by branch-and-bound over edges in colex order. The
// incremental copy check only looks for copies through the newly included
// edge; every copy in a final family has a last-included edge, so the checks
// along the include path cover all of them. Include-first order plus
// strictly-improving incumbents make the witness the lexicographically least
// maximum family. When k >= 2 a single edge is never a copy, so some maximum
// family contains an edge, and by vertex transitivity one contains edge
// {0..s-1}: the exclude branch at depth 0 is skipped.
inline SolveResult turan_exact(const HostGraph& h, MotifSpec m, const Budget& budget = {}) {
    budget.validate();
    m.check_host(h);
    Int mc = h.edge_count();
    if (mc > budget.max_edges_turan)
        throw resource_limit("host has " + mc.str() + " edges, turan cap is " +
                             std::to_string(budget.max_edges_turan));
    const int me = static_cast<int>(mc);

    detail::MotifSearch ms;
    ms.init(h, all_edges(h));
    std::vector<char> active(me, 0);
    uint64_t nodes = 0;
    detail::WallClock clock(budget.time_limit_s);
    bool out_of_budget = false;

    auto creates_copy = [&](int i) {
        active[i] = 1;
        detail::MotifSearch::Query q;
        q.spec = m;
        q.active = active.data();
        q.forced = i;
        q.nodes = &nodes;
        q.node_limit = budget.node_limit;
        auto w = ms.find(q);
        active[i] = 0;
        return w.has_value();
    };

    int best = -1;
    std::vector<int> cur, best_set;

    auto dfs = [&](auto&& self, int i) -> void {
        if (out_of_budget) return;
        if (best >= 0 && static_cast<int>(cur.size()) + (me - i) <= best) return;
        if (i == me) {
            best = static_cast<int>(cur.size());
            best_set = cur;
            return;
        }
        if (++nodes > budget.node_limit || clock.expired()) {
            out_of_budget = true;
            return;
        }
        if (!creates_copy(i)) {
            active[i] = 1;
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
            active[i] = 0;
        }
        if (out_of_budget) return;
        if (i == 0 && m.k >= 2) return;  // symmetry: force-include edge 0
        self(self, i + 1);
    };

    try {
        dfs(dfs, 0);
    } catch (const resource_limit&) {
        out_of_budget = true;
    }

    SolveResult r;
    r.nodes_explored = nodes;
    r.status = out_of_budget ? SolveStatus::BudgetExceeded : SolveStatus::Proven;
    r.value = best < 0 ? 0 : best;
    for (int i : best_set) r.extremal_edges.push_back(ms.edges[i]);
    if (r.status == SolveStatus::Proven) {
        // independent re-verification of the witness
        if (find_copy(h, r.extremal_edges, m))
            throw certificate_refuted("internal error: turan witness contains a copy");
    }
    return r;
}

// Exact anti-Ramsey number: 1 + the maximum number of colors of a
// rainbow-free surjective coloring. Colors are assigned edge-by-edge in rank
// order under the restricted-growth-string canonical form (color j appears
// only after 0..j-1), which kills color-permutation symmetry exactly. A
// partial assignment is pruned as soon as the newest edge completes a rainbow
// copy; each remaining edge can add at most one new color, giving the bound.
inline SolveResult ar_exact(const HostGraph& h, MotifSpec m, const Budget& budget = {}) {
    budget.validate();
    m.check_host(h);
    Int mc = h.edge_count();
    if (mc > budget.max_edges_partition)
        throw resource_limit("host has " + mc.str() + " edges, partition cap is " +
                             std::to_string(budget.max_edges_partition));
    const int me = static_cast<int>(mc);

    detail::MotifSearch ms;
    ms.init(h, all_edges(h));
    uint64_t nodes = 0;

    {
        detail::MotifSearch::Query q0;
        q0.spec = m;
        q0.nodes = &nodes;
        q0.node_limit = budget.node_limit;
        if (!ms.find(q0)) {
            SolveResult r;
            r.status = SolveStatus::Unattainable;
            r.nodes_explored = nodes;
            return r;
        }
    }

    std::vector<int> colors(me, -1);
    std::vector<char> active(me, 0);
    int best = 0;
    std::vector<int> best_colors;
    detail::WallClock clock(budget.time_limit_s);
    bool out_of_budget = false;

    auto rainbow_through = [&](int i, int cmax) {
        detail::MotifSearch::Query q;
        q.spec = m;
        q.colors = colors.data();
        q.num_colors = cmax;
        q.active = active.data();
        q.forced = i;
        q.nodes = &nodes;
        q.node_limit = budget.node_limit;
        return ms.find(q).has_value();
    };

    auto dfs = [&](auto&& self, int i, int cmax) -> void {
        if (out_of_budget) return;
        if (cmax + (me - i) <= best) return;
        if (i == me) {
            best = cmax;
            best_colors = colors;
            return;
        }
        if (++nodes > budget.node_limit || clock.expired()) {
            out_of_budget = true;
            return;
        }
        for (int c = 0; c <= cmax; ++c) {
            colors[i] = c;
            active[i] = 1;
            int ncols = cmax + (c == cmax ? 1 : 0);
            if (!rainbow_through(i, ncols)) self(self, i + 1, ncols);
            active[i] = 0;
            colors[i] = -1;
            if (out_of_budget) return;
        }
    };

    try {
        dfs(dfs, 0, 0);
    } catch (const resource_limit&) {
        out_of_budget = true;
    }

    SolveResult r;
    r.nodes_explored = nodes;
    r.status = out_of_budget ? SolveStatus::BudgetExceeded : SolveStatus::Proven;
    r.value = best + 1;
    if (best > 0) {
        r.coloring.emplace(h, best_colors, best);
        if (r.status == SolveStatus::Proven) {
            // full re-scan of the extremal coloring, not just incremental checks
            if (auto w = find_rainbow(*r.coloring, m))
                throw refutation("internal error: extremal coloring has a rainbow copy", *w);
        }
    }
    return r;
}

// Certify ar > c for the coloring's color count c by exhaustively proving
// rainbow-freeness. A rainbow copy refutes the certificate and is attached.
inline long long ar_lower_certificate(const Coloring& col, MotifSpec m, uint64_t node_limit = UINT64_MAX) {
    uint64_t nodes = 0;
    if (auto w = find_rainbow(col, m, &nodes, node_limit))
        throw refutation("coloring with " + std::to_string(col.num_colors) +
                             " colors contains a rainbow copy; certificate refuted",
                         *w);
    return col.num_colors;
}

// Fraction of uniformly random surjective c-colorings containing a rainbow
// copy. Rejection sampling keeps the distribution exactly uniform; the c = m
// corner (every color exactly once) is a uniform random permutation instead,
// where rejection would almost never terminate. Randomness uses mt19937_64
// with explicit rejection for bounded draws, so results are identical across
// platforms for a fixed seed.
inline double rainbow_probability(const HostGraph& h, MotifSpec m, int c, int trials, uint64_t seed) {
    if (c < 1 || trials < 1) throw invalid_input("need c >= 1 and trials >= 1");
    m.check_host(h);
    Int mc = h.edge_count();
    if (c > mc) throw invalid_input("c = " + std::to_string(c) + " exceeds edge count " + mc.str());
    if (mc > 5'000'000) throw resource_limit("host too large for simulation");
    const size_t me = static_cast<size_t>(mc);

    detail::MotifSearch ms;
    ms.init(h, all_edges(h));
    std::mt19937_64 rng(seed);
    auto bounded = [&](uint64_t n) {
        uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do x = rng();
        while (x >= lim);
        return x % n;
    };

    std::vector<int> cols(me);
    std::vector<char> seen(c);
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        if (static_cast<size_t>(c) == me) {
            std::iota(cols.begin(), cols.end(), 0);
            for (size_t i = me - 1; i > 0; --i)
                std::swap(cols[i], cols[bounded(i + 1)]);
        } else {
            while (true) {
                std::fill(seen.begin(), seen.end(), 0);
                for (size_t i = 0; i < me; ++i) {
                    cols[i] = static_cast<int>(bounded(c));
                    seen[cols[i]] = 1;
                }
                if (std::all_of(seen.begin(), seen.end(), [](char x) { return x != 0; })) break;
            }
        }
        detail::MotifSearch::Query q;
        q.spec = m;
        q.colors = cols.data();
        q.num_colors = c;
        if (ms.find(q)) ++hits;
    }
    return static_cast<double>(hits) / trials;
}

}  // namespace antiramsey
