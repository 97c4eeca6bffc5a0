// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] (optional) is the path to the arc CLI binary, used by the
// determinism criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "antiramsey/constructions.hpp"
#include "antiramsey/core.hpp"
#include "antiramsey/formulas.hpp"
#include "antiramsey/io.hpp"
#include "antiramsey/motif.hpp"
#include "antiramsey/solver.hpp"

using namespace antiramsey;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int num, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << num << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Coloring seeded_random_coloring(const HostGraph& h, int c, std::mt19937_64& rng) {
    size_t m = static_cast<size_t>(h.edge_count());
    std::vector<int> cols(m);
    while (true) {
        std::vector<char> seen(c, 0);
        for (size_t i = 0; i < m; ++i) {
            cols[i] = static_cast<int>(rng() % c);
            seen[cols[i]] = 1;
        }
        bool ok = true;
        for (char x : seen) ok = ok && x;
        if (ok) break;
    }
    return Coloring(h, cols, c);
}

// ---- criterion 1: exact short-path theorems at n = 3s-4 ------------------

void criterion1() {
    bool ok = true;
    std::ostringstream detail;
    for (MotifKind kind : {MotifKind::LinearPath, MotifKind::LoosePath}) {
        auto t0 = Clock::now();
        SolveResult r = ar_exact(HostGraph(5, 3), MotifSpec(kind, 2));
        double el = seconds_since(t0);
        if (r.status != SolveStatus::Proven || r.value != 2 || el >= 10.0) ok = false;
        detail << motif_kind_name(kind) << "=" << r.value << " in " << el << "s ";
    }
    report(1, "ar_exact short paths at n=3s-4 equal 2", ok, detail.str());
}

// ---- criterion 2: even-k construction grid --------------------------------

void criterion2() {
    bool ok = true;
    std::ostringstream detail;
    auto t0 = Clock::now();
    for (int n : {8, 10, 12})
        for (int s : {3, 4})
            for (int k : {4, 6}) {
                int t = k / 2;
                HostGraph h(n, s);
                Coloring c = rainbow_plus_one(h, build_family(h, {FamilyKind::Star, t - 1, 0, 0}));
                Int want = binomial(n, s) - binomial(n - t + 1, s) + 1;
                if (Int(c.num_colors) != want) {
                    ok = false;
                    detail << "colors(" << n << "," << s << "," << k << ") ";
                    continue;
                }
                for (MotifKind kind :
                     {MotifKind::LinearPath, MotifKind::LoosePath, MotifKind::LinearCycle, MotifKind::LooseCycle}) {
                    if (find_rainbow(c, MotifSpec(kind, k))) {
                        ok = false;
                        detail << "rainbow " << motif_kind_name(kind) << "(" << n << "," << s << "," << k << ") ";
                    }
                }
            }
    double el = seconds_since(t0);
    if (el >= 300.0) ok = false;
    detail << el << "s";
    report(2, "even-k star colorings: exact color counts, no rainbow in 4 kinds", ok, detail.str());
}

// ---- criterion 3: odd-case constructions ----------------------------------

void criterion3() {
    bool ok = true;
    std::ostringstream detail;
    {
        // k = 2t+1 = 5, base StarPlusBook(t-1) with t = 2
        HostGraph h(12, 4);
        Coloring c = rainbow_plus_one(h, build_family(h, {FamilyKind::StarPlusBook, 1, 0, 0}));
        Int want = binomial(12, 4) - binomial(11, 4) + binomial(9, 2) + 1;
        if (Int(c.num_colors) != want) {
            ok = false;
            detail << "book colors=" << c.num_colors << " want " << want << " ";
        }
        if (find_rainbow(c, MotifSpec(MotifKind::LinearPath, 5))) {
            ok = false;
            detail << "rainbow P5 ";
        }
    }
    {
        HostGraph h(12, 4);
        Coloring c = rainbow_plus_one(h, build_family(h, {FamilyKind::PairBook, 0, 0, 0}));
        if (c.num_colors != 46) {
            ok = false;
            detail << "pair-book colors=" << c.num_colors << " ";
        }
        if (find_rainbow(c, MotifSpec(MotifKind::LinearPath, 3))) {
            ok = false;
            detail << "rainbow P3 ";
        }
    }
    report(3, "odd-k constructions: 202-color book and 46-color pair book, rainbow-free", ok, detail.str());
}

// ---- criterion 4: berge block colorings ------------------------------------

void criterion4() {
    bool ok = true;
    std::ostringstream detail;
    auto t0 = Clock::now();
    struct Case {
        int n, s, k;
    };
    for (Case c : {Case{21, 3, 7}, Case{12, 3, 4}, Case{16, 3, 9}}) {
        HostGraph h(c.n, c.s);
        Coloring col = berge_block_coloring(h, c.k);
        if (find_rainbow(col, MotifSpec(MotifKind::BergePath, c.k))) {
            ok = false;
            detail << "rainbow(" << c.n << "," << c.k << ") ";
        }
        auto [lo, hi] = berge_ar_bounds(MotifKind::BergePath, c.n, c.s, c.k);
        Int floor_lo = numerator(lo.value) / denominator(lo.value);
        if (Int(col.num_colors) < floor_lo) {
            ok = false;
            detail << "colors(" << c.n << "," << c.k << ")=" << col.num_colors << "<" << floor_lo << " ";
        }
    }
    double el = seconds_since(t0);
    if (el >= 120.0) ok = false;
    detail << el << "s";
    report(4, "berge block colorings rainbow-free and above the lower bound", ok, detail.str());
}

// ---- criterion 5: Turan desk scale ------------------------------------------

void criterion5() {
    bool ok = true;
    std::ostringstream detail;
    auto t0 = Clock::now();
    {
        SolveResult r = turan_exact(HostGraph(8, 3), MotifSpec(MotifKind::LinearPath, 2));
        if (r.status != SolveStatus::Proven || r.value != 8) {
            ok = false;
            detail << "ex(8,3,P2)=" << r.value << " ";
        }
    }
    {
        SolveResult r = turan_exact(HostGraph(6, 3), MotifSpec(MotifKind::Matching, 2));
        bool match = r.status == SolveStatus::Proven && r.value == 10 &&
                     Rat(r.value) == erdos_matching_value(6, 3, 2).value;
        if (!match) {
            ok = false;
            detail << "ex(6,3,M2)=" << r.value << " ";
        }
    }
    for (int n = 4; n <= 8; ++n)
        for (int k = 2; k <= 4; ++k) {
            SolveResult r = turan_exact(HostGraph(n, 2), MotifSpec(MotifKind::LinearPath, k));
            if (r.status != SolveStatus::Proven || Rat(r.value) > Rat((k - 1) * n, 2)) {
                ok = false;
                detail << "graph(" << n << "," << k << ")=" << r.value << " ";
            }
        }
    double el = seconds_since(t0);
    if (el >= 600.0) ok = false;
    detail << el << "s";
    report(5, "exact Turan values at desk scale", ok, detail.str());
}

// ---- criterion 6: oracle equivalence ----------------------------------------

void criterion6() {
    bool ok = true;
    std::ostringstream detail;
    struct Pick {
        MotifKind kind;
        int n, k;
    };
    // instance sizes chosen so the naive tuple budget holds at k
    std::vector<Pick> picks = {{MotifKind::LinearPath, 6, 4},  {MotifKind::LoosePath, 6, 4},
                               {MotifKind::BergePath, 6, 4},   {MotifKind::LinearCycle, 7, 3},
                               {MotifKind::LooseCycle, 7, 3},  {MotifKind::BergeCycle, 7, 3},
                               {MotifKind::Matching, 8, 2}};
    std::mt19937_64 rng(20250823);
    for (const Pick& p : picks) {
        HostGraph h(p.n, 3);
        MotifSpec m(p.kind, p.k);
        int disagreements = 0;
        for (int trial = 0; trial < 200; ++trial) {
            int c = 2 + static_cast<int>(rng() % 7);
            Coloring col = seeded_random_coloring(h, c, rng);
            bool fast = find_rainbow(col, m).has_value();
            bool naive = find_rainbow_naive(col, m).has_value();
            if (fast != naive) ++disagreements;
        }
        if (disagreements) {
            ok = false;
            detail << motif_kind_name(p.kind) << ":" << disagreements << " ";
        }
    }
    report(6, "find_rainbow agrees with the naive oracle on 200 colorings per kind", ok, detail.str());
}

// ---- criterion 7: sandwich property -----------------------------------------

void criterion7() {
    bool ok = true;
    int checked = 0;
    std::ostringstream detail;
    Budget b;
    b.max_edges_partition = 20;
    for (int s : {2, 3})
        for (int n = s + 1; n <= 6; ++n)
            for (MotifKind kind : {MotifKind::LinearPath, MotifKind::LoosePath, MotifKind::BergePath,
                                   MotifKind::Matching}) {
                MotifSpec m(kind, 2);
                SolveResult ar, ex;
                try {
                    ar = ar_exact(HostGraph(n, s), m, b);
                    ex = turan_exact(HostGraph(n, s), m, b);
                } catch (const resource_limit&) {
                    continue;
                }
                if (ar.status != SolveStatus::Proven || ex.status != SolveStatus::Proven) continue;
                ++checked;
                if (!sandwich_check(Int(ar.value), Int(ex.value))) {
                    ok = false;
                    detail << "(" << n << "," << s << "," << motif_kind_name(kind) << ") ar=" << ar.value
                           << " ex=" << ex.value << " ";
                }
            }
    if (checked == 0) ok = false;
    detail << checked << " pairs";
    report(7, "2 <= ar <= ex+1 on every proven pair", ok, detail.str());
}

// ---- criterion 8: cherry pair procedure --------------------------------------

void criterion8() {
    bool ok = true;
    std::ostringstream detail;
    HostGraph h(12, 3);
    std::vector<Edge> gstar;
    for (int a = 0; a < 12; ++a)
        for (int b = a + 1; b < 12; ++b) gstar.push_back(Edge({a, b}));

    std::vector<std::vector<int>> wsets;
    for (int sz = 0; sz <= 4; ++sz) {
        std::vector<int> idx(sz);
        for (int i = 0; i < sz; ++i) idx[i] = i;
        while (true) {
            wsets.push_back(idx);
            int i = sz - 1;
            while (i >= 0 && idx[i] == 12 - sz + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (sz == 0) continue;  // single empty set already recorded
    }

    int violations = 0, runs = 0;
    for (const auto& wv : wsets)
        for (int t = 1; t <= 4; ++t) {
            VertexSet W(wv);
            CherryPairs cp = find_cherry_pairs(h, gstar, W, t);
            int quota = std::max(t - 1, 1);
            // three fresh vertices per pair must fit outside W
            bool feasible = 3 * quota <= 12 - static_cast<int>(wv.size());
            if (feasible && !cp.complete) ++violations;
            Bits seen(12);
            for (auto& [a, bb] : cp.pairs) {
                if (intersection_size(a, bb) != 1) ++violations;  // (i)
                Bits u = a.bits(12);
                u.or_with(bb.bits(12));
                if (u.intersects(seen)) ++violations;  // (ii)
                seen.or_with(u);
                for (int x : a.v)
                    if (W.contains(x)) ++violations;  // (iii)
                for (int x : bb.v)
                    if (W.contains(x)) ++violations;
            }
            ++runs;
        }
    if (violations) ok = false;
    detail << runs << " runs, " << violations << " violations";
    report(8, "cherry pairs meet quota and properties (i)(ii)(iii)", ok, detail.str());
}

// ---- criterion 9: formula consistency at large n ------------------------------

void criterion9() {
    bool ok = true;
    std::ostringstream detail;
    std::mt19937_64 rng(9);
    int violations = 0;
    for (int trial = 0; trial < 100; ++trial) {
        long long n = 50 + static_cast<long long>(rng() % 999950ull);
        int s = 4 + static_cast<int>(rng() % 4);
        int t = 4 + static_cast<int>(rng() % 4);
        int keven = 2 * t;  // >= 8, inside every even-case regime
        Rat lin = ar_value(MotifSpec(MotifKind::LinearPath, keven), n, s).value;
        Rat loo = ar_value(MotifSpec(MotifKind::LoosePath, keven), n, s).value;
        Rat lc = ar_value(MotifSpec(MotifKind::LinearCycle, keven), n, s).value;
        Rat oc = ar_value(MotifSpec(MotifKind::LooseCycle, keven), n, s).value;
        if (lin != loo || lc != lin || oc != loo) ++violations;
        // odd loose cycle matches odd loose path when both regimes hold
        int kodd = 11;
        if (s >= kodd + 3) {
            if (ar_value(MotifSpec(MotifKind::LooseCycle, kodd), n, s).value !=
                ar_value(MotifSpec(MotifKind::LoosePath, kodd), n, s).value)
                ++violations;
        }
    }
    if (violations) ok = false;
    detail << violations << " violations";
    report(9, "path/cycle formula identities on 100 big-integer triples", ok, detail.str());
}

// ---- criterion 10: determinism across --threads --------------------------------

std::string run_cmd(const std::string& cmd) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return "<popen failed>";
    char buf[4096];
    size_t nread;
    while ((nread = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, nread);
    pclose(p);
    return out;
}

void criterion10(const char* arc_path) {
    if (!arc_path) {
        report(10, "determinism across --threads", false, "arc binary path not supplied");
        return;
    }
    bool ok = true;
    std::ostringstream detail;
    std::string arc = arc_path;
    std::vector<std::string> cases = {
        " solve-ar --n 5 --s 3 --motif linear-path --k 2",
        " solve-ar --n 5 --s 3 --motif loose-path --k 2",
        " solve-turan --n 6 --s 3 --motif matching --k 2",
        " solve-turan --n 6 --s 2 --motif linear-path --k 3",
    };
    // a detect case needs a coloring file on disk
    {
        HostGraph h(8, 3);
        Coloring c = rainbow_plus_one(h, build_family(h, {FamilyKind::Star, 1, 0, 0}));
        write_coloring(c, "acceptance_detect.arc");
        cases.push_back(" detect --coloring acceptance_detect.arc --motif linear-path --k 4");
        cases.push_back(" detect --coloring acceptance_detect.arc --motif loose-path --k 2");
    }
    for (const std::string& c : cases) {
        std::string base = run_cmd(arc + c + " --threads 1");
        for (int th : {2, 8}) {
            std::string other = run_cmd(arc + c + " --threads " + std::to_string(th));
            if (other != base) {
                ok = false;
                detail << "mismatch at threads=" << th << " for" << c << " ";
            }
        }
        if (base.find("error") != std::string::npos) {
            ok = false;
            detail << "error output for" << c << " ";
        }
    }
    std::remove("acceptance_detect.arc");
    report(10, "solver and detector output byte-identical across threads 1/2/8", ok, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
    auto t0 = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10(argc > 1 ? argv[1] : nullptr);
    std::cout << (failures ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS") << " (" << seconds_since(t0) << "s total)"
              << std::endl;
    return failures ? 1 : 0;
}
