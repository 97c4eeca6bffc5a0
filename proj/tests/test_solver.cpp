#include <doctest.h>

#include "antiramsey/formulas.hpp"
#include "antiramsey/solver.hpp"

using namespace antiramsey;

TEST_CASE("turan_exact spec examples") {
    {
        SolveResult r = turan_exact(HostGraph(6, 3), MotifSpec(MotifKind::Matching, 2));
        CHECK(r.status == SolveStatus::Proven);
        CHECK(r.value == 10);
        CHECK(Rat(r.value) == erdos_matching_value(6, 3, 2).value);
    }
    {
        SolveResult r = turan_exact(HostGraph(5, 2), MotifSpec(MotifKind::LinearPath, 2));
        CHECK(r.status == SolveStatus::Proven);
        CHECK(r.value == 2);  // path-free graphs are matchings; K_5 has a 2-matching max
    }
}

TEST_CASE("turan witness is motif-free and maximal in size") {
    SolveResult r = turan_exact(HostGraph(6, 3), MotifSpec(MotifKind::LoosePath, 3));
    CHECK(r.status == SolveStatus::Proven);
    CHECK(static_cast<long long>(r.extremal_edges.size()) == r.value);
    CHECK_FALSE(find_copy(HostGraph(6, 3), r.extremal_edges, MotifSpec(MotifKind::LoosePath, 3)).has_value());
}

TEST_CASE("turan k=1 is zero") {
    SolveResult r = turan_exact(HostGraph(5, 3), MotifSpec(MotifKind::LinearPath, 1));
    CHECK(r.value == 0);
    CHECK(r.extremal_edges.empty());
}

TEST_CASE("turan monotonicity in n and k") {
    long long prev = -1;
    for (int n = 4; n <= 6; ++n) {
        SolveResult r = turan_exact(HostGraph(n, 3), MotifSpec(MotifKind::LoosePath, 2));
        CHECK(r.value >= prev);
        prev = r.value;
    }
    SolveResult k2 = turan_exact(HostGraph(6, 3), MotifSpec(MotifKind::LoosePath, 2));
    SolveResult k3 = turan_exact(HostGraph(6, 3), MotifSpec(MotifKind::LoosePath, 3));
    CHECK(k2.value <= k3.value);
}

TEST_CASE("turan edge cap and budget") {
    CHECK_THROWS_AS(turan_exact(HostGraph(12, 3), MotifSpec(MotifKind::LinearPath, 2)), resource_limit);
    Budget tiny;
    tiny.node_limit = 5;
    SolveResult r = turan_exact(HostGraph(6, 3), MotifSpec(MotifKind::LinearPath, 2), tiny);
    CHECK(r.status == SolveStatus::BudgetExceeded);
}

TEST_CASE("ar_exact spec examples") {
    {
        SolveResult r = ar_exact(HostGraph(5, 3), MotifSpec(MotifKind::LinearPath, 2));
        CHECK(r.status == SolveStatus::Proven);
        CHECK(r.value == 2);
    }
    {
        SolveResult r = ar_exact(HostGraph(5, 3), MotifSpec(MotifKind::LoosePath, 2));
        CHECK(r.status == SolveStatus::Proven);
        CHECK(r.value == 2);
    }
    {
        SolveResult r = ar_exact(HostGraph(4, 3), MotifSpec(MotifKind::LinearPath, 2));
        CHECK(r.status == SolveStatus::Unattainable);
    }
}

TEST_CASE("ar witness is extremal and rainbow-free") {
    SolveResult r = ar_exact(HostGraph(5, 3), MotifSpec(MotifKind::LoosePath, 2));
    REQUIRE(r.coloring.has_value());
    CHECK(r.coloring->num_colors == r.value - 1);
    CHECK_FALSE(find_rainbow(*r.coloring, MotifSpec(MotifKind::LoosePath, 2)).has_value());
}

TEST_CASE("ar determinism across repeated runs") {
    SolveResult a = ar_exact(HostGraph(5, 3), MotifSpec(MotifKind::LoosePath, 2));
    SolveResult b = ar_exact(HostGraph(5, 3), MotifSpec(MotifKind::LoosePath, 2));
    CHECK(a.value == b.value);
    CHECK(a.nodes_explored == b.nodes_explored);
    REQUIRE(a.coloring.has_value());
    REQUIRE(b.coloring.has_value());
    CHECK(a.coloring->colors == b.coloring->colors);
}

TEST_CASE("ar edge cap") {
    CHECK_THROWS_AS(ar_exact(HostGraph(6, 3), MotifSpec(MotifKind::LinearPath, 2)), resource_limit);
    Budget wide;
    wide.max_edges_partition = 20;
    // with the cap lifted the 20-edge host solves
    SolveResult r = ar_exact(HostGraph(6, 3), MotifSpec(MotifKind::LoosePath, 2), wide);
    CHECK(r.status == SolveStatus::Proven);
    CHECK(r.value == 2);
}

TEST_CASE("ar_lower_certificate") {
    HostGraph h(5, 3);
    size_t m = static_cast<size_t>(h.edge_count());
    {
        Coloring mono(h, std::vector<int>(m, 0), 1);
        CHECK(ar_lower_certificate(mono, MotifSpec(MotifKind::LinearPath, 2)) == 1);
    }
    {
        std::vector<int> cols(m);
        for (size_t i = 0; i < m; ++i) cols[i] = static_cast<int>(i);
        Coloring rb(h, cols, static_cast<int>(m));
        CHECK_THROWS_AS(ar_lower_certificate(rb, MotifSpec(MotifKind::LinearPath, 2)), refutation);
        try {
            ar_lower_certificate(rb, MotifSpec(MotifKind::LinearPath, 2));
        } catch (const refutation& e) {
            CHECK(verify_witness(h, e.witness, MotifSpec(MotifKind::LinearPath, 2), &rb));
        }
    }
}

TEST_CASE("certificate strictly below the exact value") {
    HostGraph h(5, 3);
    size_t m = static_cast<size_t>(h.edge_count());
    Coloring mono(h, std::vector<int>(m, 0), 1);
    long long cert = ar_lower_certificate(mono, MotifSpec(MotifKind::LinearPath, 2));
    SolveResult r = ar_exact(h, MotifSpec(MotifKind::LinearPath, 2));
    CHECK(cert < r.value);
}

TEST_CASE("rainbow_probability") {
    HostGraph h(5, 3);
    MotifSpec m(MotifKind::LinearPath, 2);
    CHECK(rainbow_probability(h, m, 1, 50, 1) == 0.0);
    CHECK(rainbow_probability(h, m, 10, 50, 1) == 1.0);  // all-distinct permutation colorings
    double p1 = rainbow_probability(h, m, 3, 200, 42);
    double p2 = rainbow_probability(h, m, 3, 200, 42);
    CHECK(p1 == p2);
    CHECK(p1 >= 0.0);
    CHECK(p1 <= 1.0);
    CHECK_THROWS_AS(rainbow_probability(h, m, 11, 10, 1), invalid_input);
    CHECK_THROWS_AS(rainbow_probability(h, m, 0, 10, 1), invalid_input);
}
