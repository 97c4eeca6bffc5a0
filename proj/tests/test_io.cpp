#include <doctest.h>

#include <sstream>

#include "antiramsey/constructions.hpp"
#include "antiramsey/io.hpp"

using namespace antiramsey;

TEST_CASE("arc v1 minimal file") {
    std::string text =
        "arc v1\n"
        "n=4 s=3 c=1\n"
        "0 1 2 : 0\n"
        "0 1 3 : 0\n"
        "0 2 3 : 0\n"
        "1 2 3 : 0\n";
    std::istringstream in(text);
    Coloring c = read_coloring(in, "mini");
    CHECK(c.host.n == 4);
    CHECK(c.num_colors == 1);
    std::ostringstream out;
    write_coloring(c, out);
    CHECK(out.str() == text);
}

TEST_CASE("round trip on a construction coloring") {
    HostGraph h(10, 3);
    Coloring c = rainbow_plus_one(h, build_family(h, {FamilyKind::Star, 1, 0, 0}));
    std::ostringstream out;
    write_coloring(c, out);
    std::istringstream in(out.str());
    Coloring back = read_coloring(in);
    CHECK(back.colors == c.colors);
    CHECK(back.num_colors == c.num_colors);
    std::ostringstream out2;
    write_coloring(back, out2);
    CHECK(out2.str() == out.str());
}

TEST_CASE("arc v1 error reporting with line numbers") {
    {
        std::istringstream in("arc v2\n");
        CHECK_THROWS_WITH_AS(read_coloring(in, "f"), doctest::Contains("f:1"), invalid_input);
    }
    {
        // duplicate edge, reported at its line
        std::istringstream in(
            "arc v1\n"
            "n=4 s=3 c=1\n"
            "0 1 2 : 0\n"
            "0 1 2 : 0\n");
        CHECK_THROWS_WITH_AS(read_coloring(in, "f"), doctest::Contains("f:4"), invalid_input);
    }
    {
        // missing edges
        std::istringstream in(
            "arc v1\n"
            "n=4 s=3 c=1\n"
            "0 1 2 : 0\n");
        CHECK_THROWS_AS(read_coloring(in, "f"), invalid_input);
    }
    {
        // non-dense colors: color 1 never used
        std::istringstream in(
            "arc v1\n"
            "n=4 s=3 c=2\n"
            "0 1 2 : 0\n"
            "0 1 3 : 0\n"
            "0 2 3 : 0\n"
            "1 2 3 : 0\n");
        CHECK_THROWS_AS(read_coloring(in, "f"), invalid_input);
    }
    {
        // color id out of range
        std::istringstream in(
            "arc v1\n"
            "n=4 s=3 c=1\n"
            "0 1 2 : 1\n");
        CHECK_THROWS_WITH_AS(read_coloring(in, "f"), doctest::Contains("f:3"), invalid_input);
    }
    {
        // unsorted vertex list
        std::istringstream in(
            "arc v1\n"
            "n=4 s=3 c=1\n"
            "2 1 0 : 0\n");
        CHECK_THROWS_WITH_AS(read_coloring(in, "f"), doctest::Contains("f:3"), invalid_input);
    }
}

TEST_CASE("bound report JSON") {
    BoundReport r = ar_value(MotifSpec(MotifKind::LinearPath, 4), 10, 3);
    auto j = bound_report_to_json(r);
    CHECK(j["value"] == "38");
    CHECK(j["bound_type"] == "asymptotic-exact");
    CHECK(j["motif"]["kind"] == "linear-path");

    auto [lo, hi] = berge_ar_bounds(MotifKind::BergePath, 70, 3, 7);
    CHECK(bound_report_to_json(hi)["value"] == "703/3");
}

TEST_CASE("witness JSON shape") {
    Witness w;
    w.edges = {Edge({0, 1, 2}), Edge({2, 3, 4})};
    w.colors = {0, 1};
    auto j = witness_to_json(w, MotifSpec(MotifKind::LinearPath, 2));
    CHECK(j["kind"] == "linear-path");
    CHECK(j["k"] == 2);
    CHECK(j["edges"][1][0] == 2);
    CHECK(j["colors"].size() == 2);
}
