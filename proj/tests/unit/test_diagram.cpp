#include "doctest.h"

#include "bos/complex.hpp"
#include "bos/diagram.hpp"
#include "bos/fixtures.hpp"
#include "bos/io.hpp"

using namespace bos;

namespace {

const LinkDiagram& knot(const std::string& name) {
    static auto all = basic_knots();
    for (const auto& k : all)
        if (k.name == name) return k.diagram;
    throw std::runtime_error("no knot " + name);
}

CohomologyReport shifted(const LinkDiagram& d) {
    return shifted_report(cohomology(build_complex(black_graph(d))), negative_crossing_count(d));
}

} // namespace

TEST_CASE("pd parse and serialize") {
    auto d = parse_diagram("# right trefoil\nPD[X[1,5,2,4], X[3,1,4,6]\n   X[5,3,6,2]]");
    CHECK(d.crossings.size() == 3);
    CHECK(serialize_diagram(d) == "PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]");
    CHECK(parse_diagram(serialize_diagram(d)) == d);
    CHECK(parse_diagram("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]") == d);
    for (const auto& k : basic_knots()) CHECK(parse_diagram(serialize_diagram(k.diagram)) == k.diagram);
}

TEST_CASE("pd parse errors carry line and column") {
    try {
        parse_diagram("PD[X[1,5,2,4],\n  X[3,1,4]]");
        FAIL("no error");
    } catch (const PdParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 3);
    }
    try {
        parse_diagram("PD[X[1,5,2,4], Y[1]]");
        FAIL("no error");
    } catch (const PdParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 16);
    }
    CHECK_THROWS_AS(parse_diagram("PD[X[1,5,2,4]"), PdParseError);
    CHECK_THROWS_AS(parse_diagram("PD[X[0,1,1,2]]"), PdParseError);
}

TEST_CASE("pd validation") {
    // arc 4 three times
    CHECK_THROWS_AS(parse_diagram("X[1,4,2,4] X[3,4,1,2]"), DiagramError);
    // arc 2 leaves both crossings as the outgoing under-arc
    CHECK_THROWS_AS(parse_diagram("X[1,3,2,4] X[3,2,4,1]"), DiagramError);
    CHECK_THROWS_AS(parse_diagram("Loop[1] Loop[1]"), DiagramError);
    // all quadruples fine individually but the surface is a torus
    CHECK_THROWS_AS(parse_diagram("X[1,3,2,4] X[2,4,1,3]"), DiagramError);
}

TEST_CASE("crossing signs") {
    CHECK(negative_crossing_count(knot("trefoil_right")) == 0);
    CHECK(negative_crossing_count(knot("trefoil_left")) == 3);
    CHECK(negative_crossing_count(knot("figure_eight")) == 2);
    CHECK(negative_crossing_count(knot("unknot")) == 0);
}

TEST_CASE("black graphs of the basic diagrams") {
    auto u = black_graph(knot("unknot"));
    CHECK(u.num_vertices() == 1);
    CHECK(u.num_edges() == 0);
    auto r = black_graph(knot("trefoil_right"));
    CHECK(r.num_edges() == 3);
    auto split = black_graph(knot("unlink2"));
    CHECK(split.num_vertices() == 2);
    CHECK_FALSE(split.connected());
    auto other = black_graph(knot("trefoil_right"), {.outer_black = true});
    CHECK(other.num_vertices() + r.num_vertices() == 5); // the two checkerboard graphs are dual
    for (int e = 0; e < 3; ++e) CHECK(other.edge(e).height != r.edge(e).height);
}

TEST_CASE("goeritz determinants") {
    for (const auto& k : basic_knots()) {
        CHECK_MESSAGE(goeritz_det(k.diagram) == k.det, k.name);
        CHECK_MESSAGE(goeritz_det(k.diagram, true) == k.det, k.name);
        int tr = euler_trace(build_complex(black_graph(k.diagram)));
        CHECK_MESSAGE(std::abs(tr) == k.det, k.name);
    }
}

TEST_CASE("small knot cohomology") {
    CHECK(shifted(knot("unknot")).ranks == std::map<int, int>{{0, 1}});
    auto r = shifted(knot("trefoil_right"));
    CHECK(r.total_rank() == 3);
    auto l = shifted(knot("trefoil_left"));
    CHECK(l.total_rank() == 3);
    // mirror images sit at opposite heights
    CHECK(r.occupied().front() == -l.occupied().front());
    auto f = shifted(knot("figure_eight"));
    CHECK(f.ranks.at(0) == 5);
    CHECK(shifted(knot("unlink2")).total_rank() == 0);
}

TEST_CASE("R1 moves leave the shifted cohomology alone") {
    for (const char* name : {"unknot", "trefoil_right", "trefoil_left", "figure_eight"}) {
        const auto& d = knot(name);
        auto base = shifted(d);
        int arc = d.crossings.empty() ? d.loops[0] : d.crossings[0].arcs[1];
        for (Sign s : {Sign::positive, Sign::negative})
            for (bool left : {false, true}) {
                auto k = add_kink(d, arc, s, left);
                CHECK(negative_crossing_count(k) == negative_crossing_count(d) + (s == Sign::negative));
                auto r = shifted(k);
                CHECK_MESSAGE(r.ranks == base.ranks, name);
            }
    }
}

TEST_CASE("medial diagram round trip") {
    for (const auto& name : {"D33", "D330", "D36", "E3", "E4"}) {
        auto g = graph_fixture(name);
        auto d = diagram_from_black_graph(g);
        validate(d);
        CHECK(d.crossings.size() == size_t(g.num_edges()));
        CHECK_MESSAGE(isomorphic_maps(g, black_graph(d), true), name);
    }
    for (uint64_t s = 0; s < 60; ++s) {
        auto g = random_plane_graph(s, 1 + int(s % 8));
        auto d = diagram_from_black_graph(g);
        CHECK(isomorphic_maps(g, black_graph(d), true));
        int tr = euler_trace(build_complex(g));
        CHECK(goeritz_det(d) == std::abs(tr));
    }
}

TEST_CASE("diagram fixture files") {
    for (const auto& k : basic_knots()) {
        auto text = read_file(std::string(BOS_DATA_DIR) + "/fixtures/" + k.name + ".pd");
        CHECK(parse_diagram(text) == k.diagram);
    }
    CHECK_THROWS_AS(parse_diagram(read_file(std::string(BOS_DATA_DIR) + "/fixtures/bad.pd")), PdParseError);
}
