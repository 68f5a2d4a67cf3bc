#include "doctest.h"

#include "bos/complex.hpp"
#include "bos/fixtures.hpp"
#include "bos/io.hpp"

using namespace bos;

namespace {

EmbeddedBlackGraph triangle(int h) {
    // ccw rotations of a triangle u(0,0) v(1,0) w(0,1)
    std::vector<Edge> e{{"a", 0, 1, h}, {"b", 1, 2, h}, {"c", 2, 0, h}};
    return EmbeddedBlackGraph({"u", "v", "w"}, e, {{0, 5}, {2, 1}, {4, 3}}, 1, 0);
}

} // namespace

TEST_CASE("triangle faces and euler") {
    auto g = triangle(0);
    validate(g);
    CHECK(g.num_faces() == 2);
    CHECK(g.num_vars() == 3); // two vertices, one bounded face
    // the bounded face is traced ccw: a, b, c
    int inner = g.face_of(0);
    CHECK(inner != g.outer_face());
    CHECK(g.faces().walks[inner] == std::vector<int>{0, 2, 4});
}

TEST_CASE("validation rejects a non-planar rotation") {
    // K4 with a twisted rotation at one vertex has genus 1
    std::vector<Edge> e{{"a", 0, 1, 0}, {"b", 0, 2, 0}, {"c", 0, 3, 0}, {"d", 1, 2, 0}, {"f", 2, 3, 0}, {"g", 3, 1, 0}};
    std::vector<std::vector<int>> good{{0, 2, 4}, {1, 11, 6}, {3, 7, 8}, {5, 9, 10}};
    std::vector<std::vector<int>> twisted{{0, 4, 2}, {1, 11, 6}, {3, 7, 8}, {5, 9, 10}};
    int bad_planar = 0;
    for (auto rot : {good, twisted}) {
        try {
            EmbeddedBlackGraph g({"0", "1", "2", "3"}, e, rot, 0, 0);
            validate(g);
        } catch (const GraphError&) {
            ++bad_planar;
        }
    }
    CHECK(bad_planar >= 1);
    CHECK_THROWS_AS(validate(EmbeddedBlackGraph({"0"}, {{"a", 0, 0, 0}}, {{0}}, 0, 0)), GraphError);
}

TEST_CASE("wheel and E fixtures have the drawn structure") {
    auto d33 = graph_fixture("D33");
    CHECK(d33.num_vertices() == 7);
    CHECK(d33.num_edges() == 8);
    CHECK(d33.num_faces() == 3);
    CHECK(d33.vertex_ids()[d33.base()] == "hub");
    auto d330 = graph_fixture("D330");
    CHECK(d330.num_edges() == 9);
    int parallel = 0;
    for (int a = 0; a < d330.num_edges(); ++a)
        for (int b = a + 1; b < d330.num_edges(); ++b) {
            auto x = d330.edge(a), y = d330.edge(b);
            if (x.height == 1 && y.height == 1 && ((x.u == y.u && x.v == y.v) || (x.u == y.v && x.v == y.u)))
                ++parallel;
        }
    CHECK(parallel == 1);
    for (int k = 2; k <= 6; ++k) {
        auto g = e_family(k);
        validate(g);
        CHECK(g.num_edges() == 13 + k);
        CHECK(g.vertex_ids()[g.base()] == "C");
    }
    CHECK(graph_fixture("D36").num_edges() == 11);
    CHECK_THROWS_AS(graph_fixture("nope"), FixtureError);
}

TEST_CASE("delete and contract") {
    auto g = graph_fixture("D33");
    int e0 = g.find_edge("e0");
    auto del = delete_edge(g, e0), con = contract_edge(g, e0);
    CHECK(del.num_edges() == 7);
    CHECK(con.num_vertices() == 6);
    validate(del);
    validate(con);
    CHECK(tree_count(g) == tree_count(del) + tree_count(con));
}

TEST_CASE("canonical code ignores labels but not heights or base") {
    auto g = graph_fixture("D33");
    std::vector<std::string> ids = g.vertex_ids();
    std::reverse(ids.begin(), ids.end());
    auto edges = g.edges();
    for (auto& e : edges) e.id = "z" + e.id;
    EmbeddedBlackGraph relabelled(ids, edges, g.rotation(), g.outer_dart(), g.base());
    CHECK(canonical_code(relabelled) == canonical_code(g));
    CHECK(isomorphic_maps(relabelled, g, true));
    edges[0].height ^= 1;
    EmbeddedBlackGraph flipped(g.vertex_ids(), edges, g.rotation(), g.outer_dart(), g.base());
    CHECK(canonical_code(flipped) != canonical_code(g));
    CHECK(canonical_code(g.with_base(1)) != canonical_code(g));
}

TEST_CASE("graph json round trip and golden files") {
    for (const auto& name : {"D33", "D330", "D36", "D331", "D332", "D333", "E2", "E3", "E4", "E5", "E6"}) {
        auto g = graph_fixture(name);
        std::string js = graph_to_json(g);
        auto back = graph_from_json(js);
        CHECK(isomorphic_maps(g, back, true));
        CHECK(canonical_code(back) == canonical_code(g));
        CHECK(graph_to_json(back) == js);
        std::string golden = read_file(std::string(BOS_DATA_DIR) + "/fixtures/" + name + ".json");
        while (!golden.empty() && golden.back() == '\n') golden.pop_back();
        CHECK_MESSAGE(golden == js, name);
    }
}

TEST_CASE("graph json errors") {
    CHECK_THROWS_AS(graph_from_json("{"), FormatError);
    CHECK_THROWS_AS(graph_from_json(R"({"schema":"other"})"), FormatError);
    std::string js = graph_to_json(graph_fixture("D33"));
    auto bad = js;
    bad.replace(bad.find("\"height\": 1"), 11, "\"height\": 2");
    CHECK_THROWS_AS(graph_from_json(bad), FormatError);
    auto wrong_outer = js;
    auto at = wrong_outer.find("\"outer_face\"");
    auto q = wrong_outer.find(":t\"", at);
    auto q2 = wrong_outer.find(":h\"", at);
    size_t first = std::min(q, q2);
    wrong_outer[first + 1] = wrong_outer[first + 1] == 't' ? 'h' : 't';
    CHECK_THROWS(graph_from_json(wrong_outer));
}

TEST_CASE("random plane graphs are valid and seeded") {
    for (uint64_t s = 0; s < 100; ++s) {
        int m = 1 + int(s % 8);
        auto g = random_plane_graph(s, m);
        CHECK(g.num_edges() == m);
        CHECK(g.connected());
        CHECK(g.num_vertices() - g.num_edges() + g.num_faces() == 2);
        CHECK(canonical_code(g) == canonical_code(random_plane_graph(s, m)));
    }
    int loops = 0, parallel = 0;
    for (uint64_t s = 0; s < 200; ++s) {
        auto g = random_plane_graph(s, 6);
        for (int a = 0; a < g.num_edges(); ++a) {
            loops += g.edge(a).u == g.edge(a).v;
            for (int b = a + 1; b < g.num_edges(); ++b) {
                auto x = g.edge(a), y = g.edge(b);
                parallel += x.u != x.v && ((x.u == y.u && x.v == y.v) || (x.u == y.v && x.v == y.u));
            }
        }
    }
    CHECK(loops > 0);
    CHECK(parallel > 0);
}

TEST_CASE("cycle interior and orientation parity") {
    auto g = graph_fixture("D33");
    std::vector<int> rim;
    for (int e = 0; e < g.num_edges(); ++e)
        if (g.edge(e).height == 0) rim.push_back(e);
    // the rim encloses both bounded faces
    CHECK(cycle_interior(g, rim).size() == 2);
    auto o1 = cycle_orientation_parity(g, rim, rim[0], rim[2], g.edge(rim[4]).u);
    auto o2 = cycle_orientation_parity(g, rim, rim[2], rim[0], g.edge(rim[4]).u);
    CHECK(o1 != o2);
}
