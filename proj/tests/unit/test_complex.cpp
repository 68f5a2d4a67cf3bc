#include "doctest.h"

#include "bos/complex.hpp"
#include "bos/fixtures.hpp"

#include "oracles.hpp"

#include <set>

using namespace bos;

TEST_CASE("D33 complex shape") {
    auto c = build_complex(graph_fixture("D33"));
    CHECK(c.dim(2) == 12);
    CHECK(c.dim(4) == 9);
    CHECK(c.trees.total == 21);
    CHECK(tree_count(c.graph) == 21);
    REQUIRE(c.d.count(2));
    CHECK(c.d.at(2).rows == 9);
    CHECK(c.d.at(2).cols == 12);
    auto r = cohomology(c);
    CHECK(r.ranks.at(2) == 3);
    CHECK(r.ranks.at(4) == 0);
    CHECK(r.determinant == 3);
    CHECK(r.all_certified());
}

TEST_CASE("total height parity is constant") {
    for (uint64_t s = 0; s < 40; ++s) {
        auto g = random_plane_graph(100 + s, 1 + int(s % 8));
        auto t = spanning_trees(g);
        std::set<int> parity;
        for (const auto& [h, list] : t.by_height) parity.insert(((h % 2) + 2) % 2);
        CHECK(parity.size() <= 1);
    }
}

TEST_CASE("d squared vanishes exactly on random small graphs") {
    for (uint64_t s = 0; s < 60; ++s) {
        auto g = random_plane_graph(500 + s, 1 + int(s % 7));
        auto r = verify_d_squared(build_complex(g), 9);
        CHECK(r.exact);
        CHECK_MESSAGE(r.ok, r.describe());
    }
}

TEST_CASE("kirchhoff against enumeration") {
    for (uint64_t s = 0; s < 60; ++s) {
        auto g = random_plane_graph(900 + s, 1 + int(s % 8));
        CHECK((long long)spanning_trees(g).total == tree_count(g));
    }
    for (const auto& n : graph_fixture_names()) {
        auto g = graph_fixture(n);
        CHECK((long long)spanning_trees(g).total == tree_count(g));
    }
}

TEST_CASE("base independence") {
    for (const char* n : {"D33", "edge0", "edge1"}) {
        auto g = graph_fixture(n);
        auto ref = cohomology(build_complex(g));
        for (int b = 0; b < g.num_vertices(); ++b) {
            auto r = cohomology(build_complex(g.with_base(b)));
            CHECK(r.ranks == ref.ranks);
            CHECK(r.determinant == ref.determinant);
        }
    }
}

TEST_CASE("specialized rank never exceeds the exact rank") {
    for (uint64_t s = 0; s < 20; ++s) {
        auto c = build_complex(random_plane_graph(300 + s, 2 + int(s % 4)));
        for (const auto& [h, m] : c.d) {
            int exact = rank(c.exact_matrix(h));
            CHECK(specialized_rank(c, h, s + 1, 1).lo <= exact);
        }
    }
}

TEST_CASE("fraction-free rank agrees with minor enumeration") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 15; ++i) {
        int r = 2 + int(rng() % 3), c = 2 + int(rng() % 3), inner = 1 + int(rng() % 3);
        auto m = oracle::random_symbolic(rng, r, c, inner);
        CHECK(rank(m) == oracle::minor_rank(m));
    }
}

TEST_CASE("report bookkeeping") {
    auto c = build_complex(graph_fixture("D330"));
    auto r = cohomology(c);
    CHECK(r.ranks.at(2) >= 1);
    CHECK_THROWS(add_cohomology_lower_bounds(r, {{2, 50}}, "nonsense"));
    auto s = shifted_report(r, 4);
    CHECK(s.ranks.count(-2));
    CHECK(*s.n_minus == 4);
}
