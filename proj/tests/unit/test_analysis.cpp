#include "doctest.h"

#include "bos/analysis.hpp"
#include "bos/fixtures.hpp"

using namespace bos;

namespace {

CohomologyReport fake(std::map<int, int> ranks, int det) {
    CohomologyReport r;
    r.dims = ranks;
    r.ranks = ranks;
    r.lower = ranks;
    r.determinant = det;
    return r;
}

} // namespace

TEST_CASE("les consistency") {
    CHECK(les_consistency({{{2, 1}, {4, 1}}, {}, {{2, 1}, {4, 1}}}).ok);
    // a class of the quotient kills one of the sub
    auto r = les_consistency({{}, {{4, 1}}, {{2, 1}}});
    CHECK(r.ok);
    CHECK(r.delta[2] == 1);
    // corrupted: whole has a class that nothing explains
    CHECK_FALSE(les_consistency({{{2, 1}}, {}, {}}).ok);
    CHECK_FALSE(les_consistency({{{2, 2}, {4, 1}}, {{2, 1}}, {{4, 1}}}).ok);
    CHECK_FALSE(les_consistency({{{2, 1}}, {{3, 1}}, {}}).ok);
    CHECK(short_exact_feasible({{2, 1}}, {{2, 1}, {4, 1}}, {{4, 1}}).ok);
}

TEST_CASE("skein resolution kinds") {
    auto g = graph_fixture("D33");
    auto s = skein_resolve(g, g.find_edge("e0"));
    CHECK(s.sub.kind == "contract");
    CHECK(s.sub.shift == 1);
    CHECK(s.quotient.kind == "delete");
    auto r = skein_resolve(g, g.find_edge("a11"));
    CHECK(r.sub.kind == "delete");
    CHECK(r.sub.shift == 1);
    CHECK(r.quotient.kind == "contract");
}

TEST_CASE("collapse, HF inference and L-space") {
    auto unknot = fake({{0, 1}}, 1);
    CHECK(collapse_check(unknot).collapsed);
    CHECK(*infer_hf(unknot).rank == 1);
    CHECK(lspace_test(unknot));
    auto spread = fake({{2, 1}, {8, 2}}, 1);
    CHECK_FALSE(collapse_check(spread).collapsed);
    CHECK_FALSE(infer_hf(spread).rank);
    auto near = fake({{3, 1}, {5, 1}, {7, 1}}, 1);
    CHECK(collapse_check(near).collapsed);
    CHECK(*infer_hf(near).rank == 3);
    CHECK_FALSE(lspace_test(near));
    auto det0 = fake({{2, 1}, {4, 1}}, 0);
    CHECK_FALSE(infer_hf(det0).rank);
    CHECK_FALSE(lspace_test(det0));
    auto open = fake({{2, 1}}, 1);
    open.lower[2] = 0;
    CHECK_FALSE(infer_hf(open).rank);
}

TEST_CASE("loops and bridges strip off with a shift") {
    auto [g0, s0] = strip_loops_and_bridges(graph_fixture("edge0"));
    auto [g1, s1] = strip_loops_and_bridges(graph_fixture("edge1"));
    CHECK(g0.num_edges() == 0);
    CHECK(g1.num_edges() == 0);
    CHECK(s1 - s0 == 1);
}

TEST_CASE("certifier pins the D33k chain") {
    CertifierOptions o;
    o.enrich = standard_enrich();
    SkeinCertifier cert(o);
    for (const char* n : {"D330", "D331", "D332"}) {
        auto b = cert.certify(graph_fixture(n));
        CHECK_MESSAGE(b.certified(), n);
        CHECK(b.upper[2] == 1);
        CHECK(b.upper[4] == 1);
    }
}

TEST_CASE("E3 needs the imported fact") {
    CertifierOptions o;
    o.enrich = standard_enrich(false);
    o.max_nodes = 2000;
    CHECK_FALSE(SkeinCertifier(o).certify(e_family(3)).certified());
    o.enrich = standard_enrich(true);
    auto b = SkeinCertifier(o).certify(e_family(3));
    CHECK(b.certified());
    CHECK(b.upper[3] == 1);
    CHECK(b.upper[5] == 1);
    CHECK(b.upper[7] == 1);
    CHECK(imported_facts().size() == 1);
}
