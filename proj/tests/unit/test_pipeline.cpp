#include "doctest.h"

#include "bos/io.hpp"
#include "bos/pipeline.hpp"
#include "bos/suite.hpp"

using namespace bos;

namespace {

PipelineResult run(const std::string& what, uint64_t seed = 1) {
    RunConfig cfg;
    cfg.input = what;
    cfg.seed = seed;
    return run_cohomology(load_input(what, cfg), cfg);
}

} // namespace

TEST_CASE("cohomology of the unknot") {
    auto r = run("unknot");
    CHECK(r.report.ranks == std::map<int, int>{{0, 1}});
    CHECK(r.report.determinant == 1);
    CHECK(*r.hf.rank == 1);
    CHECK(r.lspace);
}

TEST_CASE("cohomology of D330 and E 4") {
    auto d = run("D330", 7);
    CHECK(d.certified);
    CHECK(heights_string(d.report.ranks) == "{h2:1, h4:1}");
    CHECK(d.report.determinant == 0);
    CHECK_FALSE(d.hf.rank);
    auto e = run("E 4");
    CHECK(e.certified);
    CHECK(heights_string(e.report.ranks) == "{h3:1, h5:1, h7:2}");
    CHECK(e.report.determinant == 2);
    CHECK(*e.hf.rank == 4);
    CHECK_FALSE(e.lspace);
}

TEST_CASE("json reports are reproducible") {
    RunConfig cfg;
    cfg.input = "D33";
    cfg.seed = 11;
    auto a = report_json(run_cohomology(load_input("D33", cfg), cfg), cfg);
    auto b = report_json(run_cohomology(load_input("D33", cfg), cfg), cfg);
    CHECK(a == b);
    CHECK(a.find("\"seed\": 11") != std::string::npos);
    CHECK(a.find("\"convention_hash\"") != std::string::npos);
    CHECK(a.find("\"version\"") != std::string::npos);
}

TEST_CASE("inputs from files") {
    RunConfig cfg;
    auto g = load_input(std::string(BOS_DATA_DIR) + "/fixtures/D33.json", cfg);
    CHECK(g.graph.num_edges() == 8);
    CHECK_FALSE(g.diagram);
    auto d = load_input(std::string(BOS_DATA_DIR) + "/fixtures/trefoil_left.pd", cfg);
    REQUIRE(d.diagram);
    CHECK(negative_crossing_count(*d.diagram) == 3);
    CHECK_THROWS_AS(load_input(std::string(BOS_DATA_DIR) + "/fixtures/bad.pd", cfg), PdParseError);
    CHECK_THROWS_AS(load_input("/nonexistent.pd", cfg), FormatError);
}

TEST_CASE("skein at e0 of D333 isolates D36") {
    RunConfig cfg;
    auto r = run_skein(load_input("D333", cfg), "e0", cfg);
    CHECK(r.step.sub_zero);
    CHECK(r.quotient_fixture == "D36");
    CHECK(r.step.quotient.certified());
    CHECK(r.conclusion.find("isomorphic") != std::string::npos);
    CHECK_THROWS_AS(run_skein(load_input("D33", cfg), "nonexistent", cfg), GraphError);
}

TEST_CASE("oracle suite, small") {
    SuiteOptions o;
    o.random_graphs = 20;
    auto r = oracle_suite(o);
    CHECK(r.ok());
    CHECK(r.checks > 100);
}
