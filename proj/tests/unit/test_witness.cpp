#include "doctest.h"

#include "bos/complex.hpp"
#include "bos/fixtures.hpp"
#include "bos/witness.hpp"

using namespace bos;

TEST_CASE("printed matrix carries a solved witness") {
    auto pm = paper_matrix_M();
    REQUIRE(pm.m.size() == 9);
    REQUIRE(pm.m[0].size() == 12);
    auto w = lemma_witness(pm.mf);
    CHECK(w.identity);
    CHECK(w.nonvanishing.empty());
    CHECK(w.w_nonzero);
    CHECK(w.ok());
    // factored and plain entries agree
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 12; ++j) CHECK(pm.mf[i][j].expand() == pm.m[i][j]);
}

TEST_CASE("reciprocal coefficients do not cancel") {
    auto w = lemma_witness(paper_matrix_M().mf, WitnessForm::printed);
    CHECK(w.identity);
    CHECK_FALSE(w.ok());
    CHECK_FALSE(w.nonvanishing.empty());
}

TEST_CASE("a perturbed entry breaks the witness") {
    auto pm = paper_matrix_M();
    // the witness only reads the first six columns
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 12; ++j) {
            auto mf = pm.mf;
            mf[i][j] = mf[i][j] + FactoredFraction::one();
            CHECK_MESSAGE(lemma_witness(mf).ok() == (j >= 6), i, " ", j);
        }
}

TEST_CASE("generated D33 block matches the printed matrix") {
    auto pm = paper_matrix_M();
    auto g = graph_fixture("D33");
    auto c = build_complex(g);
    auto m = match_matrix(pm.m, c.exact_matrix(2), printed_match_spec(g));
    REQUIRE(m.found);
    CHECK(m.row_of.size() == 9);
    CHECK(m.col_of.size() == 12);
    // the graph-built block, permuted into printed order, carries the witness too
    auto ff = c.factored_matrix(2);
    FFMatrix p(9, std::vector<FactoredFraction>(12));
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 12; ++j) p[i][j] = ff[m.row_of[i]][m.col_of[j]];
    CHECK(lemma_witness(p).ok());
}

TEST_CASE("matcher rejects a corrupted target") {
    auto pm = paper_matrix_M();
    auto g = graph_fixture("D33");
    auto N = build_complex(g).exact_matrix(2);
    for (auto& row : N)
        for (auto& x : row)
            if (!x.is_zero()) {
                x = x + FieldElement::one();
                goto done;
            }
done:
    CHECK_FALSE(match_matrix(pm.m, N, printed_match_spec(g)).found);
}

TEST_CASE("parallel spoke witness on D330") {
    auto c = build_complex(graph_fixture("D330"));
    auto w = parallel_spoke_witness(c);
    REQUIRE_MESSAGE(w.ok, w.failure);
    CHECK(w.rows == 18);
    CHECK(w.cols == 18);
    CHECK(w.rank_bound == 17);
    CHECK(w.combination_vanishes);
    auto r = cohomology(c);
    apply_rank_witness(r, w);
    CHECK(r.all_certified());
    CHECK(r.ranks.at(2) == 1);
    CHECK(r.ranks.at(4) == 1);
    // no parallel pair: no witness
    CHECK_FALSE(parallel_spoke_witness(build_complex(graph_fixture("D33"))).ok);
}
