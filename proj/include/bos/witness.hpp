#pragma once

#include "bos/complex.hpp"
#include "bos/matrix.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace bos {

// Row/column/variable bijection between a pattern matrix (over its own
// variables) and a target matrix. Pattern vertex variables go to distinct
// target vertex variables, pattern face variables to nonempty products of
// target face variables.
struct MatrixMatch {
    bool found = false;
    std::vector<int> row_of, col_of; // pattern index -> target index
    std::map<int, Poly2> image;      // pattern variable -> monomial in target variables
    long long substitutions = 0;     // candidate variable maps tried
    long long fingerprint_hits = 0;  // of those, how many passed the GF(2^64) fingerprint
    std::string failure;
    std::string describe(const std::vector<std::string>& pattern_names, const Poly2::Namer& target_name) const;
};

struct MatchSpec {
    std::vector<int> pattern_vertex, pattern_face;
    std::vector<int> target_vertex, target_face;
    int target_vars = 0;
    std::function<bool(int pattern_col, int target_col)> col_ok; // optional
    uint64_t seed = 0x6d61746368;
};

MatrixMatch match_matrix(const FMatrix& pattern, const FMatrix& target, const MatchSpec& spec);

// Pattern variables of the printed 9x12 matrix (x y1 y2 z1 z2 as vertices,
// Q T as faces) against the variable catalog of g.
MatchSpec printed_match_spec(const EmbeddedBlackGraph& g);

// The D(3,3) block in the fixed row order V1..V9 and column order u0..u11.
// X = V1+V2+V4+V5, Y = V1+V2+V7+V8, Z = V1+V3+V4+V6, T = V1+V3+V7+V9 and
// w = X + cY Y + cZ Z + cT T with the coefficients below.
enum class WitnessForm {
    solved,  // cY = q1/q2, cZ = p1/p3, cT = (p2/p4)(q1/q2): what cancels u1 u2 u4 u5
    printed, // cY = q2/q1, cZ = p3/p1, cT = (p4/p2)(q2/q1)
};

struct WitnessRecord {
    bool identity = false; // p1 p4 q2 q3 == p2 p3 q1 q4
    std::array<FactoredFraction, 4> p, q;
    std::vector<FactoredFraction> row_coeffs; // coefficient of V1..V9 in w
    std::vector<FactoredFraction> w;          // 12 coordinates
    std::vector<int> nonvanishing;  // indices among u0..u5 with nonzero coordinate
    bool w_nonzero = false;
    bool ok() const { return identity && nonvanishing.empty() && w_nonzero; }
    std::string failure;
};

WitnessRecord lemma_witness(const FFMatrix& m, WitnessForm form = WitnessForm::solved);

// For a complex whose graph has two parallel height-1 edges p, q and 18x18
// middle differential: rows through p and through q each carry a copy of
// the D(3,3) block on (trees through p or q) + (trees through neither).
// Matching both copies and combining rows by the witness coefficients gives
// sum c_i row_i + sum c'_i row'_i = 0, so the rank is at most rows - 1.
struct RankWitness {
    bool ok = false;
    int from = 0;
    int rows = 0, cols = 0;
    int rank_bound = 0;
    std::string parallel_pair; // edge ids
    MatrixMatch first, second;
    WitnessRecord w1, w2;
    bool combination_vanishes = false;
    std::string failure;
    std::string describe() const;
};

RankWitness parallel_spoke_witness(const TreeComplex& c);

// Tighten a report with a verified witness; no-op if !w.ok.
void apply_rank_witness(CohomologyReport& r, const RankWitness& w);

} // namespace bos
