#pragma once

#include "bos/field.hpp"
#include "bos/gf64.hpp"
#include "bos/graph.hpp"
#include "bos/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bos {

// Where "the base point" sits on a fundamental cycle when the base vertex is
// off the cycle: where the tree path from the base first hits the cycle, or
// the cycle vertex nearest to the base in the whole graph.
enum class BaseRef { tree_path, graph_nearest };

// consistent: alpha is the face product when (e, f, ref) runs clockwise.
// literal: alpha is the face product when (e, f, ref) runs counterclockwise.
// The two differ by inverting every alpha; ranks agree, entries do not.
enum class AlphaRule { consistent, literal };

struct Conventions {
    BaseRef base_ref = BaseRef::tree_path;
    AlphaRule alpha = AlphaRule::consistent;
    std::string describe() const;
    std::string hash() const; // fnv-1a of describe(), hex
};

using TreeMask = uint64_t;

int total_height(const EmbeddedBlackGraph& g, TreeMask t);

struct GradedTrees {
    std::map<int, std::vector<TreeMask>> by_height; // sorted by omitted-edge list
    std::size_t total = 0;
    int min_height() const { return by_height.empty() ? 0 : by_height.begin()->first; }
};

// All spanning trees (graphs with at most 64 edges); empty when disconnected.
GradedTrees spanning_trees(const EmbeddedBlackGraph& g);

// Matrix-tree theorem over the integers (fraction-free determinant).
long long tree_count(const EmbeddedBlackGraph& g);

// alpha = prod(face vars of faces)^(inverted ? -1 : 1), beta = prod(vertex vars)
struct CoefficientData {
    std::vector<int> faces;
    bool inverted = false;
    std::vector<int> beta_vertices;
    std::vector<int> cycle; // fundamental cycle of f, edge ids
    int ref_vertex = -1;
    Orientation parity = Orientation::ccw;
};

CoefficientData coefficient_data(const EmbeddedBlackGraph& g, TreeMask t, int e, int f,
                                 const Conventions& conv = {});
FieldElement coefficient(const EmbeddedBlackGraph& g, TreeMask t, int e, int f, const Conventions& conv = {});
FieldElement coefficient_value(const EmbeddedBlackGraph& g, const CoefficientData& c);
FactoredFraction coefficient_factored(const EmbeddedBlackGraph& g, const CoefficientData& c);
// value under var i -> vals[i]; throws SpecializationPole if 1 + alpha or 1 + beta vanishes
gf64::elem coefficient_value(const EmbeddedBlackGraph& g, const CoefficientData& c, const std::vector<gf64::elem>& vals);

struct DiffEntry {
    int row = 0, col = 0; // row: tree at h + 2, col: tree at h
    int e = -1, f = -1;
    CoefficientData data;
};

struct Differential {
    int from = 0; // source height
    int rows = 0, cols = 0;
    std::vector<DiffEntry> entries;
};

struct TreeComplex {
    EmbeddedBlackGraph graph;
    Conventions conv;
    GradedTrees trees;
    std::map<int, Differential> d; // keyed by source height

    int dim(int h) const;
    bool is_zero() const { return trees.total == 0; }
    FMatrix exact_matrix(int from) const;
    FFMatrix factored_matrix(int from) const;
    std::vector<gf64::elem> eval_matrix(int from, const std::vector<gf64::elem>& vals) const;
};

TreeComplex build_complex(const EmbeddedBlackGraph& g, const Conventions& conv = {});

struct DSquaredResult {
    bool ok = true;
    bool exact = false;
    int specializations = 0;
    // first nonzero composite: source height, source tree index, target tree index
    int height = 0, source = -1, target = -1;
    std::string describe() const;
};

// d_{h+2} d_h for every h, exactly over the function field.
DSquaredResult check_d_squared(const std::map<int, FMatrix>& d);
// exact for graphs with at most exact_edges edges, else under 3 specializations
DSquaredResult verify_d_squared(const TreeComplex& c, int exact_edges = 9);

// var i -> t^{exps[i]} with t evaluated at the class of t in GF(2^64)
std::vector<gf64::elem> power_values(const std::vector<int>& exps);

struct DifferentialRank {
    int from = 0, rows = 0, cols = 0;
    int lo = 0, hi = 0; // bounds on the generic rank
    uint64_t seed = 0;  // seed that achieved lo
    std::vector<int> exponents;
    int attempts = 0;
    std::string hi_source = "shape";
    bool certified() const { return lo == hi; }
};

struct CohomologyOptions {
    uint64_t seed = 1;
    int retries = 5;
    bool exact = false; // multivariate elimination instead of specialization
};

struct CohomologyReport {
    std::map<int, int> dims;
    std::map<int, int> ranks; // specialized cohomology ranks: upper bounds of the generic ones
    std::map<int, int> lower; // certified lower bounds
    std::map<int, DifferentialRank> differentials;
    std::vector<std::string> certificates;
    int euler_trace = 0;
    int determinant = 0;
    std::optional<int> n_minus;
    uint64_t seed = 1;
    int retries = 0;
    bool exact = false;
    std::string convention;
    std::string convention_hash;
    int num_trees = 0;

    bool certified(int h) const;
    bool all_certified() const;
    int total_rank() const;
    std::vector<int> occupied() const; // heights with nonzero rank
};

int euler_trace(const TreeComplex& c);
int determinant(const TreeComplex& c);

CohomologyReport cohomology(const TreeComplex& c, const CohomologyOptions& opt = {});

// Rank of one differential: best of several specializations (lower bound).
DifferentialRank specialized_rank(const TreeComplex& c, int from, uint64_t seed, int retries);

// Feed extra facts into a report and propagate. Lower bounds on cohomology
// ranks give upper bounds on differential ranks and vice versa; the
// alternating-sum identity tightens the box.
void add_rank_upper_bound(CohomologyReport& r, int from, int hi, const std::string& source);
void add_cohomology_lower_bounds(CohomologyReport& r, const std::map<int, int>& lower, const std::string& source);
void add_cohomology_upper_bounds(CohomologyReport& r, const std::map<int, int>& upper, const std::string& source);
void add_total_rank_lower_bound(CohomologyReport& r, int total, const std::string& source);
void propagate(CohomologyReport& r);

// Regrade by n_minus (heights h -> h - n_minus).
CohomologyReport shifted_report(const CohomologyReport& r, int n_minus);

} // namespace bos
