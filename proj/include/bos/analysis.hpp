#pragma once

#include "bos/complex.hpp"
#include "bos/graph.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bos {

// One side of a skein resolution. A resolution with no spanning trees
// (split graph, or contraction of a loop) is a zero complex.
struct Resolution {
    std::optional<EmbeddedBlackGraph> graph; // empty when e is a loop being contracted
    std::string kind;                        // "delete" or "contract"
    int shift = 0;                           // add to its heights to land in the parent grading
    bool zero = false;
};

// 0 -> sub -> C(g) -> quotient -> 0. For a height-0 edge the trees avoiding
// it form the subcomplex (deletion, shifted by 1) and the quotient is the
// contraction; for a height-1 edge the roles swap.
struct SkeinResolution {
    int edge = -1;
    Resolution sub, quotient;
};

SkeinResolution skein_resolve(const EmbeddedBlackGraph& g, int e);

// Graded ranks of the three complexes, all in the parent grading.
struct SkeinTriple {
    std::map<int, int> whole, sub, quotient;
};

struct LesResult {
    bool ok = true;
    std::string reason;
    std::map<int, int> delta; // rank of H_h(quotient) -> H_{h+2}(sub)
};

// Exactness of ... -> H_{h-2}(quot) -> H_h(sub) -> H_h(whole) -> H_h(quot) -> H_{h+2}(sub) -> ...
// The connecting ranks are forced; check that they are admissible.
LesResult les_consistency(const SkeinTriple& t);

// Mayer-Vietoris style feasibility for 0 -> A -> B1 + B2 -> C -> 0 (same gradings).
LesResult short_exact_feasible(const std::map<int, int>& a, const std::map<int, int>& b, const std::map<int, int>& c);

struct CollapseVerdict {
    bool collapsed = true;
    std::vector<std::pair<int, int>> blocking; // height pairs differing by 4k+2, k >= 1
};

CollapseVerdict collapse_check(const CohomologyReport& r);

struct HfInference {
    std::optional<int> rank;
    std::string reason;
};

HfInference infer_hf(const CohomologyReport& r);
bool lspace_test(const CohomologyReport& r);

// Bounds on the generic cohomology ranks of a graph.
struct Bounds {
    std::map<int, int> lower, upper;
    bool certified() const;
};

struct CertifierOptions {
    uint64_t seed = 1;
    int retries = 3;
    int exact_edges = 4;      // up to this many edges, compute generic ranks exactly
    // extra facts about a freshly evaluated graph (witnesses, imported bounds)
    std::function<void(const TreeComplex&, CohomologyReport&)> enrich;
    int max_nodes = 20000;    // graphs examined
    int max_depth = 24;
    std::function<void(const std::string&)> log;
};

struct CertifierResult {
    Bounds bounds;
    int nodes = 0;
    std::vector<std::string> proof; // one line per resolution used
};

struct SkeinStep {
    std::string edge;
    int height = 0;
    bool feasible = true;
    Bounds whole, sub, quotient; // parent grading, after tightening
    bool sub_zero = false, quotient_zero = false; // cohomology bounded by 0
    std::optional<EmbeddedBlackGraph> sub_graph, quotient_graph; // reduced by loops and bridges
};

// Memoized bounds on generic ranks, keyed by the rooted map code of a graph
// reduced by loops and bridges. Exact sequences move bounds in every
// direction: from pieces to the whole and back.
class SkeinCertifier {
public:
    explicit SkeinCertifier(CertifierOptions opt = {});
    ~SkeinCertifier();
    Bounds bounds(const EmbeddedBlackGraph& g);
    // searches skein and Mayer-Vietoris relations below g
    Bounds certify(const EmbeddedBlackGraph& g);
    // one skein step at e, tightening all three complexes
    SkeinStep resolve(const EmbeddedBlackGraph& g, int e);
    const std::vector<std::string>& proof() const;
    int nodes() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Tries to pin the generic ranks of g by recursive skein resolutions: exact
// sequences give lower bounds from the pieces, specializations give upper
// bounds, the alternating sum ties them together.
CertifierResult certify_by_skein(const EmbeddedBlackGraph& g, const CertifierOptions& opt = {});

// A bound taken from outside the complex (cited, not computed here).
struct ImportedFact {
    std::string name;
    std::string graph_code; // canonical_code of the graph reduced by loops and bridges
    int total_rank_lower = 0;
    std::string statement;
};

// E_3: the E3 page bounds rank HF-hat of the branched double cover, here the
// Brieskorn sphere Sigma(2,3,7) with rank HF-hat = 3.
std::vector<ImportedFact> imported_facts();

// Facts this library knows how to add to a fresh report: block witnesses
// on graphs with a parallel height-1 pair, and the imported facts above
// unless imports is false.
std::function<void(const TreeComplex&, CohomologyReport&)> standard_enrich(bool imports = true);

// Removes loops and bridges; returns the reduced graph and the height shift.
std::pair<EmbeddedBlackGraph, int> strip_loops_and_bridges(const EmbeddedBlackGraph& g);

} // namespace bos
