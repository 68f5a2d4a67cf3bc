#pragma once

#include "bos/analysis.hpp"
#include "bos/diagram.hpp"

#include <optional>
#include <string>

namespace bos {

inline constexpr const char* kToolVersion = "1.0.0";

struct RunConfig {
    std::string input;   // fixture name or path, as given
    uint64_t seed = 1;
    int retries = 5;
    bool exact = false;  // multivariate elimination
    bool imports = true; // imported facts in the certifier
    bool certify = true; // skein search when specialization leaves a gap
    std::optional<std::string> base;
    bool outer_black = false;
};

// Input resolved to a black graph, plus the diagram if there was one.
struct LoadedInput {
    EmbeddedBlackGraph graph;
    std::optional<LinkDiagram> diagram;
    std::string name;
};

// Fixture names: graph fixtures (D33, D330, ..., E<k>, also "E k"), the
// basic diagrams (unknot, trefoil_right, ...). Anything else is a path:
// *.json is a black graph, otherwise PD text.
LoadedInput load_input(const std::string& what, const RunConfig& cfg);

struct PipelineResult {
    LoadedInput in;
    CohomologyReport report; // graph grading
    std::optional<CohomologyReport> shifted; // diagram grading, when n_minus is known
    DSquaredResult d_squared;
    CollapseVerdict collapse;
    HfInference hf;
    bool lspace = false;
    bool certified = false;
    std::vector<std::string> proof;
};

PipelineResult run_cohomology(const LoadedInput& in, const RunConfig& cfg);

struct SkeinReport {
    std::string graph_name;
    SkeinStep step;
    int sub_shift = 0, quotient_shift = 0;
    std::string sub_kind, quotient_kind;
    std::string sub_fixture, quotient_fixture; // named fixture isomorphic to the reduced piece
    std::string conclusion;
    std::vector<std::string> proof;
};

// Certifies the whole graph, then resolves at the named edge.
SkeinReport run_skein(const LoadedInput& in, const std::string& edge, const RunConfig& cfg);

std::string report_json(const PipelineResult& r, const RunConfig& cfg);
std::string report_text(const PipelineResult& r, const RunConfig& cfg);
std::string skein_json(const SkeinReport& r, const RunConfig& cfg);
std::string skein_text(const SkeinReport& r);

std::string heights_string(const std::map<int, int>& m); // "{h2:1, h4:1}"

} // namespace bos
