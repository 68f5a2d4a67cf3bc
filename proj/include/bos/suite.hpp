#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bos {

struct SuiteResult {
    int checks = 0;
    int failures = 0;
    std::vector<std::string> failed;
    std::vector<std::string> summary; // one line per property
    bool ok() const { return failures == 0; }
};

// Property suite over the graph fixtures, the basic diagrams and seeded
// random plane multigraphs (1..max_edges edges):
//   d^2 = 0 (exact up to 9 edges), tree enumeration = Kirchhoff,
//   |euler trace| = Goeritz determinant on diagrams,
//   ranks and determinant independent of the base vertex (<= max_edges edges).
struct SuiteOptions {
    int random_graphs = 200;
    int max_edges = 8;
    uint64_t seed = 2024;
    std::function<void(const std::string&)> log;
};

SuiteResult oracle_suite(const SuiteOptions& opt = {});

} // namespace bos
