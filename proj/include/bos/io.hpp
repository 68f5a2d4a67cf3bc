#pragma once

#include "bos/graph.hpp"

#include <stdexcept>
#include <string>

namespace bos {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kGraphSchema = "bos-black-graph/1";

// {"schema", "vertices", "base", "edges": [{"id", "ends": [tail, head], "height"}],
//  "rotation": {vertex: ["e:t" | "e:h", ...]}, "outer_face": [edge-ends]}
// An edge-end "e:t" is the dart leaving the tail of e. The outer face is its
// boundary walk (face on the left) starting at the recorded outer dart.
std::string graph_to_json(const EmbeddedBlackGraph& g, int indent = 2);
EmbeddedBlackGraph graph_from_json(const std::string& text);

std::string read_file(const std::string& path);

} // namespace bos
