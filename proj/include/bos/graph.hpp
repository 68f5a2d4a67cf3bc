#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bos {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Edge {
    std::string id;
    int u = 0, v = 0; // tail, head
    int height = 0;   // 0 or 1
};

// Dart 2e leaves the tail of edge e, dart 2e+1 leaves its head.
inline int dart_edge(int d) { return d >> 1; }
inline int dart_rev(int d) { return d ^ 1; }

struct FaceSet {
    std::vector<std::vector<int>> walks; // dart sequences, face on the left
    std::vector<int> face_of;            // dart -> face
};

enum class Orientation { ccw, cw };

// Planar multigraph stored as a rotation system (counterclockwise dart
// lists per vertex). Faces are traced with phi(d) = prev_at_head(rev(d)),
// which keeps the face on the left, so bounded faces come out ccw.
class EmbeddedBlackGraph {
public:
    EmbeddedBlackGraph() = default;
    EmbeddedBlackGraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges,
                       std::vector<std::vector<int>> rotation, int outer_dart, int base);

    int num_vertices() const { return int(vertex_ids_.size()); }
    int num_edges() const { return int(edges_.size()); }
    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_.at(e); }
    const std::vector<std::vector<int>>& rotation() const { return rot_; }
    int base() const { return base_; }
    int outer_dart() const { return outer_dart_; }

    int tail(int d) const { return (d & 1) ? edges_[d >> 1].v : edges_[d >> 1].u; }
    int head(int d) const { return tail(d ^ 1); }
    int phi(int d) const;

    const FaceSet& faces() const { return faces_; }
    int num_faces() const { return int(faces_.walks.size()); }
    int outer_face() const { return outer_face_; }
    int face_of(int d) const { return faces_.face_of[d]; }

    int num_components() const;
    bool connected() const { return num_components() == 1; }

    // variable catalog: non-base vertices first, then bounded faces
    int vertex_var(int v) const { return vertex_var_[v]; }
    int face_var(int f) const { return face_var_[f]; }
    int num_vars() const { return num_vars_; }
    std::string var_name(int var) const;

    int find_edge(const std::string& id) const;
    int find_vertex(const std::string& id) const;

    EmbeddedBlackGraph with_base(int b) const;

private:
    void build();
    std::vector<std::string> vertex_ids_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> rot_;
    std::vector<std::pair<int, int>> pos_; // dart -> (vertex, index in rotation)
    int outer_dart_ = -1;
    int base_ = 0;
    FaceSet faces_;
    int outer_face_ = -1;
    std::vector<int> vertex_var_, face_var_;
    int num_vars_ = 0;
};

FaceSet trace_faces(const EmbeddedBlackGraph& g);

// Checks rotation consistency and the Euler relation per component; throws GraphError.
void validate(const EmbeddedBlackGraph& g);

// Bounded faces enclosed by a simple cycle (given by edge ids): the faces
// not reachable from the outer face without crossing the cycle.
std::vector<int> cycle_interior(const EmbeddedBlackGraph& g, const std::vector<int>& cycle);

// Cycle as a closed dart walk. Throws if the edges are not a simple cycle.
std::vector<int> cycle_darts(const EmbeddedBlackGraph& g, const std::vector<int>& cycle);

// Whether e, f and the reference vertex occur in this order when the cycle
// is traversed counterclockwise (interior on the left).
Orientation cycle_orientation_parity(const EmbeddedBlackGraph& g, const std::vector<int>& cycle, int e, int f,
                                     int ref_vertex);

EmbeddedBlackGraph delete_edge(const EmbeddedBlackGraph& g, int e);
EmbeddedBlackGraph contract_edge(const EmbeddedBlackGraph& g, int e);

// Same combinatorial map up to relabeling (rotation preserving); heights must
// agree. Outer face and base are ignored unless asked for.
bool isomorphic_maps(const EmbeddedBlackGraph& a, const EmbeddedBlackGraph& b, bool match_outer = false);

// Relabeling-invariant code of a connected map with its heights, outer face
// and base vertex. Equal codes mean isomorphic as rooted plane maps.
std::string canonical_code(const EmbeddedBlackGraph& g);

} // namespace bos
