#pragma once

#include "bos/field.hpp"
#include "bos/graph.hpp"
#include "bos/matrix.hpp"
#include "bos/specialize.hpp"

#include <map>
#include <string>
#include <vector>

namespace bos {

struct FixtureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Wheel-type black graph B_{n1..nk}: hub "hub", junctions J0..J{k-1}, rim
// vertices p{i}_{j}; rim edges a{i}{j} (height 0), spokes e{i} (height 1).
// An arc with n_i = 0 merges two junctions and doubles a spoke.
EmbeddedBlackGraph wheel_graph(const std::vector<int>& ns);

// Black graph of the E_k family; base C, spokes s2 s3 s4 s5 (height 1), rim
// and chain edges height 0, chain e1..ek from V2 to V3.
EmbeddedBlackGraph e_family(int k);

// Planar graph from vertex coordinates (rotation by angle).
EmbeddedBlackGraph graph_from_coordinates(const std::vector<std::string>& ids,
                                          const std::vector<std::pair<double, double>>& pos,
                                          const std::vector<Edge>& edges, int base, int outer_dart);

// The 9x12 matrix over F2(x, y1, y2, z1, z2, v, Q, T) as printed, rows 1..9
// stored as 0..8. Variable ids index var_names.
struct PrintedMatrix {
    FMatrix m;
    FFMatrix mf; // same entries, factored denominators
    std::vector<std::string> var_names; // id -> name
    int var(const std::string& name) const;
};
PrintedMatrix paper_matrix_M();

// x=t, y1=t^2, y2=t, z1=t^4, z2=t, v=t^6, T=t^10, Q kept free
SpecializationMap paper_specialization(const PrintedMatrix& pm, int t_var);

// Seeded random connected plane multigraph with the given number of edges:
// leaves grown at random corners and chords (loops, parallel edges included)
// drawn inside random faces. Heights, outer face and base are random too.
EmbeddedBlackGraph random_plane_graph(uint64_t seed, int edges);

// Named graph fixtures: D33, D330, D36, D331, D332, D333, E<k>, unknot-graph ...
EmbeddedBlackGraph graph_fixture(const std::string& name);
std::vector<std::string> graph_fixture_names();

} // namespace bos
