#pragma once

#include "bos/graph.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bos {

struct DiagramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PdParseError : DiagramError {
    int line, column;
    PdParseError(const std::string& what, int l, int c)
        : DiagramError(what + " at line " + std::to_string(l) + ", column " + std::to_string(c)), line(l), column(c) {}
};

// Arc labels counterclockwise around the crossing, starting at the incoming
// under-arc: positions 0 and 2 are under, 1 and 3 over.
struct Crossing {
    std::array<int, 4> arcs{};
    bool operator==(const Crossing&) const = default;
};

struct LinkDiagram {
    std::vector<Crossing> crossings;
    std::vector<int> loops; // closed arcs without crossings
    bool operator==(const LinkDiagram&) const = default;
};

// PD text: optional PD[ ... ] wrapper around X[a,b,c,d] and Loop[a] items,
// separated by commas or whitespace; '#' starts a comment.
LinkDiagram parse_diagram(const std::string& text);
std::string serialize_diagram(const LinkDiagram& d);

// Throws DiagramError: arc multiplicity, orientation clash, Euler check.
void validate(const LinkDiagram& d);

// Darts of the 4-valent projection: 4*c + k leaves crossing c at position k.
struct DiagramFaces {
    std::vector<std::vector<int>> walks; // face on the left; corner k of crossing c is face_of[4c+k]
    std::vector<int> face_of;
    std::vector<int> component_of_crossing; // connected components of the projection
    int components = 0;
};
DiagramFaces diagram_faces(const LinkDiagram& d);

// incoming[4c+k]: the strand enters crossing c at position k
std::vector<bool> orientation(const LinkDiagram& d);

enum class Sign { positive, negative };
// positive iff the over strand runs from position 3 to position 1
std::vector<Sign> crossing_signs(const LinkDiagram& d);
int negative_crossing_count(const LinkDiagram& d);

// Face on the right of the lowest-labelled arc in each projection
// component plays the unbounded face of that component.
std::vector<int> unbounded_faces(const LinkDiagram& d, const DiagramFaces& f);

struct BlackGraphOptions {
    bool outer_black = false;      // take the other checkerboard colouring
    std::optional<std::string> base; // vertex id override
};

// One vertex per black face (ids B0, B1, ... in face order, loops last), one
// edge per crossing (ids x1, x2, ...). Height 0 iff the black corners are
// 0 and 2, i.e. edge, lower arc, upper arc run clockwise.
EmbeddedBlackGraph black_graph(const LinkDiagram& d, const BlackGraphOptions& opt = {});

// Medial construction: a diagram whose black graph is g (heights, rotation
// and outer face preserved). Loops of g become kinks, isolated vertices
// unknotted circles.
LinkDiagram diagram_from_black_graph(const EmbeddedBlackGraph& g);

// |det| of the reduced Goeritz matrix on white faces; 0 for split diagrams.
long long goeritz_det(const LinkDiagram& d, bool outer_black = false);

// Adds a kink on the arc with the given label: a new crossing with the
// requested sign; the two new arcs get fresh labels.
LinkDiagram add_kink(const LinkDiagram& d, int arc, Sign sign, bool left);

struct NamedDiagram {
    std::string name;
    LinkDiagram diagram;
    long long det;
};
// unknot, trefoil_right, trefoil_left, figure_eight, knot_8_19, unlink2
std::vector<NamedDiagram> basic_knots();

} // namespace bos
