#pragma once

// Combinatorial planar and annular R-diagrams stored as half-edge maps.
//
// Conventions: faces are listed clockwise; the outer boundary cycle is read
// clockwise and the inner boundary cycle counterclockwise. Boundary cycles
// consist of face darts whose twin lies in no face.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/cancel.hpp"
#include "twobridge/farey.hpp"
#include "twobridge/word.hpp"

namespace twobridge {

struct Dart {
    int twin = -1;
    int origin = -1;
    Word label;

    friend bool operator==(const Dart&, const Dart&) = default;
};

// Vertices are 0 .. vertex_count-1 and dart ids are indices into `darts`.
struct PlanarMap {
    int vertex_count = 0;
    std::vector<Dart> darts;
    std::vector<std::vector<int>> faces;
    std::vector<int> outer;  // clockwise
    std::vector<int> inner;  // counterclockwise; empty unless holes = 1
    int holes = 0;

    bool empty() const { return vertex_count == 0 && darts.empty(); }
    int edge_count() const { return static_cast<int>(darts.size()) / 2; }
    int target(int dart) const { return darts.at(darts.at(dart).twin).origin; }
    Word cycle_label(const std::vector<int>& cycle) const;
    Word face_label(int face) const { return cycle_label(faces.at(face)); }
    Word outer_label() const { return cycle_label(outer); }
    Word inner_label() const { return cycle_label(inner); }

    int add_vertex() { return vertex_count++; }
    // Adds an edge from -> to with the given label and returns the dart
    // from -> to; its twin carries the inverse label.
    int add_edge(int from, int to, const Word& label);

    friend bool operator==(const PlanarMap&, const PlanarMap&) = default;
};

// An annular diagram is a map with holes = 1 and both boundary cycles set.
using AnnularDiagram = PlanarMap;

// Violations of the map axioms (twin involution, inverse twin labels,
// closed face and boundary cycles, Euler relation 1 - h = V - E + F).
std::vector<std::string> map_problems(const PlanarMap& map);
// Throws DomainError carrying the first problem.
void check_map(const PlanarMap& map);

bool is_connected(const PlanarMap& map);

// d_M(v): darts with origin v. d_M(D): length of the face cycle.
int vertex_degree(const PlanarMap& map, int vertex);
int face_degree(const PlanarMap& map, int face);
std::vector<bool> boundary_vertices(const PlanarMap& map);

// Interior vertices have degree >= p and faces degree >= q.
bool is_pq_map(const PlanarMap& map, int p, int q);

// No pair of faces D1, D2 sharing an edge e reads e δ1 and δ2 e^-1 with
// φ(δ2) = φ(δ1)^-1. Throws DomainError if some face label is not in R.
bool is_reduced_diagram(const PlanarMap& map, const SymmetrizedSet& R);

struct GaussBonnetReport {
    long lhs = 0;  // 4 - 4h
    long rhs = 0;  // boundary + interior + face terms
    long boundary_term = 0;
    long interior_term = 0;
    long face_term = 0;
    long boundary_vertices = 0;  // V•, each vertex once
    long boundary_edges = 0;     // E•, with multiplicity along boundary cycles
    bool holds = false;          // lhs <= rhs
    bool equality = false;
    bool identity = false;       // lhs = rhs + V• - E•
};
// Throws DomainError on a disconnected or empty map.
GaussBonnetReport gauss_bonnet_check(const PlanarMap& map);

// The one-layer fan for s = q1/p1 in I2(1/p): q1 square faces pinched at
// alternate outer vertices. Outer label u_s, every face label in R(u_{1/p}),
// inner label alternating with initial letter a^-1.
AnnularDiagram build_fan(std::int64_t p, const Slope& s);

// Glues one more layer of faces onto the inner boundary, pinched at the
// inner vertices of degree 2.
void add_inner_layer(AnnularDiagram& diagram, std::int64_t p);

struct StructureReport {
    bool annular = false;
    bool boundaries_simple = false;
    bool boundary_degrees = false;
    bool interior_degrees = false;
    bool face_degrees = false;
    int shared_vertices = 0;         // |σ ∩ inner boundary|
    std::vector<std::string> failures;

    bool passed() const {
        return annular && boundaries_simple && boundary_degrees && interior_degrees && face_degrees;
    }
};
StructureReport validate_structure(const AnnularDiagram& diagram);

// Successive outer boundary layers as lists of face indices. Throws
// DomainError when a layer does not have the pinched-necklace shape.
std::vector<std::vector<int>> layer_decomposition(const AnnularDiagram& diagram);

enum class DiagramFormat { Json, Dot, Svg };
DiagramFormat parse_diagram_format(std::string_view name);

// Throws DomainError for an empty diagram.
std::string emit_diagram(const PlanarMap& map, DiagramFormat format);
// Inverse of the JSON emitter; validates the map axioms.
PlanarMap parse_diagram_json(std::string_view text);

} // namespace twobridge
