#pragma once

#include <array>

#include "jsj/torus.hpp"
#include "jsj/triangulation.hpp"

namespace jsj {

// A boundary torus made of two boundary faces, with each face's three vertex
// labels placed in the universal cover of the torus. Edge vectors
// (position differences) are the edge slopes in the torus basis.
struct TorusBoundary {
  std::array<FaceRef, 2> faces;
  // position[i][v] for the labels v != faces[i].face.
  std::array<std::array<Vec2, 4>, 2> position;
  // Orientation labels of the two faces' tetrahedra, relative to each other.
  std::array<int, 2> sign{1, 1};
};

// Checks that both faces are boundary, that they are each other's
// neighbors across all three edges, and that the positions agree across
// every edge and span a unimodular lattice. Returns an empty string on
// success, else a description.
std::string check_torus_boundary(const Triangulation& t, const TorusBoundary& torus);

// Layers one tetrahedron across the edge with vector `edge`; returns the new
// boundary, expressed in the same basis.
TorusBoundary layer_tetrahedron(Triangulation& t, const TorusBoundary& torus, const Vec2& edge);

// Appends one tetrahedron per recorded flip; returns the top boundary in the
// source basis.
TorusBoundary layer_chain(Triangulation& t, const TorusBoundary& source, const LayeredGluing& gluing);

// Glues `from` to `to` by the face identification whose induced map on
// positions is exactly `map` (from-basis to to-basis).
void glue_tori(Triangulation& t, const TorusBoundary& from, const TorusBoundary& to, const TorusMap& map);

}  // namespace jsj
