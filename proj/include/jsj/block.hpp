#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "jsj/layering.hpp"
#include "jsj/torus.hpp"
#include "jsj/triangulation.hpp"

namespace jsj {

// Ordered 2-dimensional Δ-complex. Side i of a triangle is opposite corner
// i; glued sides match their endpoints in increasing corner order.
struct SurfaceTriangle {
  std::array<int, 3> corner{};                           // vertex ids
  std::array<std::optional<std::pair<int, int>>, 3> side;  // (triangle, side)
};

struct Surface {
  int vertex_count = 0;
  std::vector<SurfaceTriangle> triangles;
  // Per hole, the triangle whose side 2 is the hole's boundary loop.
  std::vector<int> hole_triangles;
};

// Torus with k holes, each bounded by a single-vertex loop; 3k+2 triangles.
Surface triangulate_punctured_torus(int k);

struct SurfaceCounts {
  int vertices = 0;
  int edges = 0;
  int triangles = 0;
  int boundary_edges = 0;
  long long euler() const { return static_cast<long long>(vertices) - edges + triangles; }
};

// Counts after identifying glued sides.
SurfaceCounts surface_counts(const Surface& s);

// Prism over triangle i is tetrahedra 3i, 3i+1, 3i+2.
struct Block {
  int k = 0;
  Triangulation triangulation;
  // One per hole, in the basis (hole loop, circle direction).
  std::vector<TorusBoundary> tori;
  Slope fiber_slope{0, 1};
};

// Triangulation of (torus with k holes) x circle with 9k+6 tetrahedra.
Block build_block(int k);

}  // namespace jsj
