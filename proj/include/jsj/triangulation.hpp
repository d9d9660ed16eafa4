#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jsj/graph.hpp"
#include "jsj/perm.hpp"

namespace jsj {

// Face f of a tetrahedron is the face opposite vertex f.
struct FaceRef {
  int tet = 0;
  int face = 0;
  friend bool operator==(const FaceRef&, const FaceRef&) = default;
  friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

// Partner of a glued face slot. `perm` sends this tetrahedron's vertex labels
// to the partner's; the partner face is perm[face].
struct Gluing {
  int tet = 0;
  Perm4 perm;
  friend bool operator==(const Gluing&, const Gluing&) = default;
};

// Generalized triangulation as a gluing table. Each face slot is either
// boundary or glued to exactly one other slot, with the partner slot holding
// the inverse correspondence.
class Triangulation {
 public:
  Triangulation() = default;
  explicit Triangulation(int tetrahedra) : slots_(tetrahedra) {}

  int size() const { return static_cast<int>(slots_.size()); }
  // Returns the index of the first new tetrahedron.
  int add_tetrahedra(int count);

  const std::optional<Gluing>& gluing(int tet, int face) const;
  bool is_boundary(int tet, int face) const { return !gluing(tet, face).has_value(); }

  // Glues face `face` of `tet` to face perm[face] of `other`. Both slots must
  // be free and distinct.
  void join(int tet, int face, int other, Perm4 perm);
  void unjoin(int tet, int face);

  // Appends a copy of `other` with tetrahedron indices shifted; returns the
  // offset.
  int append(const Triangulation& other);

  int boundary_face_count() const;
  int glued_pair_count() const;

  // Throws StructureError naming the first slot that breaks the involution or
  // face-correspondence invariants.
  void validate() const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  void check_slot(int tet, int face) const;

  std::vector<std::array<std::optional<Gluing>, 4>> slots_;
};

// Edge e of a tetrahedron joins kEdgeVertices[e][0] < kEdgeVertices[e][1].
inline constexpr int kEdgeVertices[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
int edge_index(int a, int b);

// One node per tetrahedron, one arc per glued face pair (loops for a
// tetrahedron glued to itself).
Multigraph dual_graph(const Triangulation& t);

// Vertex and edge classes after all face identifications.
struct Skeleton {
  std::vector<std::array<int, 4>> vertex_of;  // per tetrahedron corner
  std::vector<std::array<int, 6>> edge_of;    // per tetrahedron edge
  int vertex_count = 0;
  int edge_count = 0;
  int triangle_count = 0;
  int tetrahedron_count = 0;
  // Edge classes identified with themselves in reverse.
  std::vector<int> reversed_edges;

  long long euler_characteristic() const {
    return static_cast<long long>(vertex_count) - edge_count + triangle_count - tetrahedron_count;
  }
};

Skeleton skeleton(const Triangulation& t);

struct SkeletonCounts {
  int vertices = 0;
  int edges = 0;
  int triangles = 0;
  int tetrahedra = 0;
  friend bool operator==(const SkeletonCounts&, const SkeletonCounts&) = default;
};

SkeletonCounts skeleton_counts(const Triangulation& t);

bool is_closed(const Triangulation& t);
bool is_orientable(const Triangulation& t);

// A ±1 label per tetrahedron making every gluing orientation-reversing, or
// nullopt if none exists. Within each connected piece the lowest-index
// tetrahedron gets +1.
std::optional<std::vector<int>> orientation(const Triangulation& t);

struct VertexLink {
  int vertex = 0;
  int triangles = 0;
  int edges = 0;
  int vertices = 0;
  int boundary_edges = 0;
  long long euler = 0;
  bool closed() const { return boundary_edges == 0; }
  // Sphere for interior vertices, disk for boundary vertices.
  bool ok() const { return closed() ? euler == 2 : euler == 1; }
};

struct LinkReport {
  std::vector<VertexLink> vertices;
  std::vector<int> reversed_edges;

  bool manifold() const;
  // Human-readable description of the first failure, empty if none.
  std::string first_failure() const;
};

LinkReport vertex_link_check(const Triangulation& t);

struct BoundaryComponent {
  std::vector<FaceRef> faces;
  int triangles = 0;
  int edges = 0;
  int vertices = 0;
  long long euler = 0;
  // 1 - χ/2; meaningful for closed orientable surfaces.
  std::optional<int> genus;
};

struct SurfaceSummary {
  std::vector<BoundaryComponent> components;
};

// Components are ordered by their lowest face slot.
SurfaceSummary boundary_summary(const Triangulation& t);

// For a boundary face and one of its edges {a, b}, the boundary face across
// that edge and where a and b land in it.
struct BoundaryNeighbor {
  FaceRef face;
  int a = 0;
  int b = 0;
};
BoundaryNeighbor boundary_neighbor(const Triangulation& t, FaceRef face, int a, int b);

// "tri <n>" header, then one line per tetrahedron with four slots, each
// "bdry" or "<partner>:<face>:<p0p1p2p3>".
std::string write_triangulation(const Triangulation& t);
Triangulation read_triangulation(std::string_view text);

}  // namespace jsj
