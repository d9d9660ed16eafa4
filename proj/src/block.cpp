#include "jsj/block.hpp"

#include <set>

#include "jsj/error.hpp"
#include "union_find.hpp"

namespace jsj {

namespace {

void join_sides(Surface& s, int a, int sa, int b, int sb) {
  s.triangles[a].side[sa] = std::make_pair(b, sb);
  s.triangles[b].side[sb] = std::make_pair(a, sa);
}

// Replaces triangle t = (c0,c1,c2) by a cone from a new vertex h whose slit
// along h-c0 is filled by a folded triangle; that triangle's side 2 becomes
// the boundary loop at h.
//   P = (h,c0,c1) reuses slot t, Q = (h,c1,c2), R = (h,c0,c2), S = (h,h,c0).
// Returns Q, which keeps t's orientation relative to the rest.
int insert_hole(Surface& s, int t) {
  const auto old = s.triangles[t];
  const int h = s.vertex_count++;
  const int p = t;
  const int q = static_cast<int>(s.triangles.size());
  const int r = q + 1;
  const int fold = q + 2;
  s.triangles.resize(s.triangles.size() + 3);
  auto [c0, c1, c2] = old.corner;
  s.triangles[p] = SurfaceTriangle{{h, c0, c1}, {}};
  s.triangles[q] = SurfaceTriangle{{h, c1, c2}, {}};
  s.triangles[r] = SurfaceTriangle{{h, c0, c2}, {}};
  s.triangles[fold] = SurfaceTriangle{{h, h, c0}, {}};

  // Outer sides: old side 2 is (c0,c1), side 0 is (c1,c2), side 1 is (c0,c2).
  const std::pair<int, int> outer[3] = {{q, 0}, {r, 0}, {p, 0}};
  for (int i = 0; i < 3; ++i) {
    if (!old.side[i]) continue;
    auto [n, ns] = *old.side[i];
    if (n == t) throw ConstructionError("hole inserted into a self-adjacent triangle");
    join_sides(s, outer[i].first, outer[i].second, n, ns);
  }
  join_sides(s, p, 1, q, 2);     // h-c1
  join_sides(s, q, 1, r, 1);     // h-c2
  join_sides(s, p, 2, fold, 1);  // h-c0, first copy
  join_sides(s, r, 2, fold, 0);  // h-c0, second copy
  s.hole_triangles.push_back(fold);
  return q;
}

// Vertex (level, corner) of a prism; level 0 is the bottom copy.
struct Symbol {
  int level;
  int corner;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

// The staircase split of a prism into three tetrahedra.
const Symbol kPiece[3][4] = {
    {{0, 0}, {0, 1}, {0, 2}, {1, 2}},
    {{0, 0}, {0, 1}, {1, 1}, {1, 2}},
    {{0, 0}, {1, 0}, {1, 1}, {1, 2}},
};

int label_of(int piece, Symbol s) {
  for (int v = 0; v < 4; ++v)
    if (kPiece[piece][v] == s) return v;
  return -1;
}

// Lower and upper (piece, face) over the side opposite corner `side`; the
// vertical square over corners i<j is split along a_i b_j.
struct SidePieces {
  int lower_piece, lower_face, upper_piece, upper_face;
};
const SidePieces kSide[3] = {
    {0, 0, 1, 0},  // corners (1,2)
    {0, 1, 2, 2},  // corners (0,2)
    {1, 3, 2, 3},  // corners (0,1)
};

std::pair<int, int> side_corners(int side) {
  switch (side) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

// Glues (piece px, face fx) of prism x to (piece py, face fy) of prism y,
// sending each symbol through `map`.
template <class Map>
void glue_pieces(Triangulation& t, int x, int px, int fx, int y, int py, int fy, Map map) {
  std::array<int, 4> image{};
  image[fx] = fy;
  for (int v = 0; v < 4; ++v) {
    if (v == fx) continue;
    int w = label_of(py, map(kPiece[px][v]));
    if (w < 0 || w == fy) throw ConstructionError("prism faces do not match");
    image[v] = w;
  }
  auto perm = Perm4::from_image(image);
  if (!perm) throw ConstructionError("prism face map is not a bijection");
  t.join(3 * x + px, fx, 3 * y + py, *perm);
}

}  // namespace

Surface triangulate_punctured_torus(int k) {
  if (k < 1) throw InputError("punctured torus needs at least one hole");
  Surface s;
  s.vertex_count = 1;
  // Square [0,1]^2 with corners bl, br, tr, tl all at vertex 0:
  // A = (bl, br, tr), B = (bl, tl, tr).
  s.triangles = {SurfaceTriangle{{0, 0, 0}, {}}, SurfaceTriangle{{0, 0, 0}, {}}};
  join_sides(s, 0, 0, 1, 2);  // right side to left side
  join_sides(s, 0, 1, 1, 1);  // diagonal
  join_sides(s, 0, 2, 1, 0);  // bottom to top
  int target = 0;
  for (int i = 0; i < k; ++i) target = insert_hole(s, target);
  return s;
}

SurfaceCounts surface_counts(const Surface& s) {
  const int n = static_cast<int>(s.triangles.size());
  detail::ParityUnionFind corners(3 * n);
  SurfaceCounts out;
  out.triangles = n;
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < 3; ++i) {
      const auto& nb = s.triangles[a].side[i];
      if (!nb) {
        ++out.boundary_edges;
        continue;
      }
      auto [ca, cb] = side_corners(i);
      auto [da, db] = side_corners(nb->second);
      corners.unite(3 * a + ca, 3 * nb->first + da);
      corners.unite(3 * a + cb, 3 * nb->first + db);
    }
  std::set<int> roots;
  for (int c = 0; c < 3 * n; ++c) roots.insert(corners.root(c));
  out.vertices = static_cast<int>(roots.size());
  out.edges = (3 * n + out.boundary_edges) / 2;
  return out;
}

Block build_block(int k) {
  Surface surface = triangulate_punctured_torus(k);
  const int n = static_cast<int>(surface.triangles.size());
  Block block;
  block.k = k;
  Triangulation& t = block.triangulation;
  t.add_tetrahedra(3 * n);

  for (int x = 0; x < n; ++x) {
    auto same = [](Symbol s) { return s; };
    glue_pieces(t, x, 0, 2, x, 1, 2, same);
    glue_pieces(t, x, 1, 1, x, 2, 1, same);
    // Bottom of the prism to its top by the identity of the surface.
    glue_pieces(t, x, 0, 3, x, 2, 0, [](Symbol s) { return Symbol{1, s.corner}; });

    for (int side = 0; side < 3; ++side) {
      const auto& nb = surface.triangles[x].side[side];
      if (!nb) continue;
      auto [y, other_side] = *nb;
      if (std::make_pair(x, side) > std::make_pair(y, other_side)) continue;
      auto [i, j] = side_corners(side);
      auto [i2, j2] = side_corners(other_side);
      auto across = [=](Symbol s) { return Symbol{s.level, s.corner == i ? i2 : j2}; };
      const auto& here = kSide[side];
      const auto& there = kSide[other_side];
      glue_pieces(t, x, here.lower_piece, here.lower_face, y, there.lower_piece, there.lower_face, across);
      glue_pieces(t, x, here.upper_piece, here.upper_face, y, there.upper_piece, there.upper_face, across);
    }
  }

  auto labels = orientation(t);
  if (!labels) throw ConstructionError("block is not orientable");
  for (int fold : surface.hole_triangles) {
    // Side 2 of the folded triangle is the loop; its square is split into
    // (a0,a1,b1) and (a0,b0,b1). Position = (corner, level).
    TorusBoundary torus;
    torus.faces = {FaceRef{3 * fold + kSide[2].lower_piece, kSide[2].lower_face},
                   FaceRef{3 * fold + kSide[2].upper_piece, kSide[2].upper_face}};
    for (int i = 0; i < 2; ++i) {
      int piece = i == 0 ? kSide[2].lower_piece : kSide[2].upper_piece;
      for (int v = 0; v < 4; ++v) {
        if (v == torus.faces[i].face) continue;
        torus.position[i][v] = Vec2{kPiece[piece][v].corner, kPiece[piece][v].level};
      }
      torus.sign[i] = (*labels)[torus.faces[i].tet];
    }
    block.tori.push_back(torus);
  }
  for (const auto& torus : block.tori)
    if (auto problem = check_torus_boundary(t, torus); !problem.empty())
      throw ConstructionError("block boundary torus: " + problem);
  return block;
}

}  // namespace jsj
