#include "jsj/layering.hpp"

#include <algorithm>
#include <optional>

#include "jsj/error.hpp"

namespace jsj {

namespace {

std::array<int, 3> face_labels(int face) {
  std::array<int, 3> out{};
  int i = 0;
  for (int v = 0; v < 4; ++v)
    if (v != face) out[i++] = v;
  return out;
}

// Ordered labels (u, v, w) of the face with position[v] - position[u] == edge.
std::optional<std::array<int, 3>> find_edge(const TorusBoundary& torus, int i, const Vec2& edge) {
  auto labels = face_labels(torus.faces[i].face);
  const auto& pos = torus.position[i];
  for (int a : labels)
    for (int b : labels)
      if (a != b && pos[b] - pos[a] == edge) {
        int c = 6 - torus.faces[i].face - a - b;
        return std::array<int, 3>{a, b, c};
      }
  return std::nullopt;
}

}  // namespace

std::string check_torus_boundary(const Triangulation& t, const TorusBoundary& torus) {
  for (int i = 0; i < 2; ++i)
    if (!t.is_boundary(torus.faces[i].tet, torus.faces[i].face)) return "face is not on the boundary";
  if (torus.faces[0] == torus.faces[1]) return "the two faces coincide";
  for (int i = 0; i < 2; ++i) {
    auto labels = face_labels(torus.faces[i].face);
    for (int x = 0; x < 3; ++x)
      for (int y = x + 1; y < 3; ++y) {
        int a = labels[x], b = labels[y];
        auto nb = boundary_neighbor(t, torus.faces[i], a, b);
        if (nb.face != torus.faces[1 - i]) return "faces are not adjacent across every edge";
        const auto& here = torus.position[i];
        const auto& there = torus.position[1 - i];
        if (here[b] - here[a] != there[nb.b] - there[nb.a]) return "positions disagree across an edge";
      }
    const auto& p = torus.position[i];
    Int area = cross(p[labels[1]] - p[labels[0]], p[labels[2]] - p[labels[0]]);
    if (area != 1 && area != -1) return "edge vectors do not form a basis";
  }
  return {};
}

TorusBoundary layer_tetrahedron(Triangulation& t, const TorusBoundary& torus, const Vec2& edge) {
  auto first = find_edge(torus, 0, edge);
  auto second = find_edge(torus, 1, edge);
  if (!first || !second) throw ConstructionError("boundary torus has no edge with the requested vector");
  auto [u, v, w] = *first;
  auto [u2, v2, w2] = *second;
  const int n = t.add_tetrahedra(1);

  // New labels 0,1 ride the flipped edge; 2 sits over the first face's third
  // vertex and 3 over the second's.
  std::array<int, 4> to_first{u, v, w, torus.faces[0].face};
  std::array<int, 4> to_second{u2, v2, torus.faces[1].face, w2};
  Perm4 p1 = *Perm4::from_image(to_first);
  Perm4 p2 = *Perm4::from_image(to_second);
  int sign_from_first = -torus.sign[0] * p1.sign();
  int sign_from_second = -torus.sign[1] * p2.sign();
  if (sign_from_first != sign_from_second)
    throw ConstructionError("layered tetrahedron cannot be oriented consistently");
  t.join(n, 3, torus.faces[0].tet, p1);
  t.join(n, 2, torus.faces[1].tet, p2);

  const auto& pos1 = torus.position[0];
  const auto& pos2 = torus.position[1];
  std::array<Vec2, 4> pos{pos1[u], pos1[v], pos1[w], pos1[u] + (pos2[w2] - pos2[u2])};
  if (pos[3] == pos[2]) throw ConstructionError("layered tetrahedron is degenerate");

  TorusBoundary out;
  out.faces = {FaceRef{n, 0}, FaceRef{n, 1}};
  out.position = {pos, pos};
  out.sign = {sign_from_first, sign_from_first};
  return out;
}

TorusBoundary layer_chain(Triangulation& t, const TorusBoundary& source, const LayeredGluing& gluing) {
  TorusBoundary current = source;
  TorusMap frame;
  for (Flip flip : gluing.flips) {
    current = layer_tetrahedron(t, current, flipped_edge(frame, flip));
    frame = frame * flip_matrix(flip);
  }
  return current;
}

void glue_tori(Triangulation& t, const TorusBoundary& from, const TorusBoundary& to, const TorusMap& map) {
  // Label bijection face i of `from` -> face j of `to` compatible with map.
  auto match = [&](int i, int j) -> std::optional<Perm4> {
    auto src = face_labels(from.faces[i].face);
    auto dst = face_labels(to.faces[j].face);
    std::array<int, 3> order{0, 1, 2};
    do {
      bool ok = true;
      for (int x = 0; x < 3 && ok; ++x)
        for (int y = x + 1; y < 3 && ok; ++y) {
          Vec2 image = map(from.position[i][src[y]] - from.position[i][src[x]]);
          ok = image == to.position[j][dst[order[y]]] - to.position[j][dst[order[x]]];
        }
      if (ok) {
        std::array<int, 4> image{};
        image[from.faces[i].face] = to.faces[j].face;
        for (int x = 0; x < 3; ++x) image[src[x]] = dst[order[x]];
        return Perm4::from_image(image);
      }
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
  };

  for (int swap = 0; swap < 2; ++swap) {
    auto p0 = match(0, swap);
    auto p1 = match(1, 1 - swap);
    if (!p0 || !p1) continue;
    // Both faces must induce the same relative orientation.
    int s0 = -from.sign[0] * p0->sign() * to.sign[swap];
    int s1 = -from.sign[1] * p1->sign() * to.sign[1 - swap];
    if (s0 != s1) throw ConstructionError("torus gluing " + map.str() + " mixes orientations");
    t.join(from.faces[0].tet, from.faces[0].face, to.faces[swap].tet, *p0);
    t.join(from.faces[1].tet, from.faces[1].face, to.faces[1 - swap].tet, *p1);
    return;
  }
  throw ConstructionError("map " + map.str() + " is not realizable between these boundary tori");
}

}  // namespace jsj
