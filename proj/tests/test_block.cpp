#include <doctest.h>

#include "jsj/block.hpp"
#include "jsj/error.hpp"
#include "jsj/layering.hpp"

using namespace jsj;

namespace {

void check_closed_manifold(const Triangulation& t) {
  t.validate();
  CHECK(is_closed(t));
  CHECK(is_orientable(t));
  auto s = skeleton(t);
  CHECK(s.euler_characteristic() == 0);
  auto links = vertex_link_check(t);
  CHECK_MESSAGE(links.manifold(), links.first_failure());
  for (const auto& v : links.vertices) CHECK(v.euler == 2);
}

}  // namespace

TEST_CASE("punctured torus triangle counts") {
  CHECK(triangulate_punctured_torus(1).triangles.size() == 5);
  CHECK(triangulate_punctured_torus(3).triangles.size() == 11);
  CHECK_THROWS_AS(triangulate_punctured_torus(0), InputError);
  for (int k = 1; k <= 6; ++k) {
    auto s = triangulate_punctured_torus(k);
    auto counts = surface_counts(s);
    CAPTURE(k);
    CHECK(counts.triangles == 3 * k + 2);
    CHECK(counts.euler() == -k);
    CHECK(counts.boundary_edges == k);
    CHECK(counts.vertices == k + 1);
    CHECK(counts.vertices == s.vertex_count);
    CHECK(s.hole_triangles.size() == static_cast<std::size_t>(k));
  }
}

TEST_CASE("build_block invariants") {
  for (int k = 1; k <= 5; ++k) {
    CAPTURE(k);
    auto block = build_block(k);
    const auto& t = block.triangulation;
    t.validate();
    CHECK(t.size() == 9 * k + 6);
    CHECK_FALSE(is_closed(t));
    CHECK(is_orientable(t));
    CHECK(skeleton(t).euler_characteristic() == 0);
    CHECK(dual_graph(t).is_connected());
    auto links = vertex_link_check(t);
    CHECK_MESSAGE(links.manifold(), links.first_failure());

    auto summary = boundary_summary(t);
    REQUIRE(summary.components.size() == static_cast<std::size_t>(k));
    for (const auto& c : summary.components) {
      CHECK(c.triangles == 2);
      CHECK(c.vertices == 1);
      CHECK(c.euler == 0);
      CHECK(c.genus == 1);
    }
    REQUIRE(block.tori.size() == static_cast<std::size_t>(k));
    CHECK(block.fiber_slope == Slope(0, 1));
    for (int i = 0; i < k; ++i) {
      CHECK(check_torus_boundary(t, block.tori[i]) == "");
      auto faces = summary.components[i].faces;
      std::array<FaceRef, 2> expected = block.tori[i].faces;
      std::sort(expected.begin(), expected.end());
      CHECK(faces == std::vector<FaceRef>(expected.begin(), expected.end()));
      // Meridian and fiber both appear as edges.
      const auto& pos = block.tori[i].position[0];
      const int f = block.tori[i].faces[0].face;
      std::vector<Vec2> edges;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          if (a != f && b != f && a != b) edges.push_back(pos[b] - pos[a]);
      CHECK(std::find(edges.begin(), edges.end(), Vec2{1, 0}) != edges.end());
      CHECK(std::find(edges.begin(), edges.end(), Vec2{0, 1}) != edges.end());
    }
  }
}

TEST_CASE("two N(1) blocks glued directly by the swap") {
  auto block = build_block(1);
  Triangulation t;
  int a = t.append(block.triangulation);
  int b = t.append(block.triangulation);
  auto shift = [](TorusBoundary torus, int offset) {
    for (auto& f : torus.faces) f.tet += offset;
    return torus;
  };
  glue_tori(t, shift(block.tori[0], a), shift(block.tori[0], b), TorusMap(0, 1, 1, 0));
  check_closed_manifold(t);
  CHECK(t.size() == 30);
}

TEST_CASE("a layered chain between two blocks") {
  auto block = build_block(1);
  const Slope fiber = block.fiber_slope;
  for (std::int64_t d : {2, 5, 9}) {
    CAPTURE(d);
    auto map = pick_high_distance_map(d, fiber, fiber);
    auto layered = realize_as_layers(map, fiber, fiber);
    Triangulation t;
    t.append(block.triangulation);
    int b = t.append(block.triangulation);
    int before = t.size();
    auto top = layer_chain(t, block.tori[0], layered);
    CHECK(t.size() - before == layered.tetrahedron_count());
    CHECK(check_torus_boundary(t, top) == "");
    auto target = block.tori[0];
    for (auto& f : target.faces) f.tet += b;
    glue_tori(t, top, target, map);
    check_closed_manifold(t);

    // The chain is a path with doubled arcs.
    auto g = dual_graph(t);
    for (int i = before; i + 1 < t.size(); ++i) {
      int between = 0;
      for (const auto& arc : g.arcs())
        between += (arc.u == i && arc.v == i + 1) || (arc.u == i + 1 && arc.v == i);
      CHECK(between == 2);
    }
  }
}

TEST_CASE("a block glued to itself closes up") {
  auto block = build_block(2);
  const Slope fiber = block.fiber_slope;
  auto map = pick_high_distance_map(6, fiber, fiber);
  auto layered = realize_as_layers(map, fiber, fiber);
  Triangulation t = block.triangulation;
  auto top = layer_chain(t, block.tori[0], layered);
  glue_tori(t, top, block.tori[1], map);
  check_closed_manifold(t);
}

TEST_CASE("glue_tori refuses maps the faces cannot carry") {
  auto block = build_block(1);
  Triangulation t;
  t.append(block.triangulation);
  int b = t.append(block.triangulation);
  auto target = block.tori[0];
  for (auto& f : target.faces) f.tet += b;
  CHECK_THROWS_AS(glue_tori(t, block.tori[0], target, TorusMap(1, 2, 0, 1)), ConstructionError);
  CHECK(t.boundary_face_count() == 4);
}
