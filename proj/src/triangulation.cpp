#include "jsj/triangulation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "jsj/error.hpp"
#include "union_find.hpp"

namespace jsj {

namespace {

std::string slot_name(int tet, int face) {
  return "slot (" + std::to_string(tet) + "," + std::to_string(face) + ")";
}

// The face other than `face` that contains edge {a, b}.
int other_face_on_edge(int a, int b, int face) {
  for (int x = 0; x < 4; ++x)
    if (x != a && x != b && x != face) return x;
  return -1;
}

}  // namespace

int Triangulation::add_tetrahedra(int count) {
  int first = size();
  slots_.resize(slots_.size() + count);
  return first;
}

void Triangulation::check_slot(int tet, int face) const {
  if (tet < 0 || tet >= size() || face < 0 || face > 3)
    throw StructureError("no such " + slot_name(tet, face));
}

const std::optional<Gluing>& Triangulation::gluing(int tet, int face) const {
  check_slot(tet, face);
  return slots_[tet][face];
}

void Triangulation::join(int tet, int face, int other, Perm4 perm) {
  check_slot(tet, face);
  int other_face = perm[face];
  check_slot(other, other_face);
  if (tet == other && face == other_face)
    throw StructureError(slot_name(tet, face) + " glued to itself");
  if (slots_[tet][face] || slots_[other][other_face])
    throw StructureError("gluing " + slot_name(tet, face) + " to " +
                         slot_name(other, other_face) + ": slot already in use");
  slots_[tet][face] = Gluing{other, perm};
  slots_[other][other_face] = Gluing{tet, perm.inverse()};
}

void Triangulation::unjoin(int tet, int face) {
  check_slot(tet, face);
  auto& g = slots_[tet][face];
  if (!g) return;
  slots_[g->tet][g->perm[face]].reset();
  g.reset();
}

int Triangulation::append(const Triangulation& other) {
  int offset = size();
  for (const auto& row : other.slots_) {
    auto copy = row;
    for (auto& g : copy)
      if (g) g->tet += offset;
    slots_.push_back(copy);
  }
  return offset;
}

int Triangulation::boundary_face_count() const {
  int count = 0;
  for (const auto& row : slots_)
    for (const auto& g : row) count += !g;
  return count;
}

int Triangulation::glued_pair_count() const { return (4 * size() - boundary_face_count()) / 2; }

void Triangulation::validate() const {
  for (int t = 0; t < size(); ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = slots_[t][f];
      if (!g) continue;
      if (g->tet < 0 || g->tet >= size())
        throw StructureError(slot_name(t, f) + " points at missing tetrahedron " +
                             std::to_string(g->tet));
      int f2 = g->perm[f];
      if (g->tet == t && f2 == f) throw StructureError(slot_name(t, f) + " glued to itself");
      const auto& back = slots_[g->tet][f2];
      if (!back || back->tet != t || back->perm != g->perm.inverse())
        throw StructureError(slot_name(t, f) + " is not matched by " + slot_name(g->tet, f2));
    }
}

int edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int e = 0; e < 6; ++e)
    if (kEdgeVertices[e][0] == a && kEdgeVertices[e][1] == b) return e;
  throw InputError("not an edge: " + std::to_string(a) + "," + std::to_string(b));
}

Multigraph dual_graph(const Triangulation& t) {
  t.validate();
  Multigraph g(t.size());
  for (int a = 0; a < t.size(); ++a)
    for (int f = 0; f < 4; ++f) {
      const auto& glue = t.gluing(a, f);
      if (!glue) continue;
      FaceRef here{a, f}, there{glue->tet, glue->perm[f]};
      if (here < there) g.add_arc(a, glue->tet);
    }
  return g;
}

Skeleton skeleton(const Triangulation& t) {
  const int n = t.size();
  detail::ParityUnionFind corners(4 * n);
  detail::ParityUnionFind edges(6 * n);
  for (int a = 0; a < n; ++a)
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.gluing(a, f);
      if (!g) continue;
      const Perm4& s = g->perm;
      for (int v = 0; v < 4; ++v)
        if (v != f) corners.unite(4 * a + v, 4 * g->tet + s[v]);
      for (int e = 0; e < 6; ++e) {
        int x = kEdgeVertices[e][0], y = kEdgeVertices[e][1];
        if (x == f || y == f) continue;
        int relation = s[x] > s[y] ? 1 : 0;
        edges.unite(6 * a + e, 6 * g->tet + edge_index(s[x], s[y]), relation);
      }
    }

  Skeleton out;
  out.vertex_of.resize(n);
  out.edge_of.resize(n);
  out.tetrahedron_count = n;
  out.triangle_count = 4 * n - t.glued_pair_count();
  std::map<int, int> vertex_ids, edge_ids;
  std::set<int> reversed;
  for (int a = 0; a < n; ++a) {
    for (int v = 0; v < 4; ++v) {
      int r = corners.root(4 * a + v);
      auto [it, fresh] = vertex_ids.try_emplace(r, static_cast<int>(vertex_ids.size()));
      out.vertex_of[a][v] = it->second;
    }
    for (int e = 0; e < 6; ++e) {
      int r = edges.root(6 * a + e);
      auto [it, fresh] = edge_ids.try_emplace(r, static_cast<int>(edge_ids.size()));
      out.edge_of[a][e] = it->second;
      if (edges.conflicted(r)) reversed.insert(it->second);
    }
  }
  out.vertex_count = static_cast<int>(vertex_ids.size());
  out.edge_count = static_cast<int>(edge_ids.size());
  out.reversed_edges.assign(reversed.begin(), reversed.end());
  return out;
}

SkeletonCounts skeleton_counts(const Triangulation& t) {
  auto s = skeleton(t);
  return {s.vertex_count, s.edge_count, s.triangle_count, s.tetrahedron_count};
}

bool is_closed(const Triangulation& t) { return t.boundary_face_count() == 0; }

std::optional<std::vector<int>> orientation(const Triangulation& t) {
  const int n = t.size();
  std::vector<int> label(n, 0);
  for (int start = 0; start < n; ++start) {
    if (label[start]) continue;
    label[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (int f = 0; f < 4; ++f) {
        const auto& g = t.gluing(a, f);
        if (!g) continue;
        // Consistent iff label(a) * label(b) * sign(perm) == -1.
        int want = -label[a] * g->perm.sign();
        if (!label[g->tet]) {
          label[g->tet] = want;
          queue.push_back(g->tet);
        } else if (label[g->tet] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return label;
}

bool is_orientable(const Triangulation& t) { return orientation(t).has_value(); }

bool LinkReport::manifold() const {
  if (!reversed_edges.empty()) return false;
  return std::all_of(vertices.begin(), vertices.end(), [](const VertexLink& v) { return v.ok(); });
}

std::string LinkReport::first_failure() const {
  if (!reversed_edges.empty())
    return "edge " + std::to_string(reversed_edges.front()) + " is identified with itself reversed";
  for (const auto& v : vertices)
    if (!v.ok())
      return "vertex " + std::to_string(v.vertex) + " has a " + (v.closed() ? "closed" : "bounded") +
             " link with euler characteristic " + std::to_string(v.euler);
  return {};
}

LinkReport vertex_link_check(const Triangulation& t) {
  const int n = t.size();
  auto skel = skeleton(t);

  // Link vertex (a, v, w): the point of the link of corner v lying on edge vw.
  auto link_vertex = [](int a, int v, int w) { return 16 * a + 4 * v + w; };
  detail::ParityUnionFind points(16 * n);
  for (int a = 0; a < n; ++a)
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.gluing(a, f);
      if (!g) continue;
      for (int v = 0; v < 4; ++v)
        for (int w = 0; w < 4; ++w)
          if (v != f && w != f && v != w)
            points.unite(link_vertex(a, v, w), link_vertex(g->tet, g->perm[v], g->perm[w]));
    }

  std::vector<VertexLink> links(skel.vertex_count);
  std::vector<std::set<int>> point_classes(skel.vertex_count);
  for (int a = 0; a < n; ++a)
    for (int v = 0; v < 4; ++v) {
      auto& link = links[skel.vertex_of[a][v]];
      link.triangles += 1;
      for (int w = 0; w < 4; ++w) {
        if (w == v) continue;
        point_classes[skel.vertex_of[a][v]].insert(points.root(link_vertex(a, v, w)));
        // The link triangle's side opposite w lies in face w.
        link.boundary_edges += t.is_boundary(a, w);
      }
    }
  LinkReport report;
  report.reversed_edges = skel.reversed_edges;
  for (int i = 0; i < skel.vertex_count; ++i) {
    auto& link = links[i];
    link.vertex = i;
    link.vertices = static_cast<int>(point_classes[i].size());
    link.edges = (3 * link.triangles + link.boundary_edges) / 2;
    link.euler = static_cast<long long>(link.vertices) - link.edges + link.triangles;
    report.vertices.push_back(link);
  }
  return report;
}

BoundaryNeighbor boundary_neighbor(const Triangulation& t, FaceRef face, int a, int b) {
  if (!t.is_boundary(face.tet, face.face) || a == face.face || b == face.face || a == b)
    throw InputError("not a boundary edge");
  int tet = face.tet;
  int x = a, y = b;
  int next = other_face_on_edge(x, y, face.face);
  // Each step crosses a glued (slot, edge) pair, and no pair repeats.
  for (int steps = 0; steps <= 12 * t.size(); ++steps) {
    const auto& g = t.gluing(tet, next);
    if (!g) return {{tet, next}, x, y};
    int entered = g->perm[next];
    x = g->perm[x];
    y = g->perm[y];
    tet = g->tet;
    next = other_face_on_edge(x, y, entered);
  }
  throw StructureError("edge walk from " + slot_name(face.tet, face.face) + " does not terminate");
}

SurfaceSummary boundary_summary(const Triangulation& t) {
  const int n = t.size();
  auto corner = [](int tet, int face, int v) { return 16 * tet + 4 * face + v; };
  detail::ParityUnionFind corners(16 * n);
  detail::ParityUnionFind faces(4 * n);
  for (int a = 0; a < n; ++a)
    for (int f = 0; f < 4; ++f) {
      if (!t.is_boundary(a, f)) continue;
      for (int e = 0; e < 6; ++e) {
        int x = kEdgeVertices[e][0], y = kEdgeVertices[e][1];
        if (x == f || y == f) continue;
        auto nb = boundary_neighbor(t, {a, f}, x, y);
        faces.unite(4 * a + f, 4 * nb.face.tet + nb.face.face);
        corners.unite(corner(a, f, x), corner(nb.face.tet, nb.face.face, nb.a));
        corners.unite(corner(a, f, y), corner(nb.face.tet, nb.face.face, nb.b));
      }
    }

  SurfaceSummary summary;
  std::map<int, int> component_of_root;
  std::vector<std::set<int>> corner_classes;
  for (int a = 0; a < n; ++a)
    for (int f = 0; f < 4; ++f) {
      if (!t.is_boundary(a, f)) continue;
      int root = faces.root(4 * a + f);
      auto [it, fresh] = component_of_root.try_emplace(root, static_cast<int>(summary.components.size()));
      if (fresh) {
        summary.components.emplace_back();
        corner_classes.emplace_back();
      }
      auto& comp = summary.components[it->second];
      comp.faces.push_back({a, f});
      for (int v = 0; v < 4; ++v)
        if (v != f) corner_classes[it->second].insert(corners.root(corner(a, f, v)));
    }
  for (std::size_t i = 0; i < summary.components.size(); ++i) {
    auto& comp = summary.components[i];
    comp.triangles = static_cast<int>(comp.faces.size());
    comp.edges = 3 * comp.triangles / 2;
    comp.vertices = static_cast<int>(corner_classes[i].size());
    comp.euler = static_cast<long long>(comp.vertices) - comp.edges + comp.triangles;
    if (comp.euler % 2 == 0 && comp.euler <= 2) comp.genus = static_cast<int>(1 - comp.euler / 2);
  }
  return summary;
}

std::string write_triangulation(const Triangulation& t) {
  std::ostringstream out;
  out << "tri " << t.size() << '\n';
  for (int a = 0; a < t.size(); ++a) {
    for (int f = 0; f < 4; ++f) {
      if (f) out << ' ';
      const auto& g = t.gluing(a, f);
      if (!g)
        out << "bdry";
      else
        out << g->tet << ':' << g->perm[f] << ':' << g->perm.str();
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

Triangulation read_triangulation(std::string_view text) {
  std::optional<int> count;
  std::vector<std::array<std::optional<Gluing>, 4>> rows;
  std::vector<int> row_line;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_tokens(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!count) {
      if (tokens.size() != 2 || tokens[0] != "tri") throw ParseError(line_no, "expected 'tri <count>'");
      count = parse_int(tokens[1]);
      if (!count || *count < 0) throw ParseError(line_no, "bad tetrahedron count");
      continue;
    }
    if (static_cast<int>(rows.size()) == *count) throw ParseError(line_no, "more rows than the header declares");
    if (tokens.size() != 4) throw ParseError(line_no, "expected 4 face slots");
    std::array<std::optional<Gluing>, 4> row;
    for (int f = 0; f < 4; ++f) {
      auto tok = tokens[f];
      if (tok == "bdry") continue;
      auto c1 = tok.find(':');
      auto c2 = tok.find(':', c1 == std::string_view::npos ? c1 : c1 + 1);
      if (c1 == std::string_view::npos || c2 == std::string_view::npos)
        throw ParseError(line_no, "bad slot '" + std::string(tok) + "'");
      auto partner = parse_int(tok.substr(0, c1));
      auto face = parse_int(tok.substr(c1 + 1, c2 - c1 - 1));
      auto perm = Perm4::parse(tok.substr(c2 + 1));
      if (!partner || *partner < 0 || *partner >= *count)
        throw ParseError(line_no, "partner out of range in '" + std::string(tok) + "'");
      if (!face || !perm || (*perm)[f] != *face)
        throw ParseError(line_no, "inconsistent face or permutation in '" + std::string(tok) + "'");
      row[f] = Gluing{*partner, *perm};
    }
    rows.push_back(row);
    row_line.push_back(line_no);
    if (end == text.size()) break;
  }
  if (!count) throw ParseError(line_no, "missing 'tri' header");
  if (static_cast<int>(rows.size()) != *count)
    throw ParseError(line_no, "expected " + std::to_string(*count) + " rows, found " + std::to_string(rows.size()));

  Triangulation t(*count);
  for (int a = 0; a < *count; ++a)
    for (int f = 0; f < 4; ++f) {
      const auto& g = rows[a][f];
      if (!g) continue;
      int f2 = g->perm[f];
      const auto& back = rows[g->tet][f2];
      if ((g->tet == a && f2 == f) || !back || back->tet != a || back->perm != g->perm.inverse())
        throw ParseError(row_line[a], slot_name(a, f) + " is not matched by its partner");
      if (FaceRef{a, f} < FaceRef{g->tet, f2}) t.join(a, f, g->tet, g->perm);
    }
  return t;
}

}  // namespace jsj
