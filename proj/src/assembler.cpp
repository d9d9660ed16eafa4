#include "jsj/assembler.hpp"

#include <map>

#include "jsj/block.hpp"
#include "jsj/error.hpp"

namespace jsj {

namespace {

std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

TorusBoundary shifted(TorusBoundary torus, int offset) {
  for (auto& f : torus.faces) f.tet += offset;
  return torus;
}

}  // namespace

std::string to_string(WidthMode m) {
  switch (m) {
    case WidthMode::automatic: return "auto";
    case WidthMode::exact: return "exact";
    case WidthMode::heuristic: return "heuristic";
  }
  return "?";
}

std::optional<WidthMode> parse_width_mode(std::string_view s) {
  if (s == "auto") return WidthMode::automatic;
  if (s == "exact") return WidthMode::exact;
  if (s == "heuristic") return WidthMode::heuristic;
  return std::nullopt;
}

void check_assemblable(const Multigraph& g) {
  if (g.node_count() == 0) throw InputError("graph has no nodes");
  for (int v = 0; v < g.node_count(); ++v)
    if (g.degree(v) == 0)
      throw InputError("node " + std::to_string(v) + " is isolated; a block needs at least one boundary torus");
  if (!g.is_connected())
    throw InputError("graph is disconnected; assemble each component separately");
}

DeltaChoice compute_delta(const Multigraph& g, const AssemblyConfig& config) {
  if (config.K < 1) throw InputError("K must be at least 1");
  if (config.delta_override && *config.delta_override < 1) throw InputError("delta override must be at least 1");
  DeltaChoice out;
  bool exact = config.width_mode == WidthMode::exact ||
               (config.width_mode == WidthMode::automatic && g.node_count() <= config.exact_budget);
  if (exact) {
    int budget = std::max(config.exact_budget, g.node_count());
    try {
      out.treewidth = treewidth_exact(g, budget);
      out.pathwidth = pathwidth_exact(g, budget);
    } catch (const Error& e) {
      throw InputError(std::string("exact width computation failed: ") + e.what());
    }
  } else {
    out.treewidth = treewidth_upper(g);
    out.pathwidth = pathwidth_upper(g);
  }
  out.delta = std::max<std::int64_t>(18 * (out.treewidth.value + 1), 4 * (3 * out.pathwidth.value + 1));
  if (config.delta_override) {
    out.delta = *config.delta_override;
    out.overridden = true;
  }
  return out;
}

std::vector<std::array<int, 2>> assign_boundary_tori(const Multigraph& g) {
  std::vector<int> next(g.node_count(), 0);
  std::vector<std::array<int, 2>> out;
  out.reserve(g.arc_count());
  for (const auto& a : g.arcs()) {
    int first = next[a.u]++;
    int second = next[a.v]++;
    out.push_back({first, second});
  }
  return out;
}

Assembly build_manifold(const Multigraph& g, const AssemblyConfig& config) {
  check_assemblable(g);
  auto choice = compute_delta(g, config);

  Assembly out;
  auto& t = out.triangulation;
  auto& meta = out.metadata;
  meta.delta = choice.delta;
  meta.K = config.K;
  meta.delta_overridden = choice.overridden;
  meta.seed = config.seed;
  meta.treewidth = choice.treewidth.value;
  meta.treewidth_exactness = choice.treewidth.exactness;
  meta.pathwidth = choice.pathwidth.value;
  meta.pathwidth_exactness = choice.pathwidth.exactness;

  std::map<int, Block> blocks;
  std::vector<std::vector<TorusBoundary>> tori(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) {
    int k = g.degree(v);
    auto it = blocks.find(k);
    if (it == blocks.end()) it = blocks.emplace(k, build_block(k)).first;
    const Block& block = it->second;
    NodeRecord rec;
    rec.node = v;
    rec.k = k;
    rec.first = t.append(block.triangulation);
    rec.count = block.triangulation.size();
    for (const auto& torus : block.tori) {
      tori[v].push_back(shifted(torus, rec.first));
      rec.tori.push_back(tori[v].back().faces);
    }
    meta.fiber_slope = block.fiber_slope;
    meta.nodes.push_back(rec);
  }

  const std::int64_t budget = meta.distance_budget();
  const Slope fiber = meta.fiber_slope;
  auto ends = assign_boundary_tori(g);
  for (std::size_t e = 0; e < g.arc_count(); ++e) {
    const auto& arc = g.arc(e);
    ArcRecord rec;
    rec.arc = static_cast<int>(e);
    rec.u = arc.u;
    rec.v = arc.v;
    rec.tori = ends[e];
    rec.map = pick_high_distance_map(budget, fiber, fiber, mix(config.seed ^ mix(e)));
    auto layered = realize_as_layers(rec.map, fiber, fiber);
    rec.flips = layered.flips;
    rec.terminal = layered.terminal;
    rec.achieved_distance = layered.achieved_distance;
    const auto& source = tori[arc.u][ends[e][0]];
    const auto& target = tori[arc.v][ends[e][1]];
    rec.source_faces = source.faces;
    rec.target_faces = target.faces;
    rec.first = t.size();
    auto top = layer_chain(t, source, layered);
    rec.count = t.size() - rec.first;
    glue_tori(t, top, target, rec.map);
    meta.arcs.push_back(rec);
  }
  meta.total_tetrahedra = t.size();

  t.validate();
  if (!is_closed(t)) throw ConstructionError("assembled triangulation still has boundary");
  if (!is_orientable(t)) throw ConstructionError("assembled triangulation is not orientable");
  return out;
}

}  // namespace jsj
