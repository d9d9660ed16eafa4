#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jsj/graph.hpp"
#include "jsj/layering.hpp"
#include "jsj/torus.hpp"
#include "jsj/triangulation.hpp"
#include "jsj/width.hpp"

namespace jsj {

// automatic: exact widths when the graph fits the exact budget, heuristic
// upper bounds otherwise. exact: always exact (may throw BudgetExceeded).
// heuristic: always upper bounds.
enum class WidthMode { automatic, exact, heuristic };
std::string to_string(WidthMode m);
std::optional<WidthMode> parse_width_mode(std::string_view s);

struct AssemblyConfig {
  std::int64_t K = 1;
  std::optional<std::int64_t> delta_override;
  WidthMode width_mode = WidthMode::automatic;
  int exact_budget = kDefaultExactBudget;
  // Picks among equally good gluing maps; outputs are a function of the seed.
  std::uint64_t seed = 0;
};

struct DeltaChoice {
  std::int64_t delta = 0;
  WidthResult treewidth;
  WidthResult pathwidth;
  bool overridden = false;
};

// max(18(tw+1), 4(3pw+1)) from the configured widths, unless overridden.
DeltaChoice compute_delta(const Multigraph& g, const AssemblyConfig& config);

// For arc i, the boundary torus index used at its first and second endpoint.
// Each node hands out 0, 1, 2, ... to its incident arc endpoints in arc order.
std::vector<std::array<int, 2>> assign_boundary_tori(const Multigraph& g);

struct NodeRecord {
  int node = 0;
  int k = 0;
  int first = 0;
  int count = 0;
  std::vector<std::array<FaceRef, 2>> tori;
};

struct ArcRecord {
  int arc = 0;
  int u = 0;
  int v = 0;
  std::array<int, 2> tori{};
  TorusMap map;
  std::vector<Flip> flips;
  TorusMap terminal;
  std::int64_t achieved_distance = 0;
  int first = 0;
  int count = 0;
  // Block faces the chain is attached to, at u and at v.
  std::array<FaceRef, 2> source_faces;
  std::array<FaceRef, 2> target_faces;
};

struct AssemblyMetadata {
  std::int64_t delta = 0;
  std::int64_t K = 1;
  bool delta_overridden = false;
  std::uint64_t seed = 0;
  int treewidth = 0;
  Exactness treewidth_exactness = Exactness::exact;
  int pathwidth = 0;
  Exactness pathwidth_exactness = Exactness::exact;
  Slope fiber_slope{0, 1};
  std::vector<NodeRecord> nodes;
  std::vector<ArcRecord> arcs;
  int total_tetrahedra = 0;

  std::int64_t distance_budget() const { return K * delta; }
};

struct Assembly {
  Triangulation triangulation;
  AssemblyMetadata metadata;
};

// Rejects graphs with no nodes, isolated nodes or several components.
void check_assemblable(const Multigraph& g);

// One block per node, one layered chain per arc.
Assembly build_manifold(const Multigraph& g, const AssemblyConfig& config = {});

}  // namespace jsj
