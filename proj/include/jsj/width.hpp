#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "jsj/graph.hpp"

namespace jsj {

enum class Exactness { exact, upper_bound, lower_bound };

std::string_view to_string(Exactness e);

// A width value with its certificate. Upper bounds and exact values carry a
// witness decomposition whose width equals `value`; lower bounds carry none.
struct WidthResult {
  int value = 0;
  Exactness exactness = Exactness::exact;
  std::optional<TreeDecomposition> tree_witness;
  std::optional<PathDecomposition> path_witness;
};

inline constexpr int kDefaultExactBudget = 25;
// Exact searches index nodes by bit position in a 64-bit mask.
inline constexpr int kMaxExactNodes = 64;

// Exact treewidth by search over elimination-order prefixes. Loops and
// parallel arcs are ignored. Throws BudgetExceeded when the graph has more
// than `budget` nodes.
WidthResult treewidth_exact(const Multigraph& g, int budget = kDefaultExactBudget);

// Exact pathwidth as the vertex separation number, by search over vertex
// orderings. Same budget contract as treewidth_exact.
WidthResult pathwidth_exact(const Multigraph& g, int budget = kDefaultExactBudget);

// Best of the min-degree and min-fill elimination heuristics; ties between
// candidate nodes go to the lowest index.
WidthResult treewidth_upper(const Multigraph& g);

// Greedy vertex-separation ordering.
WidthResult pathwidth_upper(const Multigraph& g);

// max(degeneracy, minor-min-width).
WidthResult treewidth_lower(const Multigraph& g);

int degeneracy(const Multigraph& g);
int minor_min_width(const Multigraph& g);

// Tree decomposition induced by eliminating nodes in `order` (a permutation of
// all nodes); width = max number of higher neighbors in the filled graph.
TreeDecomposition elimination_decomposition(const Multigraph& g,
                                            const std::vector<int>& order);

// Path decomposition whose i-th bag holds order[i] and every earlier node
// with a neighbor at position >= i; its width is the vertex separation of
// the ordering.
PathDecomposition ordering_decomposition(const Multigraph& g,
                                         const std::vector<int>& order);

int vertex_separation(const Multigraph& g, const std::vector<int>& order);

}  // namespace jsj
