#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jsj {

// Unordered arc between two node indices; u == v is a loop.
struct Arc {
  int u = 0;
  int v = 0;

  bool is_loop() const { return u == v; }
  // Endpoints with the smaller index first.
  Arc normalized() const { return u <= v ? Arc{u, v} : Arc{v, u}; }
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Finite multigraph on nodes 0..node_count-1. Parallel arcs and loops are
// allowed; arc order is part of the value (it keys provenance downstream).
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int node_count);
  Multigraph(int node_count, std::vector<Arc> arcs);

  int node_count() const { return node_count_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(std::size_t i) const { return arcs_.at(i); }

  // Returns the index of the new arc.
  std::size_t add_arc(int u, int v);
  int add_node();

  // A loop contributes 2 to the degree of its node.
  int degree(int v) const;
  std::vector<int> degrees() const;
  int max_degree() const;

  // Neighbor lists of the underlying simple graph (no loops, no repeats),
  // sorted ascending.
  std::vector<std::vector<int>> simple_adjacency() const;

  // Loops dropped, parallel arcs merged, arcs sorted.
  Multigraph simplified() const;

  bool is_connected() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  // Labeled equality of the arc multisets (node correspondence is the identity).
  bool same_arcs(const Multigraph& other) const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.node_count_ == b.node_count_ && a.arcs_ == b.arcs_;
  }

 private:
  void check_node(int v) const;

  int node_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::string> labels_;
};

// Edge-list document: optional "p <node_count>" header, then "<u> <v>" per
// arc; '#' starts a comment.
Multigraph parse_graph(std::string_view text);
std::string write_graph(const Multigraph& g);

// Bags indexed by host node; the host is given by its arc list.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> host_arcs;

  int width() const;
};

struct PathDecomposition {
  std::vector<std::vector<int>> bags;

  int width() const;
  TreeDecomposition as_tree() const;
};

struct DecompositionReport {
  bool host_is_tree = false;
  bool node_coverage = false;
  bool arc_coverage = false;
  bool subtree_property = false;
  int width = -1;
  // First failure found, empty when valid.
  std::string detail;

  bool valid() const {
    return host_is_tree && node_coverage && arc_coverage && subtree_property;
  }
};

DecompositionReport validate_tree_decomposition(const Multigraph& g,
                                                const TreeDecomposition& d);
DecompositionReport validate_path_decomposition(const Multigraph& g,
                                                const PathDecomposition& d);

// Replaces arc i by a path through plan[i] fresh nodes. Arc order is kept,
// with each subdivided arc expanded in place; new nodes are appended.
Multigraph subdivide_arcs(const Multigraph& g,
                          const std::map<std::size_t, int>& plan);

Multigraph complete_binary_tree(int height);
Multigraph grid_graph(int side);
Multigraph path_graph(int nodes);
Multigraph cycle_graph(int nodes);
Multigraph complete_graph(int nodes);
Multigraph star_graph(int leaves);

}  // namespace jsj
