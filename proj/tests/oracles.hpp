#pragma once

// Brute-force reference computations used only by the tests. Each one is
// written from the definition and shares no code with the library routine it
// checks.

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "jsj/graph.hpp"

namespace oracle {

inline std::vector<std::set<int>> simple_sets(const jsj::Multigraph& g) {
  std::vector<std::set<int>> adj(g.node_count());
  for (const auto& a : g.arcs())
    if (a.u != a.v) {
      adj[a.u].insert(a.v);
      adj[a.v].insert(a.u);
    }
  return adj;
}

// Minimum over all elimination orders of the largest higher-neighbor count.
inline int treewidth_by_permutations(const jsj::Multigraph& g) {
  const int n = g.node_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = n;
  do {
    auto h = simple_sets(g);
    std::vector<char> gone(n, 0);
    int width = 0;
    for (int v : perm) {
      std::vector<int> nb;
      for (int w : h[v])
        if (!gone[w]) nb.push_back(w);
      width = std::max(width, static_cast<int>(nb.size()));
      for (int a : nb)
        for (int b : nb)
          if (a != b) h[a].insert(b);
      gone[v] = 1;
    }
    best = std::min(best, width);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Minimum over all orderings of the vertex separation number.
inline int pathwidth_by_permutations(const jsj::Multigraph& g) {
  const int n = g.node_count();
  auto adj = simple_sets(g);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = n;
  do {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    int worst = 0;
    for (int i = 0; i < n; ++i) {
      int count = 0;
      for (int j = 0; j <= i; ++j) {
        bool reaches_after = false;
        for (int w : adj[perm[j]])
          if (pos[w] > i) reaches_after = true;
        count += reaches_after;
      }
      worst = std::max(worst, count);
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Repeated removal of a minimum-degree node.
inline int degeneracy_by_removal(const jsj::Multigraph& g) {
  auto adj = simple_sets(g);
  std::set<int> alive;
  for (int v = 0; v < g.node_count(); ++v) alive.insert(v);
  int best = 0;
  while (!alive.empty()) {
    int pick = *alive.begin();
    for (int v : alive)
      if (adj[v].size() < adj[pick].size()) pick = v;
    best = std::max(best, static_cast<int>(adj[pick].size()));
    for (int w : adj[pick]) adj[w].erase(pick);
    alive.erase(pick);
  }
  return best;
}

inline jsj::Multigraph random_graph(std::mt19937& rng, int nodes, double p) {
  jsj::Multigraph g(nodes);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < nodes; ++i)
    for (int j = i + 1; j < nodes; ++j)
      if (coin(rng)) g.add_arc(i, j);
  return g;
}

// Farey graph restricted to primitive (p, q) with |p|, |q| <= box, stored
// with q > 0 or as (1, 0). Distances are plain BFS over explicit arcs
// |ps - qr| = 1.
class FareyBox {
 public:
  explicit FareyBox(int box) {
    for (int q = 0; q <= box; ++q)
      for (int p = -box; p <= box; ++p)
        if (std::gcd(p, q) == 1 && (q > 0 || p == 1)) {
          index_[{p, q}] = static_cast<int>(nodes_.size());
          nodes_.push_back({p, q});
        }
    adj_.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      auto [p, q] = nodes_[i];
      for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
        auto [r, s] = nodes_[j];
        if (std::abs(p * s - q * r) == 1) {
          adj_[i].push_back(static_cast<int>(j));
          adj_[j].push_back(static_cast<int>(i));
        }
      }
    }
  }

  const std::vector<std::pair<int, int>>& nodes() const { return nodes_; }
  int index(int p, int q) const { return index_.at({p, q}); }

  std::vector<int> distances_from(int source) const {
    std::vector<int> dist(nodes_.size(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj_[v])
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
    return dist;
  }

 private:
  std::vector<std::pair<int, int>> nodes_;
  std::map<std::pair<int, int>, int> index_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace oracle
