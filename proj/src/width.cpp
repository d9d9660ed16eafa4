#include "jsj/width.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_set>

#include "jsj/error.hpp"

namespace jsj {

std::string_view to_string(Exactness e) {
  switch (e) {
    case Exactness::exact:
      return "exact";
    case Exactness::upper_bound:
      return "upper_bound";
    case Exactness::lower_bound:
      return "lower_bound";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    f(v);
  }
}

std::vector<std::vector<int>> components(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int w : adj[members[i]])
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

// One connected component relabeled 0..size-1 for mask-based search.
struct MaskGraph {
  std::vector<int> original;
  std::vector<Mask> nb;
  int size() const { return static_cast<int>(nb.size()); }
  Mask full() const { return size() == 64 ? ~Mask{0} : bit(size()) - 1; }
};

MaskGraph make_mask_graph(const std::vector<std::vector<int>>& adj,
                          const std::vector<int>& members) {
  MaskGraph mg;
  mg.original = members;
  std::vector<int> local(adj.size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
  mg.nb.assign(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (int w : adj[members[i]]) mg.nb[i] |= bit(local[w]);
  return mg;
}

// Nodes outside S ∪ {v} reachable from v along paths whose interior lies in S:
// the neighbors of v once every node of S has been eliminated.
Mask eliminated_neighbors(const MaskGraph& g, Mask S, int v) {
  Mask visited = bit(v);
  Mask frontier = bit(v);
  Mask result = 0;
  while (frontier) {
    Mask next = 0;
    for_each_bit(frontier, [&](int x) { next |= g.nb[x]; });
    next &= ~visited;
    visited |= next;
    result |= next & ~S;
    frontier = next & S;
  }
  return result;
}

class TreewidthSearch {
 public:
  TreewidthSearch(const MaskGraph& g, int k) : g_(g), k_(k) {}

  bool run() { return decide(0); }
  const std::vector<int>& order() const { return order_; }

 private:
  bool decide(Mask S) {
    Mask rest = g_.full() & ~S;
    if (std::popcount(rest) <= k_ + 1) {
      for_each_bit(rest, [&](int v) { order_.push_back(v); });
      return true;
    }
    if (failed_.count(S)) return false;

    std::vector<Mask> q(g_.size(), 0);
    for_each_bit(rest, [&](int v) { q[v] = eliminated_neighbors(g_, S, v); });

    // A simplicial node of the eliminated graph can go first without loss.
    int forced = -1;
    bool clique_too_big = false;
    for_each_bit(rest, [&](int v) {
      if (forced >= 0 || clique_too_big) return;
      bool simplicial = true;
      for_each_bit(q[v], [&](int u) {
        if (((q[v] & ~bit(u)) & ~q[u]) != 0) simplicial = false;
      });
      if (!simplicial) return;
      if (std::popcount(q[v]) > k_)
        clique_too_big = true;
      else
        forced = v;
    });
    if (clique_too_big) return fail(S);
    if (forced >= 0) {
      order_.push_back(forced);
      if (decide(S | bit(forced))) return true;
      order_.pop_back();
      return fail(S);
    }

    if (degeneracy_of(rest, q) > k_) return fail(S);

    std::vector<int> cand;
    for_each_bit(rest, [&](int v) {
      if (std::popcount(q[v]) <= k_) cand.push_back(v);
    });
    std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
      return std::popcount(q[a]) < std::popcount(q[b]);
    });
    for (int v : cand) {
      order_.push_back(v);
      if (decide(S | bit(v))) return true;
      order_.pop_back();
    }
    return fail(S);
  }

  bool fail(Mask S) {
    failed_.insert(S);
    return false;
  }

  // Degeneracy of the graph on `rest` whose adjacency is given by q.
  static int degeneracy_of(Mask rest, const std::vector<Mask>& q) {
    int best = 0;
    Mask alive = rest;
    while (alive) {
      int pick = -1;
      int pick_deg = 1 << 30;
      for_each_bit(alive, [&](int v) {
        int d = std::popcount(q[v] & alive);
        if (d < pick_deg) {
          pick_deg = d;
          pick = v;
        }
      });
      best = std::max(best, pick_deg);
      alive &= ~bit(pick);
    }
    return best;
  }

  const MaskGraph& g_;
  int k_;
  std::vector<int> order_;
  std::unordered_set<Mask> failed_;
};

class SeparationSearch {
 public:
  SeparationSearch(const MaskGraph& g, int k) : g_(g), k_(k) {}

  bool run() { return decide(0); }
  const std::vector<int>& order() const { return order_; }

 private:
  int boundary(Mask S) const {
    int c = 0;
    for_each_bit(S, [&](int v) { c += (g_.nb[v] & ~S) != 0; });
    return c;
  }

  bool decide(Mask S) {
    if (S == g_.full()) return true;
    if (failed_.count(S)) return false;
    Mask rest = g_.full() & ~S;

    // A node whose neighbors are all placed never enlarges any later boundary
    // when moved forward, so it can be placed now.
    int forced = -1;
    for_each_bit(rest, [&](int v) {
      if (forced < 0 && (g_.nb[v] & ~S) == 0) forced = v;
    });
    if (forced >= 0) {
      order_.push_back(forced);
      if (decide(S | bit(forced))) return true;
      order_.pop_back();
      return fail(S);
    }

    std::vector<std::pair<int, int>> cand;
    for_each_bit(rest, [&](int v) {
      int b = boundary(S | bit(v));
      if (b <= k_) cand.emplace_back(b, v);
    });
    std::sort(cand.begin(), cand.end());
    for (auto [b, v] : cand) {
      order_.push_back(v);
      if (decide(S | bit(v))) return true;
      order_.pop_back();
    }
    return fail(S);
  }

  bool fail(Mask S) {
    failed_.insert(S);
    return false;
  }

  const MaskGraph& g_;
  int k_;
  std::vector<int> order_;
  std::unordered_set<Mask> failed_;
};

void check_budget(const Multigraph& g, int budget) {
  if (budget > kMaxExactNodes)
    throw InputError("exact solver budget cannot exceed " + std::to_string(kMaxExactNodes));
  if (g.node_count() > budget)
    throw BudgetExceeded("graph has " + std::to_string(g.node_count()) +
                         " nodes, over the exact budget of " + std::to_string(budget) +
                         "; use the heuristic bounds instead");
  if (g.node_count() == 0) throw InputError("graph has no nodes");
}

std::vector<int> to_original(const MaskGraph& mg, const std::vector<int>& local) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(mg.original[v]);
  return out;
}

// Per-component orders glued end to end; components are independent for both
// width measures.
template <typename Search>
std::vector<int> exact_order(const Multigraph& g, int lower, int upper,
                             const std::vector<int>& upper_order, int& value) {
  auto adj = g.simple_adjacency();
  std::vector<int> order;
  value = 0;
  for (const auto& members : components(adj)) {
    MaskGraph mg = make_mask_graph(adj, members);
    int k = std::max(0, lower);
    std::vector<int> local;
    for (;; ++k) {
      if (k >= upper) break;
      Search search(mg, k);
      if (search.run()) {
        local = search.order();
        break;
      }
    }
    if (local.empty()) {
      // Component needs the full upper bound: reuse the heuristic order.
      std::vector<char> in(g.node_count(), 0);
      for (int v : members) in[v] = 1;
      for (int v : upper_order)
        if (in[v]) order.push_back(v);
      value = std::max(value, upper);
      continue;
    }
    value = std::max(value, k);
    auto part = to_original(mg, local);
    order.insert(order.end(), part.begin(), part.end());
  }
  return order;
}

std::vector<int> min_degree_order(const std::vector<std::vector<int>>& adj, bool min_fill) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::set<int>> h(n);
  for (int v = 0; v < n; ++v) h[v] = {adj[v].begin(), adj[v].end()};
  std::vector<char> gone(n, 0);
  std::vector<int> order;
  order.reserve(n);
  auto fill_in = [&](int v) {
    long long missing = 0;
    for (auto a = h[v].begin(); a != h[v].end(); ++a)
      for (auto b = std::next(a); b != h[v].end(); ++b)
        if (!h[*a].count(*b)) ++missing;
    return missing;
  };
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    long long best = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long long score = min_fill ? fill_in(v) : static_cast<long long>(h[v].size());
      if (pick < 0 || score < best) {
        pick = v;
        best = score;
      }
    }
    gone[pick] = 1;
    order.push_back(pick);
    std::vector<int> nbrs(h[pick].begin(), h[pick].end());
    for (int a : nbrs) {
      h[a].erase(pick);
      for (int b : nbrs)
        if (a != b) h[a].insert(b);
    }
    h[pick].clear();
  }
  return order;
}

std::vector<int> greedy_separation_order(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> placed(n, 0);
  std::vector<int> outside(n);  // unplaced neighbors of each node
  for (int v = 0; v < n; ++v) outside[v] = static_cast<int>(adj[v].size());
  std::vector<int> order;
  order.reserve(n);
  // Change of the boundary size if v were placed next.
  auto delta = [&](int v) {
    int d = outside[v] > 0 ? 1 : 0;
    for (int u : adj[v])
      if (placed[u] && outside[u] == 1) --d;
    return d;
  };
  std::vector<char> touched(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    std::tuple<int, int, std::size_t> best{};
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      // Prefer the smallest boundary growth, then nodes adjacent to the placed
      // prefix, then low degree; remaining ties go to the lowest index.
      std::tuple<int, int, std::size_t> key{delta(v), touched[v] ? 0 : 1, adj[v].size()};
      if (pick < 0 || key < best) {
        pick = v;
        best = key;
      }
    }
    placed[pick] = 1;
    order.push_back(pick);
    for (int u : adj[pick]) {
      --outside[u];
      touched[u] = 1;
    }
  }
  return order;
}

std::vector<int> bfs_order(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> seen(n, 0);
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return adj[a].size() < adj[b].size(); });
  for (int s : by_degree) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      int v = order[head++];
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
    }
  }
  return order;
}

std::vector<int> best_elimination_order(const Multigraph& g);
std::vector<int> best_separation_order(const Multigraph& g);

}  // namespace

TreeDecomposition elimination_decomposition(const Multigraph& g,
                                            const std::vector<int>& order) {
  const int n = g.node_count();
  if (static_cast<int>(order.size()) != n) throw InputError("order is not a permutation");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0)
      throw InputError("order is not a permutation");
    pos[order[i]] = i;
  }
  auto adj = g.simple_adjacency();
  std::vector<std::set<int>> h(n);
  for (int v = 0; v < n; ++v) h[v] = {adj[v].begin(), adj[v].end()};

  TreeDecomposition d;
  d.bags.resize(n);
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> higher;
    for (int w : h[v])
      if (pos[w] > i) higher.push_back(w);
    for (int a : higher)
      for (int b : higher)
        if (a != b) h[a].insert(b);
    d.bags[i] = higher;
    d.bags[i].push_back(v);
    std::sort(d.bags[i].begin(), d.bags[i].end());
    if (higher.empty()) {
      roots.push_back(i);
    } else {
      int parent = *std::min_element(higher.begin(), higher.end(),
                                     [&](int a, int b) { return pos[a] < pos[b]; });
      d.host_arcs.emplace_back(i, pos[parent]);
    }
  }
  for (std::size_t r = 1; r < roots.size(); ++r) d.host_arcs.emplace_back(roots[r - 1], roots[r]);
  return d;
}

PathDecomposition ordering_decomposition(const Multigraph& g,
                                         const std::vector<int>& order) {
  const int n = g.node_count();
  if (static_cast<int>(order.size()) != n) throw InputError("order is not a permutation");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0)
      throw InputError("order is not a permutation");
    pos[order[i]] = i;
  }
  auto adj = g.simple_adjacency();
  // last[v]: latest position among v and its neighbors.
  std::vector<int> last(n);
  for (int v = 0; v < n; ++v) {
    last[v] = pos[v];
    for (int w : adj[v]) last[v] = std::max(last[v], pos[w]);
  }
  PathDecomposition d;
  d.bags.resize(n);
  for (int v = 0; v < n; ++v)
    for (int i = pos[v]; i <= last[v]; ++i) d.bags[i].push_back(v);
  for (auto& b : d.bags) std::sort(b.begin(), b.end());
  return d;
}

int vertex_separation(const Multigraph& g, const std::vector<int>& order) {
  return ordering_decomposition(g, order).width();
}

namespace {

std::vector<int> best_elimination_order(const Multigraph& g) {
  auto adj = g.simple_adjacency();
  auto by_degree = min_degree_order(adj, false);
  auto by_fill = min_degree_order(adj, true);
  return elimination_decomposition(g, by_fill).width() <
                 elimination_decomposition(g, by_degree).width()
             ? by_fill
             : by_degree;
}

std::vector<int> best_separation_order(const Multigraph& g) {
  auto adj = g.simple_adjacency();
  auto greedy = greedy_separation_order(adj);
  auto bfs = bfs_order(adj);
  return vertex_separation(g, bfs) < vertex_separation(g, greedy) ? bfs : greedy;
}

}  // namespace

WidthResult treewidth_upper(const Multigraph& g) {
  if (g.node_count() == 0) throw InputError("graph has no nodes");
  WidthResult r;
  r.exactness = Exactness::upper_bound;
  r.tree_witness = elimination_decomposition(g, best_elimination_order(g));
  r.value = r.tree_witness->width();
  return r;
}

WidthResult pathwidth_upper(const Multigraph& g) {
  if (g.node_count() == 0) throw InputError("graph has no nodes");
  WidthResult r;
  r.exactness = Exactness::upper_bound;
  r.path_witness = ordering_decomposition(g, best_separation_order(g));
  r.value = r.path_witness->width();
  return r;
}

int degeneracy(const Multigraph& g) {
  auto adj = g.simple_adjacency();
  const int n = g.node_count();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
  std::vector<char> gone(n, 0);
  int best = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    best = std::max(best, deg[pick]);
    gone[pick] = 1;
    for (int w : adj[pick])
      if (!gone[w]) --deg[w];
  }
  return best;
}

int minor_min_width(const Multigraph& g) {
  auto adj = g.simple_adjacency();
  const int n = g.node_count();
  std::vector<std::set<int>> h(n);
  for (int v = 0; v < n; ++v) h[v] = {adj[v].begin(), adj[v].end()};
  std::vector<char> gone(n, 0);
  int best = 0;
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int x = 0; x < n; ++x)
      if (!gone[x] && (v < 0 || h[x].size() < h[v].size())) v = x;
    best = std::max(best, static_cast<int>(h[v].size()));
    gone[v] = 1;
    if (h[v].empty()) continue;
    // Contract v into its lowest-degree neighbor.
    int u = -1;
    for (int w : h[v])
      if (u < 0 || h[w].size() < h[u].size()) u = w;
    for (int w : h[v]) {
      h[w].erase(v);
      if (w != u) {
        h[w].insert(u);
        h[u].insert(w);
      }
    }
    h[v].clear();
  }
  return best;
}

WidthResult treewidth_lower(const Multigraph& g) {
  if (g.node_count() == 0) throw InputError("graph has no nodes");
  WidthResult r;
  r.exactness = Exactness::lower_bound;
  r.value = std::max(degeneracy(g), minor_min_width(g));
  return r;
}

WidthResult treewidth_exact(const Multigraph& g, int budget) {
  check_budget(g, budget);
  auto upper_order = best_elimination_order(g);
  int upper = elimination_decomposition(g, upper_order).width();
  int lower = treewidth_lower(g).value;
  int value = 0;
  auto order = exact_order<TreewidthSearch>(g, lower, upper, upper_order, value);
  WidthResult r;
  r.exactness = Exactness::exact;
  r.tree_witness = elimination_decomposition(g, order);
  r.value = r.tree_witness->width();
  if (r.value != value) throw ConstructionError("treewidth witness width mismatch");
  return r;
}

WidthResult pathwidth_exact(const Multigraph& g, int budget) {
  check_budget(g, budget);
  auto upper_order = best_separation_order(g);
  int upper = vertex_separation(g, upper_order);
  int lower = treewidth_lower(g).value;
  int value = 0;
  auto order = exact_order<SeparationSearch>(g, lower, upper, upper_order, value);
  WidthResult r;
  r.exactness = Exactness::exact;
  r.path_witness = ordering_decomposition(g, order);
  r.value = r.path_witness->width();
  if (r.value != value) throw ConstructionError("pathwidth witness width mismatch");
  return r;
}

}  // namespace jsj
