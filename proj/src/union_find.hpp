#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace jsj::detail {

// Disjoint sets where every element carries a parity relative to its root.
// Plain unions use parity 0. A union that contradicts the recorded parities
// marks the class as conflicted.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(n), parity_(n, 0), conflict_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  // Root of x and parity of x relative to it.
  std::pair<int, int> find(int x) {
    int parity = 0;
    int root = x;
    while (parent_[root] != root) {
      parity ^= parity_[root];
      root = parent_[root];
    }
    // Path compression, rewriting parities along the way.
    int p = parity;
    while (parent_[x] != root) {
      int next = parent_[x];
      int next_parity = p ^ parity_[x];
      parent_[x] = root;
      parity_[x] = static_cast<char>(p);
      x = next;
      p = next_parity;
    }
    return {root, parity};
  }

  int root(int x) { return find(x).first; }

  // Records parity(a) xor parity(b) == relation.
  void unite(int a, int b, int relation = 0) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa ^ pb) != relation) conflict_[ra] = 1;
      return;
    }
    parent_[rb] = ra;
    parity_[rb] = static_cast<char>(pa ^ pb ^ relation);
    conflict_[ra] = conflict_[ra] || conflict_[rb];
  }

  bool conflicted(int x) { return conflict_[root(x)]; }

 private:
  std::vector<int> parent_;
  std::vector<char> parity_;
  std::vector<char> conflict_;
};

}  // namespace jsj::detail
