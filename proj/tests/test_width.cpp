#include <doctest.h>

#include <random>

#include "jsj/error.hpp"
#include "jsj/width.hpp"
#include "oracles.hpp"

using namespace jsj;

namespace {

void check_tree_witness(const Multigraph& g, const WidthResult& r) {
  REQUIRE(r.tree_witness.has_value());
  auto report = validate_tree_decomposition(g, *r.tree_witness);
  CHECK_MESSAGE(report.valid(), report.detail);
  CHECK(report.width == r.value);
}

void check_path_witness(const Multigraph& g, const WidthResult& r) {
  REQUIRE(r.path_witness.has_value());
  auto report = validate_path_decomposition(g, *r.path_witness);
  CHECK_MESSAGE(report.valid(), report.detail);
  CHECK(report.width == r.value);
}

}  // namespace

TEST_CASE("treewidth_exact examples") {
  auto g3 = grid_graph(3);
  auto r = treewidth_exact(g3);
  CHECK(r.value == 3);
  CHECK(r.exactness == Exactness::exact);
  check_tree_witness(g3, r);

  CHECK(treewidth_exact(Multigraph(1)).value == 0);

  auto k4 = complete_graph(4);
  CHECK(oracle::treewidth_by_permutations(k4) == 3);
  CHECK(treewidth_exact(k4).value == 3);
}

TEST_CASE("pathwidth_exact examples") {
  auto t4 = complete_binary_tree(4);
  auto r = pathwidth_exact(t4, kMaxExactNodes);
  CHECK(r.value == 2);
  check_path_witness(t4, r);

  CHECK(pathwidth_exact(path_graph(2)).value == 1);

  auto c5 = cycle_graph(5);
  CHECK(oracle::pathwidth_by_permutations(c5) == 2);
  CHECK(pathwidth_exact(c5).value == 2);
}

TEST_CASE("exact solvers refuse instances over budget") {
  auto g = grid_graph(6);
  CHECK_THROWS_AS(treewidth_exact(g), BudgetExceeded);
  CHECK_THROWS_AS(pathwidth_exact(g), BudgetExceeded);
  CHECK_THROWS_AS(pathwidth_exact(g, 100), InputError);
  CHECK_THROWS_AS(treewidth_exact(Multigraph(0)), InputError);
}

TEST_CASE("heuristic upper bounds") {
  auto t = complete_binary_tree(4);
  auto rt = treewidth_upper(t);
  CHECK(rt.value == 1);
  CHECK(rt.exactness == Exactness::upper_bound);
  check_tree_witness(t, rt);

  auto g4 = grid_graph(4);
  CHECK(treewidth_exact(g4).value == 4);
  CHECK(treewidth_upper(g4).value >= 4);
  CHECK(pathwidth_upper(g4).value >= 4);
  check_tree_witness(g4, treewidth_upper(g4));
  check_path_witness(g4, pathwidth_upper(g4));

  Multigraph empty(5);
  CHECK(treewidth_upper(empty).value == 0);
  CHECK(pathwidth_upper(empty).value == 0);
}

TEST_CASE("certified lower bounds") {
  CHECK(treewidth_lower(complete_graph(4)).value >= 3);
  CHECK(treewidth_lower(complete_graph(4)).exactness == Exactness::lower_bound);
  CHECK(oracle::degeneracy_by_removal(grid_graph(3)) == 2);
  CHECK(degeneracy(grid_graph(3)) == 2);
  CHECK(treewidth_lower(grid_graph(3)).value >= 2);
  CHECK(treewidth_lower(star_graph(4)).value >= 1);
  CHECK(treewidth_lower(Multigraph(3)).value == 0);
}

TEST_CASE("exact solvers agree with permutation brute force") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 7)(rng);
    double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
    auto g = oracle::random_graph(rng, n, p);
    CAPTURE(write_graph(g));
    CHECK(treewidth_exact(g).value == oracle::treewidth_by_permutations(g));
    CHECK(pathwidth_exact(g).value == oracle::pathwidth_by_permutations(g));
  }
}

TEST_CASE("width ordering invariants on small graphs") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 80; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 12)(rng);
    double p = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
    auto g = oracle::random_graph(rng, n, p);
    // Sprinkle loops and parallel arcs; neither changes either width.
    Multigraph noisy = g;
    for (int i = 0; i < 3 && n > 0; ++i) noisy.add_arc(i % n, i % n);
    if (g.arc_count() > 0) noisy.add_arc(g.arc(0).u, g.arc(0).v);
    CAPTURE(write_graph(noisy));

    auto lo = treewidth_lower(noisy);
    auto tw = treewidth_exact(noisy);
    auto up = treewidth_upper(noisy);
    auto pw = pathwidth_exact(noisy);
    auto pwu = pathwidth_upper(noisy);
    CHECK(lo.value <= tw.value);
    CHECK(tw.value <= up.value);
    CHECK(pw.value >= tw.value);
    CHECK(pw.value <= pwu.value);
    CHECK(tw.value == treewidth_exact(noisy.simplified()).value);
    CHECK(pw.value == pathwidth_exact(noisy.simplified()).value);
    check_tree_witness(noisy, tw);
    check_tree_witness(noisy, up);
    check_path_witness(noisy, pw);
    check_path_witness(noisy, pwu);
  }
}

TEST_CASE("disconnected graphs take the worst component") {
  Multigraph g(7);
  // K4 on 0..3 and a path on 4..6.
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) g.add_arc(i, j);
  g.add_arc(4, 5);
  g.add_arc(5, 6);
  auto tw = treewidth_exact(g);
  auto pw = pathwidth_exact(g);
  CHECK(tw.value == 3);
  CHECK(pw.value == 3);
  check_tree_witness(g, tw);
  check_path_witness(g, pw);
}
