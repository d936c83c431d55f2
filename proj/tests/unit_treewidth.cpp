#include "doctest.h"
#include "support.hpp"
#include "vcew/decomposition.hpp"
#include "vcew/errors.hpp"
#include "vcew/generators.hpp"
#include "vcew/oracle.hpp"
#include "vcew/treewidth_dp.hpp"

using namespace vcew;
using namespace vcew::testing;

TEST_CASE("min-fill widths on known families") {
  CHECK(compute_decomposition(path_graph(6)).width() == 1);
  CHECK(compute_decomposition(star_graph(5)).width() == 1);
  CHECK(compute_decomposition(cycle_graph(7)).width() == 2);
  CHECK(compute_decomposition(complete_graph(5)).width() == 4);
  CHECK(compute_decomposition(Graph(3, {})).width() == 0);
  CHECK(min_fill_order(path_graph(4)).size() == 4);
}

TEST_CASE("computed decompositions are valid") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(12, 0.3, seed);
    const TreeDecomposition td = compute_decomposition(g);
    CHECK_FALSE(decomposition_problem(g, td).has_value());
    const NiceTreeDecomposition ntd = make_nice(td, g);
    CHECK_FALSE(nice_problem(g, ntd).has_value());
    CHECK(ntd.width() == td.width());
    CHECK(ntd.nodes.back().bag.empty());
    CHECK(subtree_edges(g, ntd, ntd.root()).size() == g.edge_count());
  }
}

TEST_CASE("invalid decompositions are reported") {
  const Graph g = cycle_graph(4);
  TreeDecomposition td;
  td.vertex_count = 4;
  td.bags = {{0, 1, 2}, {0, 2, 3}};
  td.tree_edges = {{0, 1}};
  CHECK_FALSE(decomposition_problem(g, td).has_value());

  TreeDecomposition missing_edge = td;
  missing_edge.bags = {{0, 1, 2}, {1, 2, 3}};
  CHECK(decomposition_problem(g, missing_edge).has_value());
  CHECK_THROWS_AS(make_nice(missing_edge, g), ValidationError);

  TreeDecomposition broken = td;
  broken.bags = {{0, 1}, {2, 3}, {0, 1, 2, 3}};
  broken.tree_edges = {{0, 1}, {1, 2}};
  // Vertex 0 appears in bags 0 and 2 but not in bag 1.
  CHECK(decomposition_problem(g, broken).has_value());

  TreeDecomposition not_tree = td;
  not_tree.tree_edges = {};
  CHECK(decomposition_problem(g, not_tree).has_value());
}

TEST_CASE("dp agrees with the oracle on small graphs") {
  for (const Graph& g : connected_graphs(5)) {
    DpOptions checked;
    checked.check_invariants = true;
    const auto w = solve_treewidth(g, {}, std::nullopt, checked);
    CHECK(w.has_value() == solve_exhaustive(g, {}).has_value());
    if (w) CHECK(is_proper(g, *w));
    DpOptions global;
    global.global_degree_cap = true;
    CHECK(solve_treewidth(g, {}, std::nullopt, global).has_value() == w.has_value());
  }
}

TEST_CASE("dp honours pre-weights") {
  const Graph g = path_graph(4);
  PartialWeightAssignment pre;
  pre.set(1, 0);
  // Middle edge 0 leaves two isolated pieces that each need a conflict-free weighting.
  CHECK_FALSE(solve_treewidth(g, pre).has_value());
  PartialWeightAssignment ones;
  ones.set(0, 0);
  const auto w = solve_treewidth(g, ones);
  CHECK(w.has_value() == solve_exhaustive(g, ones).has_value());
  if (w) CHECK(extends(*w, ones));
}

TEST_CASE("dp with a supplied decomposition") {
  const Graph g = cycle_graph(8);
  TreeDecomposition td;
  td.vertex_count = 8;
  td.bags = {{0, 1, 7}, {1, 6, 7}, {1, 2, 6}, {2, 5, 6}, {2, 3, 5}, {3, 4, 5}};
  td.tree_edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
  CHECK_FALSE(solve_treewidth(cycle_graph(6), {}).has_value());
  DpStats stats;
  const auto w = solve_treewidth(g, {}, td, {}, &stats);
  REQUIRE(w);
  CHECK(is_proper(g, *w));
  CHECK(stats.max_states <= state_count_bound(g.max_degree(), td.width()));
  CHECK(stats.states_per_node.size() > 0);
}

TEST_CASE("state count bound") {
  CHECK(state_count_bound(2, 1) == 81);
  CHECK(state_count_bound(3, 0) == 16);
  CHECK(state_count_bound(100, 20) == UINT64_MAX);
}

TEST_CASE("partial solution check at the root") {
  const Graph g = cycle_graph(4);
  const NiceTreeDecomposition ntd = make_nice(compute_decomposition(g), g);
  const auto w = solve_exhaustive(g, {});
  REQUIRE(w);
  std::vector<EdgeId> h;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if ((*w)[e]) h.push_back(e);
  }
  CHECK(check_partial_solution(g, ntd, ntd.root(), {}, h));
  CHECK_FALSE(check_partial_solution(g, ntd, ntd.root(), {}, {}));
}
