#include "doctest.h"
#include "support.hpp"
#include "vcew/errors.hpp"
#include "vcew/graph.hpp"

using namespace vcew;
using namespace vcew::testing;

TEST_CASE("edges are canonical and sorted") {
  const Graph g = make_graph(4, {{3, 1}, {0, 2}, {1, 0}});
  REQUIRE(g.edge_count() == 3);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 2});
  CHECK(g.edge(2) == Edge{1, 3});
  CHECK(g.find_edge(3, 1) == EdgeId{2});
  CHECK_FALSE(g.find_edge(2, 3).has_value());
  CHECK(g.degree(1) == 2);
  CHECK(g.max_degree() == 2);
}

TEST_CASE("malformed graphs are rejected") {
  CHECK_THROWS_AS(make_graph(3, {{1, 1}}), ValidationError);
  CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), ValidationError);
}

TEST_CASE("induced colors and conflicts") {
  const Graph g = path_graph(4);
  WeightAssignment w(std::vector<Weight>{1, 1, 0});
  CHECK(induced_colors(g, w) == ColorVector{1, 2, 1, 0});
  CHECK(is_proper(g, w));
  w.set(2, 1);
  const auto conflicts = find_conflicts(g, w);
  REQUIRE(conflicts.size() == 1);
  CHECK(conflicts[0] == Edge{1, 2});
  CHECK_THROWS_AS(w.set(0, 2), MalformedAssignment);
}

TEST_CASE("pre-weight extension") {
  PartialWeightAssignment pre;
  pre.set(1, 0);
  CHECK(pre.any_zero());
  CHECK_FALSE(pre.all_ones());
  CHECK(extends(WeightAssignment(std::vector<Weight>{1, 0, 1}), pre));
  CHECK_FALSE(extends(WeightAssignment(std::vector<Weight>{1, 1, 1}), pre));
  CHECK(pre.dense(3) == std::vector<std::int8_t>{-1, 0, -1});
}

TEST_CASE("solution subgraph round trip") {
  const Graph g = cycle_graph(5);
  const WeightAssignment w(std::vector<Weight>{1, 0, 1, 1, 0});
  const auto h = solution_subgraph(g, w);
  CHECK(from_subgraph(g, h) == w);
  const std::vector<Edge> missing{{0, 2}};
  CHECK_THROWS_AS(from_subgraph(g, missing), DomainError);
  const auto deg = subgraph_degrees(5, h);
  CHECK(ColorVector(deg.begin(), deg.end()) == induced_colors(g, w));
}

TEST_CASE("isolated edges") {
  const Graph g = make_graph(5, {{0, 1}, {2, 3}, {3, 4}});
  const auto iso = isolated_edges(g);
  REQUIRE(iso.size() == 1);
  CHECK(iso[0] == Edge{0, 1});
  CHECK(isolated_edges(path_graph(3)).empty());
}

TEST_CASE("induced subgraph renumbers") {
  const Graph g = complete_graph(5);
  const std::vector<VertexId> keep{1, 3, 4};
  const Graph h = induced_subgraph(g, keep);
  CHECK(h.vertex_count() == 3);
  CHECK(h.edge_count() == 3);
}

TEST_CASE("connected graph enumeration matches known class counts") {
  const std::size_t expected[] = {0, 1, 2, 4, 10, 31, 143};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(connected_graphs(n).size() == expected[n]);
  // 1 + 2 + 4 + 11 + 34 graphs on 1..5 vertices.
  CHECK(all_graphs(5).size() == 52);
}
