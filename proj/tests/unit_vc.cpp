#include "doctest.h"
#include "support.hpp"
#include "vcew/errors.hpp"
#include "vcew/generators.hpp"
#include "vcew/vc_fpt.hpp"

using namespace vcew;
using namespace vcew::testing;

TEST_CASE("bound arithmetic") {
  CHECK(color_bound(1) == 16);
  CHECK(color_bound(2) == 48);
  CHECK(search_budget(2) == 96);
  CHECK(class_cap(1) == 33);
  CHECK(class_cap(2) == 193);
  CHECK(kernel_vertex_bound(1) == 2 + 4 * 33);
  CHECK(kernel_vertex_bound(2) == 4 + 16 * 193);
  CHECK(kernel_vertex_bound(40) == UINT64_MAX);
  CHECK(color_bound(std::uint64_t{1} << 40) == UINT64_MAX);
}

TEST_CASE("vertex covers") {
  const Graph g = cycle_graph(5);
  const VertexCover m = maximal_matching_cover(g);
  CHECK(is_vertex_cover(g, m.vertices));
  CHECK(m.k() == 4);
  CHECK_FALSE(exact_vertex_cover(g, 2).has_value());
  const auto c = exact_vertex_cover(g, 3);
  REQUIRE(c);
  CHECK(is_vertex_cover(g, c->vertices));
  CHECK(minimum_vertex_cover(g)->k() == 3);
  CHECK(minimum_vertex_cover(complete_graph(6))->k() == 5);
  CHECK_FALSE(minimum_vertex_cover(complete_graph(15)).has_value());
  CHECK(minimum_vertex_cover(Graph(4, {}))->k() == 0);
}

TEST_CASE("twin classes") {
  const Graph g = make_graph(6, {{0, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}, {1, 5}});
  const std::vector<VertexId> cover{0, 1};
  const auto classes = twin_classes(g, cover);
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].signature == std::vector<VertexId>{0});
  CHECK(classes[0].members == std::vector<VertexId>{2});
  CHECK(classes[1].signature == std::vector<VertexId>{0, 1});
  CHECK(classes[1].members == std::vector<VertexId>{3, 4});
  CHECK(classes[2].members == std::vector<VertexId>{5});
}

TEST_CASE("kernel of a large star keeps the cap") {
  const Graph g = star_graph(40);
  const Kernel ker = kernelize(g);
  CHECK(ker.k == 1);
  REQUIRE(ker.classes.size() == 1);
  CHECK(ker.kept_sizes[0] == 33);
  CHECK(ker.removed[0].size() == 6);
  CHECK(ker.removed[0].front() == 35);
  CHECK(ker.graph.vertex_count() == 35);
  CHECK(ker.to_original.back() == 34);
  CHECK(emit_mapping(ker).substr(0, 4) == "1 1\n");

  OracleOptions wide;
  wide.cutoff = 40;
  const auto wk = solve_kernel(ker, std::nullopt, wide);
  REQUIRE(wk);
  const WeightAssignment w = lift(g, ker, *wk);
  CHECK(is_proper(g, w));
  CHECK_THROWS_AS(lift(g, ker, WeightAssignment(ker.graph.edge_count())), ContractViolation);
}

TEST_CASE("supplied k must bound the cover number") {
  CHECK_THROWS_AS(kernelize(cycle_graph(5), 2), ParameterError);
  CHECK_NOTHROW(kernelize(cycle_graph(5), 3));
}

TEST_CASE("pipeline decisions on small graphs") {
  for (const Graph& g : connected_graphs(5)) {
    const auto w = solve_vertex_cover(g);
    CHECK(w.has_value() == solve_exhaustive(g, {}).has_value());
    if (w) CHECK(is_proper(g, *w));
  }
}

TEST_CASE("budget override") {
  const Graph g = star_graph(3);
  CHECK_FALSE(solve_vertex_cover(g, std::nullopt, 0).has_value());
  CHECK(solve_vertex_cover(g, std::nullopt, 2).has_value());
}
