#include <set>

#include "doctest.h"
#include "support.hpp"
#include "vcew/errors.hpp"
#include "vcew/oracle.hpp"

using namespace vcew;
using namespace vcew::testing;

namespace {

// Plain bitmask sweep over all 2^m weightings.
std::uint64_t count_by_sweep(const Graph& g, const PartialWeightAssignment& pre) {
  std::uint64_t count = 0;
  const std::size_t m = g.edge_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    WeightAssignment w(m);
    for (EdgeId e = 0; e < m; ++e) w.set(e, (mask >> e) & 1u);
    if (extends(w, pre) && is_proper(g, w)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("enumeration size") {
  CHECK(enumeration_size(10, std::nullopt) == 1024);
  CHECK(enumeration_size(10, 0) == 1);
  CHECK(enumeration_size(10, 1) == 11);
  CHECK(enumeration_size(5, 2) == 16);
  CHECK(enumeration_size(5, 9) == 32);
  CHECK(enumeration_size(200, std::nullopt) == UINT64_MAX);
}

TEST_CASE("small decisions") {
  CHECK_FALSE(solve_exhaustive(cycle_graph(3), {}).has_value());
  CHECK(solve_exhaustive(cycle_graph(4), {}).has_value());
  CHECK_FALSE(solve_exhaustive(path_graph(2), {}).has_value());
  CHECK(solve_exhaustive(path_graph(1), {}).has_value());
  const auto w = solve_exhaustive(path_graph(3), {});
  REQUIRE(w);
  CHECK(*w == WeightAssignment(std::vector<Weight>{1, 1}));
  const auto p4 = solve_exhaustive(path_graph(4), {});
  REQUIRE(p4);
  // Fewest ones first, then the earliest edge.
  CHECK(*p4 == WeightAssignment(std::vector<Weight>{1, 1, 0}));
}

TEST_CASE("counts agree with a plain sweep") {
  for (const Graph& g : connected_graphs(5)) {
    CHECK(count_proper(g, {}) == count_by_sweep(g, {}));
    PartialWeightAssignment pre;
    if (g.edge_count() > 1) {
      pre.set(0, 1);
      pre.set(static_cast<EdgeId>(g.edge_count() - 1), 0);
    }
    CHECK(count_proper(g, pre) == count_by_sweep(g, pre));
  }
}

TEST_CASE("budget restricts ones among free edges") {
  const Graph g = star_graph(3);
  // The centre needs a color different from all leaves.
  OracleOptions none;
  none.budget = 0;
  CHECK_FALSE(solve_exhaustive(g, {}, none).has_value());
  OracleOptions two;
  two.budget = 2;
  const auto w = solve_exhaustive(g, {}, two);
  REQUIRE(w);
  CHECK(is_proper(g, *w));
  PartialWeightAssignment pre;
  pre.set(0, 1);
  pre.set(1, 1);
  pre.set(2, 1);
  CHECK(solve_exhaustive(g, pre, none).has_value());
}

TEST_CASE("capacity errors") {
  OracleOptions tight;
  tight.cutoff = 3;
  CHECK_THROWS_AS(solve_exhaustive(path_graph(6), {}, tight), CapacityError);
  tight.budget = 1;
  CHECK_NOTHROW(solve_exhaustive(path_graph(3), {}, tight));
}

TEST_CASE("threads find the same witness") {
  for (std::size_t i = 0; i < connected_graphs(6).size(); i += 7) {
    const Graph& g = connected_graphs(6)[i];
    OracleOptions par;
    par.threads = 3;
    CHECK(solve_exhaustive(g, {}) == solve_exhaustive(g, {}, par));
  }
}

TEST_CASE("color bounds") {
  const Graph g = star_graph(4);
  CHECK(exists_with_color_bound(g, {}, std::uint32_t{2}));
  CHECK_FALSE(exists_with_color_bound(g, {}, std::uint32_t{1}));
  std::vector<std::uint32_t> per(5, 1);
  per[0] = 2;
  CHECK(exists_with_color_bound(g, {}, per));
  per[0] = 1;
  CHECK_FALSE(exists_with_color_bound(g, {}, per));
  std::set<std::vector<Weight>> seen;
  const auto visited = for_each_proper(g, {}, std::nullopt, [&](const WeightAssignment& w, const ColorVector& c) {
    CHECK(c == induced_colors(g, w));
    seen.insert(std::vector<Weight>(w.values().begin(), w.values().end()));
    return true;
  });
  CHECK(visited == seen.size());
  CHECK(visited == count_proper(g, {}));
}
