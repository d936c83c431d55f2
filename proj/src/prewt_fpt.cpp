#include "vcew/prewt_fpt.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "vcew/errors.hpp"
#include "vcew/vc_fpt.hpp"

namespace vcew {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return b > kMax - a ? kMax : a + b; }

void require_ones(const PartialWeightAssignment& pre) {
  if (pre.any_zero()) throw UnsupportedVariant("pre-weights of 0 are not supported here; use the treewidth solver");
}

}  // namespace

ColorVector base_colors(const Graph& g, const PartialWeightAssignment& pre) {
  require_ones(pre);
  ColorVector base(g.vertex_count(), 0);
  for (const auto& [e, w] : pre.entries()) {
    if (e >= g.edge_count()) throw MalformedAssignment("pre-weight on unknown edge id " + std::to_string(e));
    ++base[g.edge(e).u];
    ++base[g.edge(e).v];
  }
  return base;
}

std::vector<RefinedClass> refine_classes(const Graph& g, const PartialWeightAssignment& pre,
                                         const std::vector<VertexId>& cover) {
  std::vector<char> in_cover(g.vertex_count(), 0);
  for (VertexId v : cover) in_cover[v] = 1;
  using Key = std::pair<std::vector<VertexId>, std::vector<VertexId>>;
  std::map<Key, std::vector<VertexId>> by_key;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (in_cover[u]) continue;
    Key key;
    auto nb = g.neighbors(u);
    auto inc = g.incident_edges(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      key.first.push_back(nb[i]);
      if (pre.contains(inc[i])) key.second.push_back(nb[i]);
    }
    by_key[std::move(key)].push_back(u);
  }
  std::vector<RefinedClass> out;
  for (auto& [key, members] : by_key) out.push_back({key.first, key.second, std::move(members)});
  return out;
}

std::uint64_t residual_bound(std::uint64_t k) {
  std::uint64_t pow3 = 1;
  for (std::uint64_t i = 0; i < k; ++i) pow3 = sat_mul(pow3, 3);
  const std::uint64_t pairs = k == 0 ? 0 : sat_mul(k, k - 1);
  return sat_add(pairs, sat_mul(pow3, sat_add(search_budget(k), 1)));
}

std::size_t unweighted_edge_count(const Graph& g, const PartialWeightAssignment& pre) {
  return g.edge_count() - pre.size();
}

PrewtReduction apply_reduction(const Graph& g, const PartialWeightAssignment& pre, std::size_t k,
                               const std::vector<VertexId>& cover) {
  require_ones(pre);
  if (cover.size() > k || !is_vertex_cover(g, cover)) {
    throw ParameterError("reduction needs a vertex cover with at most " + std::to_string(k) + " vertices");
  }
  const std::uint64_t threshold = sat_add(search_budget(k), 1);

  // Work on the original edge ids; `alive` marks edges still present.
  std::vector<char> alive(g.edge_count(), 1);
  PrewtReduction red;
  red.k = k;
  red.cover = cover;
  Graph current = g;
  std::vector<EdgeId> ids(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) ids[e] = e;
  PartialWeightAssignment current_pre = pre;

  for (;;) {
    std::optional<VertexId> pick;
    for (const auto& cls : refine_classes(current, current_pre, cover)) {
      if (cls.members.size() <= threshold || cls.preweighted.size() == cls.neighborhood.size()) continue;
      // Every member shares the key, so each has an unweighted edge.
      if (!pick || cls.members.front() < *pick) pick = cls.members.front();
    }
    if (!pick) break;
    Deletion step{*pick, {}};
    auto nb = current.neighbors(*pick);
    auto inc = current.incident_edges(*pick);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (current_pre.contains(inc[i])) continue;
      alive[ids[inc[i]]] = 0;
      step.edges.push_back(Edge::canonical(*pick, nb[i]));
    }
    red.log.push_back(std::move(step));

    std::vector<Edge> edges;
    std::vector<EdgeId> next_ids;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!alive[e]) continue;
      edges.push_back(g.edge(e));
      next_ids.push_back(e);
    }
    current = Graph(g.vertex_count(), edges);
    ids = std::move(next_ids);
    current_pre = PartialWeightAssignment{};
    for (EdgeId e = 0; e < ids.size(); ++e) {
      if (pre.contains(ids[e])) current_pre.set(e, 1);
    }
  }
  red.graph = std::move(current);
  red.pre = std::move(current_pre);
  red.edge_to_original = std::move(ids);
  return red;
}

std::optional<WeightAssignment> solve_prewt(const Graph& g, const PartialWeightAssignment& pre,
                                            std::optional<std::size_t> k, const OracleOptions& options,
                                            SearchStats* stats) {
  require_ones(pre);
  if (!isolated_edges(g).empty()) return std::nullopt;
  VertexCover cover;
  if (k) {
    auto found = exact_vertex_cover(g, *k);
    if (!found) throw ParameterError("graph has no vertex cover of size " + std::to_string(*k));
    cover = *found;
  } else if (auto found = minimum_vertex_cover(g, 12)) {
    cover = *found;
  } else {
    cover = maximal_matching_cover(g);
  }
  const std::size_t param = k ? *k : cover.k();
  const PrewtReduction red = apply_reduction(g, pre, param, cover.vertices);

  OracleOptions opts = options;
  opts.budget = static_cast<std::size_t>(
      std::min<std::uint64_t>(search_budget(param), std::numeric_limits<std::size_t>::max()));
  auto reduced = solve_exhaustive(red.graph, red.pre, opts, stats);
  if (!reduced) return std::nullopt;

  WeightAssignment w(g.edge_count(), 0);
  for (EdgeId e = 0; e < red.graph.edge_count(); ++e) w.set(red.edge_to_original[e], (*reduced)[e]);
  if (!is_proper(g, w) || !extends(w, pre)) {
    throw ContractViolation("extended assignment is not a proper extension of the pre-weighting");
  }
  return w;
}

std::string emit_deletion_log(const PrewtReduction& red) {
  std::ostringstream out;
  for (const auto& step : red.log) {
    out << "deleted " << step.vertex + 1 << ':';
    for (const Edge& e : step.edges) out << ' ' << e.u + 1 << '-' << e.v + 1;
    out << '\n';
  }
  return out.str();
}

}  // namespace vcew
