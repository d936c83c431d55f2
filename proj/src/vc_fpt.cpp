#include "vcew/vc_fpt.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "vcew/errors.hpp"

namespace vcew {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return b > kMax - a ? kMax : a + b; }

bool branch(const Graph& g, std::vector<char>& in_cover, std::size_t budget) {
  for (const Edge& e : g.edges()) {
    if (in_cover[e.u] || in_cover[e.v]) continue;
    if (budget == 0) return false;
    for (VertexId x : {e.u, e.v}) {
      in_cover[x] = 1;
      if (branch(g, in_cover, budget - 1)) return true;
      in_cover[x] = 0;
    }
    return false;
  }
  return true;
}

}  // namespace

bool is_vertex_cover(const Graph& g, const std::vector<VertexId>& vertices) {
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : vertices) {
    if (v >= g.vertex_count()) return false;
    in[v] = 1;
  }
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return in[e.u] || in[e.v]; });
}

VertexCover maximal_matching_cover(const Graph& g) {
  std::vector<char> matched(g.vertex_count(), 0);
  VertexCover out;
  for (const Edge& e : g.edges()) {
    if (matched[e.u] || matched[e.v]) continue;
    matched[e.u] = matched[e.v] = 1;
    out.vertices.push_back(e.u);
    out.vertices.push_back(e.v);
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

std::optional<VertexCover> exact_vertex_cover(const Graph& g, std::size_t k) {
  std::vector<char> in_cover(g.vertex_count(), 0);
  if (!branch(g, in_cover, k)) return std::nullopt;
  VertexCover out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in_cover[v]) out.vertices.push_back(v);
  }
  return out;
}

std::optional<VertexCover> minimum_vertex_cover(const Graph& g, std::size_t limit) {
  for (std::size_t k = 0; k <= limit; ++k) {
    if (auto cover = exact_vertex_cover(g, k)) return cover;
  }
  return std::nullopt;
}

std::uint64_t color_bound(std::uint64_t k) { return sat_add(sat_mul(8, sat_mul(k, k)), sat_mul(8, k)); }

std::uint64_t search_budget(std::uint64_t k) { return sat_mul(k, color_bound(k)); }

std::uint64_t class_cap(std::uint64_t k) { return sat_add(sat_mul(2, search_budget(k)), 1); }

std::uint64_t kernel_vertex_bound(std::uint64_t k) {
  const std::uint64_t classes = 2 * k >= 64 ? kMax : std::uint64_t{1} << (2 * k);
  return sat_add(sat_mul(2, k), sat_mul(classes, class_cap(k)));
}

std::vector<EquivalenceClass> twin_classes(const Graph& g, const std::vector<VertexId>& cover) {
  std::vector<char> in_cover(g.vertex_count(), 0);
  for (VertexId v : cover) in_cover[v] = 1;
  std::map<std::vector<VertexId>, std::vector<VertexId>> by_signature;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in_cover[v]) continue;
    auto nb = g.neighbors(v);
    by_signature[std::vector<VertexId>(nb.begin(), nb.end())].push_back(v);
  }
  std::vector<EquivalenceClass> out;
  for (auto& [signature, members] : by_signature) out.push_back({signature, std::move(members)});
  return out;
}

Kernel kernelize(const Graph& g, std::optional<std::size_t> k) {
  Kernel ker;
  ker.cover = maximal_matching_cover(g).vertices;
  if (k) {
    if (!exact_vertex_cover(g, *k)) {
      throw ParameterError("graph has no vertex cover of size " + std::to_string(*k));
    }
    ker.k = *k;
  } else if (auto cover = minimum_vertex_cover(g, 12)) {
    ker.k = cover->k();
  } else {
    ker.k = ker.cover.size();  // still an upper bound on the cover number
  }

  const std::uint64_t cap = class_cap(ker.k);
  ker.classes = twin_classes(g, ker.cover);
  std::vector<char> keep(g.vertex_count(), 1);
  for (const auto& cls : ker.classes) {
    const std::size_t kept = static_cast<std::size_t>(std::min<std::uint64_t>(cls.members.size(), cap));
    ker.kept_sizes.push_back(kept);
    ker.removed.emplace_back(cls.members.begin() + static_cast<long>(kept), cls.members.end());
    for (VertexId v : ker.removed.back()) keep[v] = 0;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (keep[v]) ker.to_original.push_back(v);
  }
  ker.graph = induced_subgraph(g, ker.to_original);
  for (const Edge& e : ker.graph.edges()) {
    ker.edge_to_original.push_back(*g.find_edge(ker.to_original[e.u], ker.to_original[e.v]));
  }
  return ker;
}

std::optional<WeightAssignment> solve_kernel(const Kernel& ker, std::optional<std::size_t> budget_override,
                                             const OracleOptions& options, SearchStats* stats) {
  OracleOptions opts = options;
  std::uint64_t budget = search_budget(ker.k);
  if (budget_override) budget = std::min<std::uint64_t>(budget, *budget_override);
  opts.budget = static_cast<std::size_t>(std::min<std::uint64_t>(budget, std::numeric_limits<std::size_t>::max()));
  return solve_exhaustive(ker.graph, {}, opts, stats);
}

WeightAssignment lift(const Graph& g, const Kernel& ker, const WeightAssignment& w_kernel) {
  if (w_kernel.size() != ker.graph.edge_count() || !is_proper(ker.graph, w_kernel)) {
    throw ContractViolation("kernel assignment is not proper on the kernel");
  }
  WeightAssignment w(g.edge_count(), 0);
  for (EdgeId e = 0; e < ker.graph.edge_count(); ++e) w.set(ker.edge_to_original[e], w_kernel[e]);
  if (!is_proper(g, w)) throw ContractViolation("lifted assignment is not proper on the original graph");
  return w;
}

std::optional<WeightAssignment> solve_vertex_cover(const Graph& g, std::optional<std::size_t> k,
                                                   std::optional<std::size_t> budget_override,
                                                   const OracleOptions& options, SearchStats* stats) {
  if (!isolated_edges(g).empty()) return std::nullopt;
  const Kernel ker = kernelize(g, k);
  auto w = solve_kernel(ker, budget_override, options, stats);
  if (!w) return std::nullopt;
  return lift(g, ker, *w);
}

std::string emit_mapping(const Kernel& ker) {
  std::ostringstream out;
  for (VertexId h = 0; h < ker.to_original.size(); ++h) out << h + 1 << ' ' << ker.to_original[h] + 1 << '\n';
  return out.str();
}

}  // namespace vcew
