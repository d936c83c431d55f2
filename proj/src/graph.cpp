#include "vcew/graph.hpp"

#include <algorithm>
#include <string>

#include "vcew/errors.hpp"

namespace vcew {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) {
  for (Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw ValidationError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} references a vertex outside [0," + std::to_string(vertex_count) + ")");
    }
    if (e.u == e.v) throw ValidationError("self-loop at vertex " + std::to_string(e.u));
    e = Edge::canonical(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw ValidationError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }
  edges_ = std::move(edges);

  std::vector<std::size_t> degree(vertex_count, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  neighbors_.resize(offsets_.back());
  incident_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v): writing lower neighbors first, then upper
  // neighbors, leaves every adjacency list sorted by neighbor id.
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    neighbors_[cursor[e.v]] = e.u;
    incident_[cursor[e.v]++] = id;
  }
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    neighbors_[cursor[e.u]] = e.v;
    incident_[cursor[e.u]++] = id;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    max_degree_ = std::max(max_degree_, degree[v]);
  }
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a >= vertex_count() || b >= vertex_count() || a == b) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nb = neighbors(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return std::nullopt;
  return incident_edges(a)[static_cast<std::size_t>(it - nb.begin())];
}

WeightAssignment::WeightAssignment(std::vector<Weight> weights) : weights_(std::move(weights)) {
  for (Weight w : weights_) {
    if (w > 1) throw MalformedAssignment("edge weight " + std::to_string(w) + " is not in {0,1}");
  }
}

void WeightAssignment::set(EdgeId e, Weight w) {
  if (w > 1) throw MalformedAssignment("edge weight " + std::to_string(w) + " is not in {0,1}");
  weights_.at(e) = w;
}

void PartialWeightAssignment::set(EdgeId e, Weight w) {
  if (w > 1) throw MalformedAssignment("pre-weight " + std::to_string(w) + " is not in {0,1}");
  preset_[e] = w;
}

std::optional<Weight> PartialWeightAssignment::get(EdgeId e) const {
  auto it = preset_.find(e);
  if (it == preset_.end()) return std::nullopt;
  return it->second;
}

bool PartialWeightAssignment::all_ones() const {
  return std::all_of(preset_.begin(), preset_.end(), [](const auto& kv) { return kv.second == 1; });
}

bool PartialWeightAssignment::any_zero() const {
  return std::any_of(preset_.begin(), preset_.end(), [](const auto& kv) { return kv.second == 0; });
}

std::vector<std::int8_t> PartialWeightAssignment::dense(std::size_t edge_count) const {
  std::vector<std::int8_t> out(edge_count, -1);
  for (const auto& [e, w] : preset_) {
    if (e >= edge_count) throw MalformedAssignment("pre-weight on unknown edge id " + std::to_string(e));
    out[e] = static_cast<std::int8_t>(w);
  }
  return out;
}

namespace {

void require_total(const Graph& g, const WeightAssignment& w) {
  if (w.size() != g.edge_count()) {
    throw MalformedAssignment("assignment covers " + std::to_string(w.size()) + " edges, graph has " +
                              std::to_string(g.edge_count()));
  }
}

}  // namespace

ColorVector induced_colors(const Graph& g, const WeightAssignment& w) {
  require_total(g, w);
  ColorVector colors(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (w[e]) {
      ++colors[g.edge(e).u];
      ++colors[g.edge(e).v];
    }
  }
  return colors;
}

std::vector<Edge> find_conflicts(const Graph& g, const WeightAssignment& w) {
  const ColorVector colors = induced_colors(g, w);
  std::vector<Edge> conflicts;
  for (const Edge& e : g.edges()) {
    if (colors[e.u] == colors[e.v]) conflicts.push_back(e);
  }
  return conflicts;
}

bool is_proper(const Graph& g, const WeightAssignment& w) {
  const ColorVector colors = induced_colors(g, w);
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return colors[e.u] == colors[e.v]; });
}

bool extends(const WeightAssignment& w, const PartialWeightAssignment& pre) {
  return std::all_of(pre.entries().begin(), pre.entries().end(),
                     [&](const auto& kv) { return kv.first < w.size() && w[kv.first] == kv.second; });
}

std::vector<Edge> solution_subgraph(const Graph& g, const WeightAssignment& w) {
  std::vector<Edge> out;
  for (EdgeId e = 0; e < g.edge_count() && e < w.size(); ++e) {
    if (w[e]) out.push_back(g.edge(e));
  }
  return out;
}

WeightAssignment from_subgraph(const Graph& g, std::span<const Edge> h_edges) {
  WeightAssignment w(g.edge_count(), 0);
  for (const Edge& e : h_edges) {
    auto id = g.find_edge(e.u, e.v);
    if (!id) {
      throw DomainError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not in the graph");
    }
    w.set(*id, 1);
  }
  return w;
}

std::vector<std::uint32_t> subgraph_degrees(std::size_t vertex_count, std::span<const Edge> h_edges) {
  std::vector<std::uint32_t> deg(vertex_count, 0);
  for (const Edge& e : h_edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<Edge> isolated_edges(const Graph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) == 1 && g.degree(e.v) == 1) out.push_back(e);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  constexpr VertexId kAbsent = ~VertexId{0};
  std::vector<VertexId> index(g.vertex_count(), kAbsent);
  for (VertexId i = 0; i < sorted.size(); ++i) index[sorted[i]] = i;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] != kAbsent && index[e.v] != kAbsent) edges.push_back({index[e.u], index[e.v]});
  }
  return Graph(sorted.size(), std::move(edges));
}

}  // namespace vcew
