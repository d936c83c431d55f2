#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace vcew {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::uint8_t;

// Unordered edge, always stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  static Edge canonical(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on dense vertex ids [0, n). Edge ids index the
// lexicographically sorted canonical edge list. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  // Throws ValidationError on self-loops, duplicate edges or out-of-range ids.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  // Parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(VertexId v) const {
    return {incident_.data() + offsets_[v], incident_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept { return max_degree_; }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  bool adjacent(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<EdgeId> incident_;
  std::size_t max_degree_ = 0;
};

// Total {0,1} weighting, indexed by edge id.
class WeightAssignment {
 public:
  WeightAssignment() = default;
  explicit WeightAssignment(std::size_t edge_count, Weight fill = 0) : weights_(edge_count, fill) {}
  explicit WeightAssignment(std::vector<Weight> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  Weight operator[](EdgeId e) const { return weights_[e]; }
  void set(EdgeId e, Weight w);
  std::span<const Weight> values() const noexcept { return weights_; }

  friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;

 private:
  std::vector<Weight> weights_;
};

// Partial weighting (pre-weights). Keyed by edge id of the associated graph.
class PartialWeightAssignment {
 public:
  PartialWeightAssignment() = default;

  void set(EdgeId e, Weight w);
  void erase(EdgeId e) { preset_.erase(e); }
  std::optional<Weight> get(EdgeId e) const;
  bool contains(EdgeId e) const { return preset_.contains(e); }
  bool empty() const noexcept { return preset_.empty(); }
  std::size_t size() const noexcept { return preset_.size(); }
  bool all_ones() const;
  bool any_zero() const;
  const std::map<EdgeId, Weight>& entries() const noexcept { return preset_; }

  // Dense view: -1 for unset edges.
  std::vector<std::int8_t> dense(std::size_t edge_count) const;

  friend bool operator==(const PartialWeightAssignment&, const PartialWeightAssignment&) = default;

 private:
  std::map<EdgeId, Weight> preset_;
};

using ColorVector = std::vector<std::uint32_t>;

ColorVector induced_colors(const Graph& g, const WeightAssignment& w);
std::vector<Edge> find_conflicts(const Graph& g, const WeightAssignment& w);
bool is_proper(const Graph& g, const WeightAssignment& w);
bool extends(const WeightAssignment& w, const PartialWeightAssignment& pre);

// Weight-1 edges, sorted canonically.
std::vector<Edge> solution_subgraph(const Graph& g, const WeightAssignment& w);
// Throws DomainError if an edge is not in g.
WeightAssignment from_subgraph(const Graph& g, std::span<const Edge> h_edges);
// Degrees of each vertex in the spanning subgraph given by h_edges.
std::vector<std::uint32_t> subgraph_degrees(std::size_t vertex_count, std::span<const Edge> h_edges);

// Edges whose endpoints both have degree 1. Any such edge is a forced conflict.
std::vector<Edge> isolated_edges(const Graph& g);

// Subgraph on the given vertex ids (renumbered in ascending order).
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

}  // namespace vcew
