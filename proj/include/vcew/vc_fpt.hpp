#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vcew/graph.hpp"
#include "vcew/oracle.hpp"

namespace vcew {

struct VertexCover {
  std::vector<VertexId> vertices;  // sorted

  std::size_t k() const { return vertices.size(); }
};

bool is_vertex_cover(const Graph& g, const std::vector<VertexId>& vertices);

// Endpoints of a greedy maximal matching over the canonical edge order.
VertexCover maximal_matching_cover(const Graph& g);
// Cover of size <= k by branching on the first uncovered edge, if one exists.
std::optional<VertexCover> exact_vertex_cover(const Graph& g, std::size_t k);
// Smallest cover of size <= limit, if one exists.
std::optional<VertexCover> minimum_vertex_cover(const Graph& g, std::size_t limit = 12);

// 8k^2 + 8k, k(8k^2 + 8k), 2k(8k^2 + 8k) + 1 and 2k + 2^(2k)(2k(8k^2 + 8k) + 1),
// all saturating at UINT64_MAX.
std::uint64_t color_bound(std::uint64_t k);
std::uint64_t search_budget(std::uint64_t k);
std::uint64_t class_cap(std::uint64_t k);
std::uint64_t kernel_vertex_bound(std::uint64_t k);

struct EquivalenceClass {
  std::vector<VertexId> signature;  // common neighborhood, a subset of the cover
  std::vector<VertexId> members;    // sorted
};

// Vertices outside `cover` grouped by open neighborhood, ordered by signature.
std::vector<EquivalenceClass> twin_classes(const Graph& g, const std::vector<VertexId>& cover);

struct Kernel {
  Graph graph;
  std::vector<VertexId> to_original;  // H id -> G id, ascending
  std::vector<EdgeId> edge_to_original;
  std::size_t k = 0;
  std::vector<VertexId> cover;  // matching-endpoint set the classes are taken over
  std::vector<EquivalenceClass> classes;
  std::vector<std::size_t> kept_sizes;  // parallel to classes
  std::vector<std::vector<VertexId>> removed;  // parallel to classes
};

// Truncates every twin class to class_cap(k) members, keeping the smallest
// ids. Without k, the cover number is found by exact_vertex_cover up to 12;
// beyond that the matching-endpoint count is used. A supplied k is checked
// to bound the cover number (ParameterError otherwise).
Kernel kernelize(const Graph& g, std::optional<std::size_t> k = std::nullopt);

// Budgeted oracle on the kernel: budget min(search_budget(k), override).
std::optional<WeightAssignment> solve_kernel(const Kernel& ker, std::optional<std::size_t> budget_override = {},
                                             const OracleOptions& options = {}, SearchStats* stats = nullptr);

// Kernel weights on kernel edges, 0 elsewhere. ContractViolation if w_kernel
// is improper on the kernel or the result is improper on g.
WeightAssignment lift(const Graph& g, const Kernel& ker, const WeightAssignment& w_kernel);

// kernelize, solve_kernel, lift.
std::optional<WeightAssignment> solve_vertex_cover(const Graph& g, std::optional<std::size_t> k = std::nullopt,
                                                   std::optional<std::size_t> budget_override = {},
                                                   const OracleOptions& options = {}, SearchStats* stats = nullptr);

// "H_id G_id" per kernel vertex, 1-indexed.
std::string emit_mapping(const Kernel& ker);

}  // namespace vcew
