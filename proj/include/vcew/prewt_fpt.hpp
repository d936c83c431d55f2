#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vcew/graph.hpp"
#include "vcew/oracle.hpp"

namespace vcew {

// Incident weight-1 pre-weights per vertex. UnsupportedVariant if any
// pre-weight is 0.
ColorVector base_colors(const Graph& g, const PartialWeightAssignment& pre);

struct RefinedClass {
  std::vector<VertexId> neighborhood;  // S1 = N(u), inside the cover
  std::vector<VertexId> preweighted;   // S2 ⊆ S1: x with ux pre-weighted
  std::vector<VertexId> members;       // sorted
};

// Vertices outside `cover` grouped by (N(u), pre-weighted neighbors).
std::vector<RefinedClass> refine_classes(const Graph& g, const PartialWeightAssignment& pre,
                                         const std::vector<VertexId>& cover);

struct Deletion {
  VertexId vertex = 0;
  std::vector<Edge> edges;  // unweighted edges removed, in original ids
};

struct PrewtReduction {
  Graph graph;  // same vertex ids as the input
  PartialWeightAssignment pre;
  std::vector<EdgeId> edge_to_original;
  std::vector<Deletion> log;
  std::size_t k = 0;
  std::vector<VertexId> cover;
};

// k(k-1) + 3^k (k(8k^2+8k) + 1), saturating.
std::uint64_t residual_bound(std::uint64_t k);

// Unweighted edge count of the instance.
std::size_t unweighted_edge_count(const Graph& g, const PartialWeightAssignment& pre);

// While some refined class has more than k(8k^2+8k)+1 members and one of them
// has an unweighted edge, delete all unweighted edges of the smallest such
// member; classes are recomputed after every deletion. `cover` must be a
// vertex cover with at most k vertices.
PrewtReduction apply_reduction(const Graph& g, const PartialWeightAssignment& pre, std::size_t k,
                               const std::vector<VertexId>& cover);

// Reduction on a minimum cover (exact up to 12, matching endpoints beyond),
// then the budgeted oracle over unweighted edges, extended by zeros and
// verified. A supplied k must bound the cover number.
std::optional<WeightAssignment> solve_prewt(const Graph& g, const PartialWeightAssignment& pre,
                                            std::optional<std::size_t> k = std::nullopt,
                                            const OracleOptions& options = {}, SearchStats* stats = nullptr);

// "deleted u: a-b c-d" per step, 1-indexed.
std::string emit_deletion_log(const PrewtReduction& red);

}  // namespace vcew
