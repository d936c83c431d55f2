#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "vcew/graph.hpp"

namespace vcew {

struct OracleOptions {
  // Maximum number of weight-1 free edges. Absent means unbounded.
  std::optional<std::size_t> budget;
  // Refuse when the enumeration space exceeds 2^cutoff assignments.
  unsigned cutoff = 30;
  unsigned threads = 1;
};

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t assignments_checked = 0;
};

// Per-vertex upper bound on induced colors: a scalar applies to every vertex.
using ColorBound = std::variant<std::uint32_t, std::vector<std::uint32_t>>;

// Number of assignments enumerated with `free_edges` free edges and at most
// `budget` of them set to one (saturates at UINT64_MAX).
std::uint64_t enumeration_size(std::size_t free_edges, std::optional<std::size_t> budget);

// First proper extension of `pre` in (ones-count, lexicographic) order over
// the free edges, restricted to at most `budget` weight-1 free edges.
std::optional<WeightAssignment> solve_exhaustive(const Graph& g, const PartialWeightAssignment& pre,
                                                 const OracleOptions& options = {},
                                                 SearchStats* stats = nullptr);

std::uint64_t count_proper(const Graph& g, const PartialWeightAssignment& pre, unsigned cutoff = 30);

bool exists_with_color_bound(const Graph& g, const PartialWeightAssignment& pre, const ColorBound& bound,
                             unsigned cutoff = 30);

// Calls `visit` for every proper extension of `pre` whose colors respect
// `bound` (if given). Returning false from `visit` stops the enumeration.
// Returns the number of visited assignments.
std::uint64_t for_each_proper(const Graph& g, const PartialWeightAssignment& pre,
                              const std::optional<ColorBound>& bound,
                              const std::function<bool(const WeightAssignment&, const ColorVector&)>& visit,
                              unsigned cutoff = 30);

}  // namespace vcew
