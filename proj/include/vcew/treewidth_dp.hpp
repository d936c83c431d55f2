#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vcew/decomposition.hpp"
#include "vcew/graph.hpp"

namespace vcew {

// fd: intended degree in the solution subgraph; cd: degree so far.
struct FeasiblePair {
  std::uint16_t fd = 0;
  std::uint16_t cd = 0;

  friend bool operator==(const FeasiblePair&, const FeasiblePair&) = default;
};

// One pair per bag vertex, in bag order.
using DPState = std::vector<FeasiblePair>;

struct DpOptions {
  // Re-check every stored entry with check_partial_solution. Slow.
  bool check_invariants = false;
  // Use the maximum degree as the fd ceiling for every vertex instead of
  // the vertex's own degree.
  bool global_degree_cap = false;
};

struct DpStats {
  std::vector<std::size_t> states_per_node;
  std::size_t max_states = 0;
  std::uint64_t states_stored = 0;
};

// Proper extension of pre, or nullopt. Throws ValidationError if ntd is not
// a nice decomposition of g.
std::optional<WeightAssignment> dp_solve(const Graph& g, const NiceTreeDecomposition& ntd,
                                         const PartialWeightAssignment& pre, const DpOptions& options = {},
                                         DpStats* stats = nullptr);

// Decomposes g (min-fill) unless td is given, then runs dp_solve.
std::optional<WeightAssignment> solve_treewidth(const Graph& g, const PartialWeightAssignment& pre,
                                                const std::optional<TreeDecomposition>& td = std::nullopt,
                                                const DpOptions& options = {}, DpStats* stats = nullptr);

// Edges introduced at or below `node`, ascending.
std::vector<EdgeId> subtree_edges(const Graph& g, const NiceTreeDecomposition& ntd, std::size_t node);

// Whether h_edges is a partial solution of state f at `node`.
bool check_partial_solution(const Graph& g, const NiceTreeDecomposition& ntd, std::size_t node, const DPState& f,
                            const std::vector<EdgeId>& h_edges);

// (Δ+1)^(2·(width+1)), saturating.
std::uint64_t state_count_bound(std::size_t max_degree, int width);

}  // namespace vcew
