#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vcew/graph.hpp"

namespace vcew {

// Rooted tree of bags. Bags hold sorted vertex ids; tree_edges index bags.
struct TreeDecomposition {
  std::size_t vertex_count = 0;
  std::vector<std::vector<VertexId>> bags;
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
  std::size_t root = 0;

  // max bag size - 1; -1 for a decomposition without vertices.
  int width() const;
  // Parent per bag (root maps to itself). Throws ValidationError if the
  // tree edges do not form a tree over all bags.
  std::vector<std::size_t> parents() const;
};

// Reason the decomposition is invalid for g, or nullopt if it is valid.
std::optional<std::string> decomposition_problem(const Graph& g, const TreeDecomposition& td);
bool validate_decomposition(const Graph& g, const TreeDecomposition& td);

// Min-fill elimination heuristic (ties: smaller degree, then smaller id).
TreeDecomposition compute_decomposition(const Graph& g);
std::vector<VertexId> min_fill_order(const Graph& g);

enum class NiceKind { Leaf, IntroduceVertex, IntroduceEdge, Forget, Join };

struct NiceNode {
  NiceKind kind = NiceKind::Leaf;
  std::vector<VertexId> bag;
  VertexId vertex = 0;  // IntroduceVertex / Forget
  EdgeId edge = 0;      // IntroduceEdge
  int left = -1;        // single child, or first child of a Join
  int right = -1;       // second child of a Join
};

// Nodes are stored children-first; the root is the last node.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;

  std::size_t root() const { return nodes.size() - 1; }
  int width() const;
};

// Reason the nice decomposition is invalid for g, or nullopt.
std::optional<std::string> nice_problem(const Graph& g, const NiceTreeDecomposition& ntd);

// Same width as td; every edge is introduced exactly once. Throws
// ValidationError when td is not a valid decomposition of g.
NiceTreeDecomposition make_nice(const TreeDecomposition& td, const Graph& g);

}  // namespace vcew
