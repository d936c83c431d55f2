#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vcew/graph.hpp"
#include "vcew/list_coloring.hpp"

namespace vcew::testing {

Graph make_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

// One representative per isomorphism class of connected graphs with
// 1..max_n vertices (max_n <= 8).
const std::vector<Graph>& connected_graphs(std::size_t max_n);
// Same, without the connectivity requirement.
const std::vector<Graph>& all_graphs(std::size_t max_n);

// Exhaustive list coloring; the first coloring in lexicographic order.
std::optional<std::vector<Color>> brute_list_coloring(const ListColoringInstance& inst);

// Weight of edge {a, b}.
Weight weight_of(const Graph& g, const WeightAssignment& w, VertexId a, VertexId b);

}  // namespace vcew::testing
