#pragma once

#include <cstdint>
#include <vector>

#include "vcew/graph.hpp"

namespace vcew {

using Color = std::uint32_t;

// Graph with one sorted, nonempty list of allowed colors per vertex.
struct ListColoringInstance {
  Graph graph;
  std::vector<std::vector<Color>> lists;
};

// Whether c is proper on inst.graph and c(v) is in L(v) for every v.
bool is_list_coloring(const ListColoringInstance& inst, const std::vector<Color>& c);

}  // namespace vcew
