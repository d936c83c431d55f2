#pragma once

#include <cstdint>

#include "vcew/graph.hpp"
#include "vcew/list_coloring.hpp"

namespace vcew {

// G(n, p): every pair independently with probability p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

// `core` vertices with G(core, core_p) edges among them, plus `classes`
// groups of `class_size` independent twins; each group is joined to a random
// nonempty subset of the core.
Graph planted_twins(std::size_t core, double core_p, std::size_t classes, std::size_t class_size,
                    std::uint64_t seed);

// Each edge pre-weighted with probability `fraction`; the weight is 1, or a
// fair coin when allow_zero is set.
PartialWeightAssignment random_preweights(const Graph& g, double fraction, bool allow_zero, std::uint64_t seed);

// G(n, p) with lists drawn from {2, ..., max_color}, sizes 1..max_list.
ListColoringInstance random_list_instance(std::size_t n, double p, std::uint32_t max_color, std::size_t max_list,
                                          std::uint64_t seed);

}  // namespace vcew
