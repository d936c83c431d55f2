#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vcew/decomposition.hpp"
#include "vcew/graph.hpp"
#include "vcew/list_coloring.hpp"

namespace vcew {

struct GraphInstance {
  Graph graph;
  PartialWeightAssignment pre;
};

// .gr: "p vcew n m", then m lines "u v [w]" (1-indexed, optional pre-weight).
// Lines starting with 'c' are comments. Errors are ParseError with a line.
GraphInstance parse_graph(std::string_view text);
std::string emit_graph(const Graph& g, const PartialWeightAssignment& pre = {});

// .td: "s td <bags> <max bag size> <n>", "b <id> v...", then tree edges.
// Bag 1 is the root.
TreeDecomposition parse_td(std::string_view text);
std::string emit_td(const TreeDecomposition& td);

// .lc: "p lc n m", m edge lines, one "l <v> c..." line per vertex.
ListColoringInstance parse_listcoloring(std::string_view text);
std::string emit_listcoloring(const ListColoringInstance& inst);

// "u v w" per edge of g. A missing edge is a MalformedAssignment.
WeightAssignment parse_weights(const Graph& g, std::string_view text);
std::string emit_weights(const Graph& g, const WeightAssignment& w);

enum class Status { Yes, No, Unknown };

struct ResultRecord {
  Status status = Status::Unknown;
  std::string algorithm;
  bool verified = false;
  // (u, v, weight) with 0-indexed vertices; shifted to 1-indexed on output.
  std::optional<std::vector<std::array<std::uint32_t, 3>>> witness;
  std::optional<ColorVector> colors;
  std::map<std::string, std::int64_t> stats;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

// Fills status, witness, colors and verified from a solver outcome. The
// witness is re-checked against g and pre.
ResultRecord make_result(const Graph& g, const PartialWeightAssignment& pre,
                         const std::optional<WeightAssignment>& w, std::string algorithm);

// Single-line JSON with a fixed key order; stats are left out when empty
// or when include_stats is false.
std::string emit_result(const ResultRecord& r, bool include_stats = true);
ResultRecord parse_result(std::string_view text);

std::string status_name(Status s);

// Whole file contents; InputError if unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace vcew
