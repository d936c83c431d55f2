#include "vcew/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "vcew/errors.hpp"

namespace vcew {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

// Non-empty, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::string_view text, char comment) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty() && line.tokens[0][0] != comment) out.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::uint64_t number(const Line& line, std::size_t index, const char* what) {
  if (index >= line.tokens.size()) throw ParseError(line.number, std::string("missing ") + what);
  const std::string_view tok = line.tokens[index];
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line.number, "expected a nonnegative integer for " + std::string(what) + ", got '" +
                                      std::string(tok) + "'");
  }
  return value;
}

VertexId vertex(const Line& line, std::size_t index, std::size_t n) {
  const std::uint64_t v = number(line, index, "vertex");
  if (v < 1 || v > n) {
    throw ParseError(line.number, "vertex " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
  }
  return static_cast<VertexId>(v - 1);
}

void expect_tokens(const Line& line, std::size_t lo, std::size_t hi) {
  if (line.tokens.size() < lo || line.tokens.size() > hi) {
    throw ParseError(line.number, "unexpected number of tokens (" + std::to_string(line.tokens.size()) + ")");
  }
}

// Reads "p <kind> n m" and the m edge lines after it. Pre-weights go into
// `weights` when allowed, keyed by position in the returned edge list.
std::vector<Edge> read_edges(const std::vector<Line>& lines, std::size_t m, std::size_t n, std::size_t first,
                             bool allow_weight, std::vector<std::pair<std::size_t, Weight>>* weights,
                             std::size_t end_line) {
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, std::size_t>> seen;
  for (std::size_t i = first; i < first + m; ++i) {
    if (i >= lines.size()) {
      throw ParseError(end_line, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(i - first));
    }
    const Line& line = lines[i];
    expect_tokens(line, 2, allow_weight ? 3 : 2);
    const VertexId u = vertex(line, 0, n);
    const VertexId v = vertex(line, 1, n);
    if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u + 1));
    if (line.tokens.size() == 3) {
      const std::uint64_t w = number(line, 2, "weight");
      if (w > 1) throw ParseError(line.number, "weight " + std::to_string(w) + " is not in {0,1}");
      weights->emplace_back(edges.size(), static_cast<Weight>(w));
    }
    edges.push_back(Edge::canonical(u, v));
    seen.emplace_back(edges.back(), line.number);
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first) {
      throw ParseError(std::max(seen[i].second, seen[i - 1].second),
                       "duplicate edge {" + std::to_string(seen[i].first.u + 1) + "," +
                           std::to_string(seen[i].first.v + 1) + "}");
    }
  }
  return edges;
}

std::size_t last_line(std::string_view text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
}

}  // namespace

GraphInstance parse_graph(std::string_view text) {
  const std::vector<Line> lines = tokenize(text, 'c');
  if (lines.empty()) throw ParseError(1, "missing 'p vcew n m' header");
  const Line& header = lines[0];
  if (header.tokens.size() != 4 || header.tokens[0] != "p" || header.tokens[1] != "vcew") {
    throw ParseError(header.number, "expected header 'p vcew n m'");
  }
  const std::size_t n = number(header, 2, "vertex count");
  const std::size_t m = number(header, 3, "edge count");
  std::vector<std::pair<std::size_t, Weight>> weights;
  std::vector<Edge> edges = read_edges(lines, m, n, 1, true, &weights, last_line(text));
  if (lines.size() > m + 1) throw ParseError(lines[m + 1].number, "more edge lines than the header announces");
  GraphInstance out;
  out.graph = Graph(n, edges);
  for (const auto& [index, w] : weights) out.pre.set(*out.graph.find_edge(edges[index].u, edges[index].v), w);
  return out;
}

std::string emit_graph(const Graph& g, const PartialWeightAssignment& pre) {
  std::ostringstream out;
  out << "p vcew " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << g.edge(e).u + 1 << ' ' << g.edge(e).v + 1;
    if (auto w = pre.get(e)) out << ' ' << static_cast<int>(*w);
    out << '\n';
  }
  return out.str();
}

TreeDecomposition parse_td(std::string_view text) {
  const std::vector<Line> lines = tokenize(text, 'c');
  if (lines.empty()) throw ParseError(1, "missing 's td <bags> <width+1> <n>' header");
  const Line& header = lines[0];
  if (header.tokens.size() != 5 || header.tokens[0] != "s" || header.tokens[1] != "td") {
    throw ParseError(header.number, "expected header 's td <bags> <width+1> <n>'");
  }
  const std::size_t bag_count = number(header, 2, "bag count");
  const std::size_t max_bag = number(header, 3, "maximum bag size");
  const std::size_t n = number(header, 4, "vertex count");
  if (bag_count == 0) throw ParseError(header.number, "decomposition needs at least one bag");

  TreeDecomposition td;
  td.vertex_count = n;
  td.bags.resize(bag_count);
  std::vector<bool> defined(bag_count, false);
  auto bag_id = [&](const Line& line, std::size_t index) {
    const std::uint64_t id = number(line, index, "bag id");
    if (id < 1 || id > bag_count) throw ParseError(line.number, "unknown bag id " + std::to_string(id));
    return static_cast<std::size_t>(id - 1);
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "b") {
      const std::size_t id = bag_id(line, 1);
      if (defined[id]) throw ParseError(line.number, "bag " + std::to_string(id + 1) + " defined twice");
      defined[id] = true;
      auto& bag = td.bags[id];
      for (std::size_t j = 2; j < line.tokens.size(); ++j) bag.push_back(vertex(line, j, n));
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
        throw ParseError(line.number, "bag " + std::to_string(id + 1) + " repeats a vertex");
      }
      if (bag.size() > max_bag) {
        throw ParseError(line.number, "bag " + std::to_string(id + 1) + " is larger than the header allows");
      }
    } else {
      expect_tokens(line, 2, 2);
      td.tree_edges.emplace_back(bag_id(line, 0), bag_id(line, 1));
    }
  }
  for (std::size_t id = 0; id < bag_count; ++id) {
    if (!defined[id]) throw ParseError(header.number, "bag " + std::to_string(id + 1) + " is never defined");
  }
  if (static_cast<std::size_t>(td.width() + 1) != max_bag) {
    throw ParseError(header.number, "header announces maximum bag size " + std::to_string(max_bag) +
                                        ", bags have " + std::to_string(td.width() + 1));
  }
  try {
    td.parents();
  } catch (const ValidationError& e) {
    throw ParseError(header.number, e.what());
  }
  return td;
}

std::string emit_td(const TreeDecomposition& td) {
  std::ostringstream out;
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << td.vertex_count << '\n';
  // Bag 1 is the root on the wire, so the root is swapped into position 0.
  std::vector<std::size_t> wire(td.bags.size());
  for (std::size_t i = 0; i < wire.size(); ++i) wire[i] = i;
  std::swap(wire[0], wire[td.root]);
  std::vector<std::size_t> id_of(td.bags.size());
  for (std::size_t i = 0; i < wire.size(); ++i) id_of[wire[i]] = i;
  for (std::size_t i = 0; i < wire.size(); ++i) {
    out << "b " << i + 1;
    for (VertexId v : td.bags[wire[i]]) out << ' ' << v + 1;
    out << '\n';
  }
  for (const auto& [a, b] : td.tree_edges) out << id_of[a] + 1 << ' ' << id_of[b] + 1 << '\n';
  return out.str();
}

ListColoringInstance parse_listcoloring(std::string_view text) {
  const std::vector<Line> lines = tokenize(text, 'c');
  if (lines.empty()) throw ParseError(1, "missing 'p lc n m' header");
  const Line& header = lines[0];
  if (header.tokens.size() != 4 || header.tokens[0] != "p" || header.tokens[1] != "lc") {
    throw ParseError(header.number, "expected header 'p lc n m'");
  }
  const std::size_t n = number(header, 2, "vertex count");
  const std::size_t m = number(header, 3, "edge count");
  std::vector<Line> edge_lines;
  std::vector<const Line*> list_lines;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].tokens[0] == "l") {
      list_lines.push_back(&lines[i]);
    } else {
      edge_lines.push_back(lines[i]);
    }
  }
  if (edge_lines.size() > m) throw ParseError(edge_lines[m].number, "more edge lines than the header announces");
  ListColoringInstance inst;
  inst.graph = Graph(n, read_edges(edge_lines, m, n, 0, false, nullptr, last_line(text)));
  inst.lists.resize(n);
  std::vector<bool> defined(n, false);
  for (const Line* line : list_lines) {
    const VertexId v = vertex(*line, 1, n);
    if (defined[v]) throw ParseError(line->number, "second list for vertex " + std::to_string(v + 1));
    defined[v] = true;
    auto& list = inst.lists[v];
    for (std::size_t j = 2; j < line->tokens.size(); ++j) {
      const std::uint64_t c = number(*line, j, "color");
      if (c < 1 || c > 0xffffffffull) throw ParseError(line->number, "colors must be positive integers");
      list.push_back(static_cast<Color>(c));
    }
    if (list.empty()) throw ParseError(line->number, "empty list for vertex " + std::to_string(v + 1));
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw ParseError(line->number, "list for vertex " + std::to_string(v + 1) + " repeats a color");
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!defined[v]) throw ParseError(last_line(text), "vertex " + std::to_string(v + 1) + " has no list");
  }
  return inst;
}

std::string emit_listcoloring(const ListColoringInstance& inst) {
  std::ostringstream out;
  out << "p lc " << inst.graph.vertex_count() << ' ' << inst.graph.edge_count() << '\n';
  for (const Edge& e : inst.graph.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
  for (VertexId v = 0; v < inst.lists.size(); ++v) {
    out << "l " << v + 1;
    for (Color c : inst.lists[v]) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

WeightAssignment parse_weights(const Graph& g, std::string_view text) {
  const std::vector<Line> lines = tokenize(text, 'c');
  std::vector<std::int8_t> seen(g.edge_count(), -1);
  for (const Line& line : lines) {
    expect_tokens(line, 3, 3);
    const VertexId u = vertex(line, 0, g.vertex_count());
    const VertexId v = vertex(line, 1, g.vertex_count());
    const std::uint64_t w = number(line, 2, "weight");
    if (w > 1) throw ParseError(line.number, "weight " + std::to_string(w) + " is not in {0,1}");
    const auto e = g.find_edge(u, v);
    if (!e) {
      throw ParseError(line.number, "{" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "} is not an edge");
    }
    if (seen[*e] >= 0) throw ParseError(line.number, "edge weighted twice");
    seen[*e] = static_cast<std::int8_t>(w);
  }
  WeightAssignment out(g.edge_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (seen[e] < 0) {
      throw MalformedAssignment("no weight for edge {" + std::to_string(g.edge(e).u + 1) + "," +
                                std::to_string(g.edge(e).v + 1) + "}");
    }
    out.set(e, static_cast<Weight>(seen[e]));
  }
  return out;
}

std::string emit_weights(const Graph& g, const WeightAssignment& w) {
  std::ostringstream out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << g.edge(e).u + 1 << ' ' << g.edge(e).v + 1 << ' ' << static_cast<int>(w[e]) << '\n';
  }
  return out.str();
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Yes:
      return "yes";
    case Status::No:
      return "no";
    case Status::Unknown:
      return "unknown";
  }
  return "unknown";
}

ResultRecord make_result(const Graph& g, const PartialWeightAssignment& pre,
                         const std::optional<WeightAssignment>& w, std::string algorithm) {
  ResultRecord r;
  r.algorithm = std::move(algorithm);
  if (!w) {
    r.status = Status::No;
    return r;
  }
  r.status = Status::Yes;
  r.verified = w->size() == g.edge_count() && is_proper(g, *w) && extends(*w, pre);
  std::vector<std::array<std::uint32_t, 3>> triples;
  for (EdgeId e = 0; e < g.edge_count(); ++e) triples.push_back({g.edge(e).u, g.edge(e).v, (*w)[e]});
  r.witness = std::move(triples);
  r.colors = induced_colors(g, *w);
  return r;
}

std::string emit_result(const ResultRecord& r, bool include_stats) {
  nlohmann::ordered_json j;
  j["status"] = status_name(r.status);
  j["algorithm"] = r.algorithm;
  j["verified"] = r.verified;
  if (r.witness) {
    auto& arr = j["witness"] = nlohmann::ordered_json::array();
    for (const auto& [u, v, w] : *r.witness) arr.push_back({u + 1, v + 1, w});
  }
  if (r.colors) j["colors"] = *r.colors;
  if (include_stats && !r.stats.empty()) {
    auto& stats = j["stats"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.stats) stats[key] = value;
  }
  return j.dump() + "\n";
}

ResultRecord parse_result(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, e.what());
  }
  ResultRecord r;
  try {
    const std::string status = j.at("status").get<std::string>();
    if (status == "yes") {
      r.status = Status::Yes;
    } else if (status == "no") {
      r.status = Status::No;
    } else if (status == "unknown") {
      r.status = Status::Unknown;
    } else {
      throw ParseError(1, "unknown status '" + status + "'");
    }
    r.algorithm = j.at("algorithm").get<std::string>();
    r.verified = j.at("verified").get<bool>();
    if (j.contains("witness")) {
      std::vector<std::array<std::uint32_t, 3>> triples;
      for (const auto& t : j["witness"]) {
        triples.push_back({t.at(0).get<std::uint32_t>() - 1, t.at(1).get<std::uint32_t>() - 1,
                           t.at(2).get<std::uint32_t>()});
      }
      r.witness = std::move(triples);
    }
    if (j.contains("colors")) r.colors = j["colors"].get<ColorVector>();
    if (j.contains("stats")) {
      for (const auto& [key, value] : j["stats"].items()) r.stats[key] = value.get<std::int64_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, e.what());
  }
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << contents;
  if (!out) throw InputError("failed writing " + path);
}

}  // namespace vcew
