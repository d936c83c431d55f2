#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace vcew::testing {

Graph make_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<Edge> out;
  for (const auto& [a, b] : edges) out.push_back({a, b});
  return Graph(n, out);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, static_cast<VertexId>(n - 1)});
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, edges);
}

namespace {

using Adjacency = std::vector<std::uint32_t>;  // bit j of row i: edge {i, j}

std::uint64_t encode(const Adjacency& adj, const std::vector<std::size_t>& order) {
  std::uint64_t code = 0;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) code = code << 1 | ((adj[order[i]] >> order[j]) & 1u);
  }
  return code;
}

// Smallest code over labelings that sort vertices by degree; only
// permutations inside equal-degree blocks need to be tried.
std::uint64_t canonical_code(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  auto degree = [&](std::size_t v) { return __builtin_popcount(adj[v]); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return degree(a) != degree(b) ? degree(a) < degree(b) : a < b;
  });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && degree(order[j]) == degree(order[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  // Odometer over the blocks' permutations.
  for (;;) {
    best = std::min(best, encode(adj, order));
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto first = order.begin() + static_cast<long>(blocks[b].first);
      auto last = order.begin() + static_cast<long>(blocks[b].second);
      if (std::next_permutation(first, last)) break;
    }
    if (b == blocks.size()) break;
  }
  return best;
}

Graph to_graph(const Adjacency& adj) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < adj.size(); ++i) {
    for (VertexId j = i + 1; j < adj.size(); ++j) {
      if ((adj[i] >> j) & 1u) edges.push_back({i, j});
    }
  }
  return Graph(adj.size(), edges);
}

}  // namespace

namespace {

// Every graph on n vertices is a graph on n-1 vertices plus one more vertex;
// a nonempty neighborhood keeps connected graphs connected.
std::vector<Graph> graph_classes(std::size_t max_n, bool connected) {
  std::vector<Graph> all;
  std::vector<Adjacency> level{Adjacency(1, 0)};
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (n > 1) {
      std::vector<Adjacency> next;
      std::set<std::uint64_t> seen;
      for (const auto& base : level) {
        for (std::uint32_t mask = connected ? 1 : 0; mask < (1u << (n - 1)); ++mask) {
          Adjacency adj = base;
          adj.push_back(mask);
          for (std::size_t v = 0; v + 1 < n; ++v) {
            if ((mask >> v) & 1u) adj[v] |= 1u << (n - 1);
          }
          if (seen.insert(canonical_code(adj)).second) next.push_back(std::move(adj));
        }
      }
      level = std::move(next);
    }
    for (const auto& adj : level) all.push_back(to_graph(adj));
  }
  return all;
}

}  // namespace

const std::vector<Graph>& connected_graphs(std::size_t max_n) {
  static std::map<std::size_t, std::vector<Graph>> cache;
  if (auto it = cache.find(max_n); it == cache.end()) cache[max_n] = graph_classes(max_n, true);
  return cache[max_n];
}

const std::vector<Graph>& all_graphs(std::size_t max_n) {
  static std::map<std::size_t, std::vector<Graph>> cache;
  if (auto it = cache.find(max_n); it == cache.end()) cache[max_n] = graph_classes(max_n, false);
  return cache[max_n];
}

std::optional<std::vector<Color>> brute_list_coloring(const ListColoringInstance& inst) {
  const std::size_t n = inst.graph.vertex_count();
  std::vector<std::size_t> pick(n, 0);
  std::vector<Color> c(n);
  for (;;) {
    for (std::size_t v = 0; v < n; ++v) c[v] = inst.lists[v][pick[v]];
    if (is_list_coloring(inst, c)) return c;
    std::size_t v = n;
    while (v > 0) {
      --v;
      if (++pick[v] < inst.lists[v].size()) break;
      pick[v] = 0;
      if (v == 0) return std::nullopt;
    }
    if (n == 0) return c;
  }
}

Weight weight_of(const Graph& g, const WeightAssignment& w, VertexId a, VertexId b) {
  return w[*g.find_edge(a, b)];
}

}  // namespace vcew::testing
