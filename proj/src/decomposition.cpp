#include "vcew/decomposition.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "vcew/errors.hpp"

namespace vcew {

namespace {

bool bag_contains(const std::vector<VertexId>& bag, VertexId v) {
  return std::binary_search(bag.begin(), bag.end(), v);
}

int width_of(std::size_t max_bag) { return static_cast<int>(max_bag) - 1; }

}  // namespace

int TreeDecomposition::width() const {
  std::size_t best = 0;
  for (const auto& bag : bags) best = std::max(best, bag.size());
  return width_of(best);
}

std::vector<std::size_t> TreeDecomposition::parents() const {
  if (bags.empty()) throw ValidationError("decomposition has no bags");
  if (root >= bags.size()) throw ValidationError("root bag " + std::to_string(root + 1) + " does not exist");
  if (tree_edges.size() + 1 != bags.size()) {
    throw ValidationError("tree over " + std::to_string(bags.size()) + " bags needs " +
                          std::to_string(bags.size() - 1) + " edges, got " + std::to_string(tree_edges.size()));
  }
  std::vector<std::vector<std::size_t>> adj(bags.size());
  for (const auto& [a, b] : tree_edges) {
    if (a >= bags.size() || b >= bags.size()) throw ValidationError("tree edge references an unknown bag");
    if (a == b) throw ValidationError("tree edge is a self-loop at bag " + std::to_string(a + 1));
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  constexpr std::size_t kUnseen = ~std::size_t{0};
  std::vector<std::size_t> parent(bags.size(), kUnseen);
  parent[root] = root;
  std::queue<std::size_t> queue;
  queue.push(root);
  std::size_t seen = 1;
  while (!queue.empty()) {
    const std::size_t t = queue.front();
    queue.pop();
    for (std::size_t c : adj[t]) {
      if (parent[c] != kUnseen) continue;
      parent[c] = t;
      ++seen;
      queue.push(c);
    }
  }
  if (seen != bags.size()) throw ValidationError("tree edges do not connect all bags");
  return parent;
}

std::optional<std::string> decomposition_problem(const Graph& g, const TreeDecomposition& td) {
  std::vector<std::size_t> parent;
  try {
    parent = td.parents();
  } catch (const ValidationError& e) {
    return std::string(e.what());
  }
  if (td.vertex_count != g.vertex_count()) {
    return "decomposition is for " + std::to_string(td.vertex_count) + " vertices, graph has " +
           std::to_string(g.vertex_count());
  }
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> occurrences(n);
  for (std::size_t t = 0; t < td.bags.size(); ++t) {
    const auto& bag = td.bags[t];
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (bag[i] >= n) return "bag " + std::to_string(t + 1) + " holds unknown vertex " + std::to_string(bag[i] + 1);
      if (i > 0 && bag[i - 1] >= bag[i]) return "bag " + std::to_string(t + 1) + " is not a sorted set";
      occurrences[bag[i]].push_back(t);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (occurrences[v].empty()) return "vertex " + std::to_string(v + 1) + " is in no bag";
    std::size_t tops = 0;
    for (std::size_t t : occurrences[v]) {
      if (t == td.root || !bag_contains(td.bags[parent[t]], v)) ++tops;
    }
    if (tops != 1) return "bags containing vertex " + std::to_string(v + 1) + " are not connected";
  }
  for (const Edge& e : g.edges()) {
    const auto& a = occurrences[e.u];
    const auto& b = occurrences[e.v];
    std::vector<std::size_t> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) {
      return "edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "} is not covered by any bag";
    }
  }
  return std::nullopt;
}

bool validate_decomposition(const Graph& g, const TreeDecomposition& td) { return !decomposition_problem(g, td); }

namespace {

struct Elimination {
  std::vector<VertexId> order;
  // Neighbors of order[i] among not-yet-eliminated vertices at its elimination.
  std::vector<std::vector<VertexId>> later;
};

std::size_t count_fill(const std::vector<std::vector<VertexId>>& adj, VertexId x) {
  const auto& nb = adj[x];
  const std::size_t d = nb.size();
  std::size_t adjacent_pairs = 0;
  for (VertexId a : nb) {
    const auto& na = adj[a];
    auto i = nb.begin();
    auto j = na.begin();
    while (i != nb.end() && j != na.end()) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        ++adjacent_pairs;
        ++i;
        ++j;
      }
    }
  }
  return d * (d - 1) / 2 - adjacent_pairs / 2;
}

void insert_sorted(std::vector<VertexId>& list, VertexId v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it == list.end() || *it != v) list.insert(it, v);
}

void erase_sorted(std::vector<VertexId>& list, VertexId v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) list.erase(it);
}

Elimination eliminate_min_fill(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexId>> adj(n);
  for (VertexId v = 0; v < n; ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());

  using Key = std::tuple<std::size_t, std::size_t, VertexId>;  // fill, degree, id
  std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
  std::vector<std::size_t> fill(n);
  std::vector<bool> gone(n, false);
  for (VertexId v = 0; v < n; ++v) {
    fill[v] = count_fill(adj, v);
    heap.emplace(fill[v], adj[v].size(), v);
  }

  Elimination out;
  std::vector<VertexId> affected;
  std::vector<std::size_t> stamp(n, 0);
  std::size_t round = 0;
  while (!heap.empty()) {
    const auto [f, d, v] = heap.top();
    heap.pop();
    if (gone[v] || f != fill[v] || d != adj[v].size()) continue;  // stale entry
    gone[v] = true;
    ++round;
    const std::vector<VertexId> nb = adj[v];
    out.order.push_back(v);
    out.later.push_back(nb);

    bool added_fill = false;
    for (VertexId a : nb) erase_sorted(adj[a], v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        auto& la = adj[nb[i]];
        if (!std::binary_search(la.begin(), la.end(), nb[j])) {
          insert_sorted(la, nb[j]);
          insert_sorted(adj[nb[j]], nb[i]);
          added_fill = true;
        }
      }
    }
    adj[v].clear();

    affected.clear();
    auto touch = [&](VertexId x) {
      if (!gone[x] && stamp[x] != round) {
        stamp[x] = round;
        affected.push_back(x);
      }
    };
    for (VertexId a : nb) {
      touch(a);
      // New fill edges change adjacency among the neighbors of their endpoints.
      if (added_fill) {
        for (VertexId b : adj[a]) touch(b);
      }
    }
    for (VertexId x : affected) {
      fill[x] = count_fill(adj, x);
      heap.emplace(fill[x], adj[x].size(), x);
    }
  }
  return out;
}

}  // namespace

std::vector<VertexId> min_fill_order(const Graph& g) { return eliminate_min_fill(g).order; }

TreeDecomposition compute_decomposition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  TreeDecomposition td;
  td.vertex_count = n;
  if (n == 0) {
    td.bags.emplace_back();
    return td;
  }
  const Elimination elim = eliminate_min_fill(g);
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[elim.order[i]] = i;
  td.bags.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto bag = elim.later[i];
    bag.push_back(elim.order[i]);
    std::sort(bag.begin(), bag.end());
    td.bags[i] = std::move(bag);
  }
  td.root = n - 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t parent = n - 1;  // component roots hang off the last bag
    if (!elim.later[i].empty()) {
      parent = n;
      for (VertexId u : elim.later[i]) parent = std::min(parent, position[u]);
    }
    td.tree_edges.emplace_back(i, parent);
  }
  return td;
}

int NiceTreeDecomposition::width() const {
  std::size_t best = 0;
  for (const auto& node : nodes) best = std::max(best, node.bag.size());
  return width_of(best);
}

std::optional<std::string> nice_problem(const Graph& g, const NiceTreeDecomposition& ntd) {
  if (ntd.nodes.empty()) return std::string("nice decomposition has no nodes");
  const std::size_t count = ntd.nodes.size();
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kNone = ~std::size_t{0};
  std::vector<std::size_t> parent(count, kNone);
  std::vector<std::size_t> introduced(g.edge_count(), 0);
  auto name = [](std::size_t i) { return "node " + std::to_string(i); };

  for (std::size_t i = 0; i < count; ++i) {
    const NiceNode& node = ntd.nodes[i];
    for (std::size_t j = 0; j < node.bag.size(); ++j) {
      if (node.bag[j] >= n) return name(i) + " holds an unknown vertex";
      if (j > 0 && node.bag[j - 1] >= node.bag[j]) return name(i) + " bag is not a sorted set";
    }
    for (int child : {node.left, node.right}) {
      if (child < 0) continue;
      if (static_cast<std::size_t>(child) >= i) return name(i) + " has a child stored after it";
      if (parent[static_cast<std::size_t>(child)] != kNone) return name(child) + " has two parents";
      parent[static_cast<std::size_t>(child)] = i;
    }
    const bool one_child = node.left >= 0 && node.right < 0;
    const std::vector<VertexId>* child_bag = node.left >= 0 ? &ntd.nodes[static_cast<std::size_t>(node.left)].bag : nullptr;
    switch (node.kind) {
      case NiceKind::Leaf:
        if (node.left >= 0 || node.right >= 0) return name(i) + " is a leaf with children";
        if (!node.bag.empty()) return name(i) + " is a leaf with a nonempty bag";
        break;
      case NiceKind::IntroduceVertex: {
        if (!one_child) return name(i) + " introduce-vertex needs exactly one child";
        if (bag_contains(*child_bag, node.vertex)) return name(i) + " introduces a vertex already present";
        auto expected = *child_bag;
        expected.insert(std::lower_bound(expected.begin(), expected.end(), node.vertex), node.vertex);
        if (expected != node.bag) return name(i) + " bag is not child bag plus the introduced vertex";
        break;
      }
      case NiceKind::IntroduceEdge: {
        if (!one_child) return name(i) + " introduce-edge needs exactly one child";
        if (*child_bag != node.bag) return name(i) + " introduce-edge changes the bag";
        if (node.edge >= g.edge_count()) return name(i) + " introduces an unknown edge";
        const Edge& e = g.edge(node.edge);
        if (!bag_contains(node.bag, e.u) || !bag_contains(node.bag, e.v)) {
          return name(i) + " introduces an edge whose endpoints are not both in the bag";
        }
        ++introduced[node.edge];
        break;
      }
      case NiceKind::Forget: {
        if (!one_child) return name(i) + " forget needs exactly one child";
        if (!bag_contains(*child_bag, node.vertex)) return name(i) + " forgets a vertex not in the child bag";
        auto expected = *child_bag;
        expected.erase(std::lower_bound(expected.begin(), expected.end(), node.vertex));
        if (expected != node.bag) return name(i) + " bag is not child bag minus the forgotten vertex";
        break;
      }
      case NiceKind::Join:
        if (node.left < 0 || node.right < 0) return name(i) + " join needs two children";
        if (ntd.nodes[static_cast<std::size_t>(node.left)].bag != node.bag ||
            ntd.nodes[static_cast<std::size_t>(node.right)].bag != node.bag) {
          return name(i) + " join children have different bags";
        }
        break;
    }
  }
  const std::size_t root = ntd.root();
  if (!ntd.nodes[root].bag.empty()) return std::string("root bag is not empty");
  for (std::size_t i = 0; i + 1 < count; ++i) {
    if (parent[i] == kNone) return name(i) + " is disconnected from the root";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (introduced[e] != 1) {
      return "edge {" + std::to_string(g.edge(e).u + 1) + "," + std::to_string(g.edge(e).v + 1) + "} is introduced " +
             std::to_string(introduced[e]) + " times";
    }
  }
  std::vector<std::size_t> tops(n, 0);
  for (std::size_t i = 0; i < count; ++i) {
    for (VertexId v : ntd.nodes[i].bag) {
      if (parent[i] == kNone || !bag_contains(ntd.nodes[parent[i]].bag, v)) ++tops[v];
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (tops[v] != 1) return "nodes containing vertex " + std::to_string(v + 1) + " do not form one subtree";
  }
  return std::nullopt;
}

namespace {

class NiceBuilder {
 public:
  explicit NiceBuilder(const Graph& g) : g_(g) {}

  std::size_t leaf() {
    nodes_.push_back(NiceNode{});
    return nodes_.size() - 1;
  }

  std::size_t introduce_vertex(std::size_t child, VertexId v) {
    NiceNode node;
    node.kind = NiceKind::IntroduceVertex;
    node.vertex = v;
    node.bag = nodes_[child].bag;
    node.bag.insert(std::lower_bound(node.bag.begin(), node.bag.end(), v), v);
    node.left = static_cast<int>(child);
    return push(std::move(node));
  }

  std::size_t introduce_edge(std::size_t child, EdgeId e) {
    NiceNode node;
    node.kind = NiceKind::IntroduceEdge;
    node.edge = e;
    node.bag = nodes_[child].bag;
    node.left = static_cast<int>(child);
    return push(std::move(node));
  }

  std::size_t forget(std::size_t child, VertexId v) {
    NiceNode node;
    node.kind = NiceKind::Forget;
    node.vertex = v;
    node.bag = nodes_[child].bag;
    node.bag.erase(std::lower_bound(node.bag.begin(), node.bag.end(), v));
    node.left = static_cast<int>(child);
    return push(std::move(node));
  }

  std::size_t join(std::size_t a, std::size_t b) {
    NiceNode node;
    node.kind = NiceKind::Join;
    node.bag = nodes_[a].bag;
    node.left = static_cast<int>(a);
    node.right = static_cast<int>(b);
    return push(std::move(node));
  }

  const std::vector<VertexId>& bag(std::size_t i) const { return nodes_[i].bag; }

  // Introduces every pending edge whose endpoints are both in the current bag.
  std::size_t introduce_ready(std::size_t cur, std::vector<EdgeId>& pending) {
    std::vector<EdgeId> rest;
    for (EdgeId e : pending) {
      const Edge& edge = g_.edge(e);
      if (bag_contains(nodes_[cur].bag, edge.u) && bag_contains(nodes_[cur].bag, edge.v)) {
        cur = introduce_edge(cur, e);
      } else {
        rest.push_back(e);
      }
    }
    pending = std::move(rest);
    return cur;
  }

  NiceTreeDecomposition finish() { return NiceTreeDecomposition{std::move(nodes_)}; }

 private:
  std::size_t push(NiceNode node) {
    nodes_.push_back(std::move(node));
    return nodes_.size() - 1;
  }

  const Graph& g_;
  std::vector<NiceNode> nodes_;
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td, const Graph& g) {
  if (auto problem = decomposition_problem(g, td)) throw ValidationError("invalid tree decomposition: " + *problem);
  const std::vector<std::size_t> parent = td.parents();
  const std::size_t count = td.bags.size();
  std::vector<std::vector<std::size_t>> children(count);
  for (std::size_t t = 0; t < count; ++t) {
    if (t != td.root) children[parent[t]].push_back(t);
  }

  // Iterative post-order, children in ascending bag index.
  std::vector<std::size_t> post;
  post.reserve(count);
  {
    std::vector<std::pair<std::size_t, std::size_t>> stack{{td.root, 0}};
    while (!stack.empty()) {
      auto& [t, next] = stack.back();
      if (next < children[t].size()) {
        const std::size_t c = children[t][next++];
        stack.emplace_back(c, 0);
      } else {
        post.push_back(t);
        stack.pop_back();
      }
    }
  }

  // Each edge belongs to the first bag in post-order that contains both ends.
  constexpr std::size_t kUnowned = ~std::size_t{0};
  std::vector<std::size_t> owner(g.edge_count(), kUnowned);
  std::vector<std::vector<EdgeId>> owned(count);
  std::vector<std::size_t> mark(g.vertex_count(), kUnowned);
  for (std::size_t t : post) {
    for (VertexId v : td.bags[t]) mark[v] = t;
    for (VertexId u : td.bags[t]) {
      auto nb = g.neighbors(u);
      auto inc = g.incident_edges(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (nb[i] > u && mark[nb[i]] == t && owner[inc[i]] == kUnowned) {
          owner[inc[i]] = t;
          owned[t].push_back(inc[i]);
        }
      }
    }
  }
  for (auto& list : owned) std::sort(list.begin(), list.end());

  NiceBuilder builder(g);
  std::vector<std::size_t> top(count, 0);
  for (std::size_t t : post) {
    const auto& target = td.bags[t];
    std::vector<EdgeId> pending = owned[t];
    std::vector<std::size_t> chain_tops;
    auto extend_to_target = [&](std::size_t cur, bool carry_edges) {
      const std::vector<VertexId> from = builder.bag(cur);
      for (VertexId v : from) {
        if (!bag_contains(target, v)) cur = builder.forget(cur, v);
      }
      if (carry_edges) cur = builder.introduce_ready(cur, pending);
      for (VertexId v : target) {
        if (bag_contains(from, v)) continue;
        cur = builder.introduce_vertex(cur, v);
        if (carry_edges) cur = builder.introduce_ready(cur, pending);
      }
      return cur;
    };
    if (children[t].empty()) {
      chain_tops.push_back(extend_to_target(builder.leaf(), true));
    } else {
      for (std::size_t i = 0; i < children[t].size(); ++i) {
        chain_tops.push_back(extend_to_target(top[children[t][i]], i == 0));
      }
    }
    std::size_t acc = chain_tops[0];
    for (std::size_t i = 1; i < chain_tops.size(); ++i) acc = builder.join(acc, chain_tops[i]);
    top[t] = acc;
  }

  std::size_t cur = top[td.root];
  const std::vector<VertexId> root_bag = builder.bag(cur);
  for (VertexId v : root_bag) cur = builder.forget(cur, v);
  return builder.finish();
}

}  // namespace vcew
