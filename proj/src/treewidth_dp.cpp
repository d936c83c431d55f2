#include "vcew/treewidth_dp.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <string>

#include "vcew/errors.hpp"

namespace vcew {

namespace {

using Packed = std::uint32_t;

constexpr Packed pack(std::uint32_t fd, std::uint32_t cd) { return fd << 16 | cd; }
constexpr std::uint32_t fd_of(Packed p) { return p >> 16; }
constexpr std::uint32_t cd_of(Packed p) { return p & 0xffffu; }

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Open-addressing map from fixed-width keys to a 32-bit value. Keys are kept
// in insertion order so iteration is deterministic.
class StateTable {
 public:
  explicit StateTable(std::size_t stride) : stride_(stride), slots_(16, 0) {}

  std::size_t size() const { return values_.size(); }
  std::size_t stride() const { return stride_; }
  const Packed* key(std::size_t i) const { return keys_.data() + i * stride_; }
  std::uint32_t value(std::size_t i) const { return values_[i]; }

  std::optional<std::size_t> find(const Packed* k) const {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t s = hash(k) & mask;; s = (s + 1) & mask) {
      const std::uint32_t slot = slots_[s];
      if (slot == 0) return std::nullopt;
      if (std::equal(k, k + stride_, key(slot - 1))) return slot - 1;
    }
  }

  // Inserts unless the key is present. Returns whether it inserted.
  bool insert(const Packed* k, std::uint32_t v) {
    if ((size() + 1) * 2 > slots_.size()) grow();
    const std::size_t mask = slots_.size() - 1;
    std::size_t s = hash(k) & mask;
    for (; slots_[s] != 0; s = (s + 1) & mask) {
      if (std::equal(k, k + stride_, key(slots_[s] - 1))) return false;
    }
    keys_.insert(keys_.end(), k, k + stride_);
    values_.push_back(v);
    slots_[s] = static_cast<std::uint32_t>(values_.size());
    return true;
  }

 private:
  std::uint64_t hash(const Packed* k) const {
    std::uint64_t h = stride_;
    for (std::size_t i = 0; i < stride_; ++i) h = mix(h ^ k[i]);
    return h;
  }

  void grow() {
    std::vector<std::uint32_t> next(slots_.size() * 2, 0);
    const std::size_t mask = next.size() - 1;
    for (std::size_t i = 0; i < size(); ++i) {
      std::size_t s = hash(key(i)) & mask;
      while (next[s] != 0) s = (s + 1) & mask;
      next[s] = static_cast<std::uint32_t>(i + 1);
    }
    slots_ = std::move(next);
  }

  std::size_t stride_;
  std::vector<Packed> keys_;
  std::vector<std::uint32_t> values_;
  std::vector<std::uint32_t> slots_;
};

// Partial solutions are shared between states as a DAG of edge additions
// and unions; node 0 is the empty graph.
class EdgeSets {
 public:
  EdgeSets() { nodes_.push_back({kEmpty, 0, 0}); }

  std::uint32_t add(EdgeId e, std::uint32_t parent) { return push({kAdd, e, parent}); }
  std::uint32_t unite(std::uint32_t a, std::uint32_t b) {
    if (a == 0) return b;
    if (b == 0) return a;
    return push({kUnion, a, b});
  }

  std::vector<EdgeId> edges(std::uint32_t id) const {
    std::vector<EdgeId> out;
    std::vector<std::uint32_t> stack{id};
    while (!stack.empty()) {
      const Node& node = nodes_[stack.back()];
      stack.pop_back();
      if (node.kind == kAdd) {
        out.push_back(node.a);
        stack.push_back(node.b);
      } else if (node.kind == kUnion) {
        stack.push_back(node.a);
        stack.push_back(node.b);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  enum Kind : std::uint32_t { kEmpty, kAdd, kUnion };
  struct Node {
    Kind kind;
    std::uint32_t a;
    std::uint32_t b;
  };

  std::uint32_t push(Node node) {
    if (nodes_.size() >= std::numeric_limits<std::uint32_t>::max()) {
      throw CapacityError("dynamic program exceeded 2^32 stored edge sets");
    }
    nodes_.push_back(node);
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  std::vector<Node> nodes_;
};

std::size_t position(const std::vector<VertexId>& bag, VertexId v) {
  return static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

class Solver {
 public:
  Solver(const Graph& g, const NiceTreeDecomposition& ntd, const PartialWeightAssignment& pre,
         const DpOptions& options)
      : g_(g),
        ntd_(ntd),
        pre_(pre.dense(g.edge_count())),
        options_(options),
        tables_(ntd.nodes.size()),
        slack_(ntd.nodes.size()) {
    if (g.max_degree() > 0xffffu) throw CapacityError("vertex degree exceeds 65535");
  }

  std::optional<WeightAssignment> run(DpStats* stats) {
    if (stats) *stats = DpStats{};
    for (std::size_t i = 0; i < ntd_.nodes.size(); ++i) {
      const NiceNode& node = ntd_.nodes[i];
      slack_[i] = open_edges(node);
      current_ = i;
      tables_[i] = compute(node);
      if (options_.check_invariants) check_node(i);
      if (stats) {
        stats->states_per_node.push_back(tables_[i]->size());
        stats->max_states = std::max(stats->max_states, tables_[i]->size());
        stats->states_stored += tables_[i]->size();
      }
      for (int c : {node.left, node.right}) {
        if (c < 0) continue;
        tables_[static_cast<std::size_t>(c)].reset();
        slack_[static_cast<std::size_t>(c)].clear();
      }
    }
    const StateTable& root = *tables_[ntd_.root()];
    if (root.size() == 0) return std::nullopt;
    WeightAssignment w(g_.edge_count(), 0);
    for (EdgeId e : sets_.edges(root.value(0))) w.set(e, 1);
    return w;
  }

 private:
  // Per bag vertex: incident edges not yet introduced below this node. A
  // state needing more than cd + that many edges can never be completed.
  std::vector<std::uint32_t> open_edges(const NiceNode& node) const {
    std::vector<std::uint32_t> out;
    switch (node.kind) {
      case NiceKind::Leaf:
        break;
      case NiceKind::IntroduceVertex:
        out = slack_[static_cast<std::size_t>(node.left)];
        out.insert(out.begin() + static_cast<long>(position(node.bag, node.vertex)),
                   static_cast<std::uint32_t>(g_.degree(node.vertex)));
        break;
      case NiceKind::IntroduceEdge:
        out = slack_[static_cast<std::size_t>(node.left)];
        --out[position(node.bag, g_.edge(node.edge).u)];
        --out[position(node.bag, g_.edge(node.edge).v)];
        break;
      case NiceKind::Forget:
        out = slack_[static_cast<std::size_t>(node.left)];
        out.erase(out.begin() +
                  static_cast<long>(position(ntd_.nodes[static_cast<std::size_t>(node.left)].bag, node.vertex)));
        break;
      case NiceKind::Join: {
        const auto& a = slack_[static_cast<std::size_t>(node.left)];
        const auto& b = slack_[static_cast<std::size_t>(node.right)];
        for (std::size_t j = 0; j < a.size(); ++j) {
          out.push_back(a[j] + b[j] - static_cast<std::uint32_t>(g_.degree(node.bag[j])));
        }
        break;
      }
    }
    return out;
  }

  std::uint32_t cap(VertexId v) const {
    return static_cast<std::uint32_t>(options_.global_degree_cap ? g_.max_degree() : g_.degree(v));
  }

  std::unique_ptr<StateTable> compute(const NiceNode& node) {
    switch (node.kind) {
      case NiceKind::Leaf: {
        auto table = std::make_unique<StateTable>(0);
        table->insert(nullptr, 0);
        return table;
      }
      case NiceKind::IntroduceVertex:
        return introduce_vertex(node);
      case NiceKind::IntroduceEdge:
        return introduce_edge(node);
      case NiceKind::Forget:
        return forget(node);
      case NiceKind::Join:
        return join(node);
    }
    return nullptr;
  }

  const StateTable& child(int index) const { return *tables_[static_cast<std::size_t>(index)]; }

  std::unique_ptr<StateTable> introduce_vertex(const NiceNode& node) {
    const StateTable& in = child(node.left);
    const std::size_t width = node.bag.size();
    const std::size_t p = position(node.bag, node.vertex);
    auto out = std::make_unique<StateTable>(width);
    std::vector<Packed> key(width);
    for (std::size_t i = 0; i < in.size(); ++i) {
      const Packed* k = in.key(i);
      std::copy(k, k + p, key.begin());
      std::copy(k + p, k + width - 1, key.begin() + static_cast<long>(p) + 1);
      for (std::uint32_t fd = 0; fd <= cap(node.vertex); ++fd) {
        key[p] = pack(fd, 0);
        out->insert(key.data(), in.value(i));
      }
    }
    return out;
  }

  std::unique_ptr<StateTable> introduce_edge(const NiceNode& node) {
    const StateTable& in = child(node.left);
    const std::size_t width = node.bag.size();
    const Edge& e = g_.edge(node.edge);
    const std::size_t pu = position(node.bag, e.u);
    const std::size_t pw = position(node.bag, e.v);
    const std::int8_t fixed = pre_[node.edge];
    const std::uint32_t open_u = slack_[current_][pu];
    const std::uint32_t open_w = slack_[current_][pw];
    auto out = std::make_unique<StateTable>(width);
    if (fixed != 1) {
      for (std::size_t i = 0; i < in.size(); ++i) {
        const Packed* k = in.key(i);
        if (fd_of(k[pu]) == fd_of(k[pw])) continue;
        if (fd_of(k[pu]) > cd_of(k[pu]) + open_u || fd_of(k[pw]) > cd_of(k[pw]) + open_w) continue;
        out->insert(k, in.value(i));
      }
    }
    if (fixed != 0) {
      std::vector<Packed> key(width);
      for (std::size_t i = 0; i < in.size(); ++i) {
        const Packed* k = in.key(i);
        const Packed a = k[pu];
        const Packed b = k[pw];
        if (fd_of(a) == fd_of(b) || cd_of(a) + 1 > fd_of(a) || cd_of(b) + 1 > fd_of(b)) continue;
        std::copy(k, k + width, key.begin());
        key[pu] = a + 1;
        key[pw] = b + 1;
        if (!out->find(key.data())) out->insert(key.data(), sets_.add(node.edge, in.value(i)));
      }
    }
    return out;
  }

  std::unique_ptr<StateTable> forget(const NiceNode& node) {
    const StateTable& in = child(node.left);
    const std::size_t width = node.bag.size();
    const std::size_t p = position(ntd_.nodes[static_cast<std::size_t>(node.left)].bag, node.vertex);
    auto out = std::make_unique<StateTable>(width);
    std::vector<Packed> key(width);
    for (std::size_t i = 0; i < in.size(); ++i) {
      const Packed* k = in.key(i);
      if (fd_of(k[p]) != cd_of(k[p])) continue;
      std::copy(k, k + p, key.begin());
      std::copy(k + p + 1, k + width + 1, key.begin() + static_cast<long>(p));
      out->insert(key.data(), in.value(i));
    }
    return out;
  }

  std::unique_ptr<StateTable> join(const NiceNode& node) {
    const StateTable& a = child(node.left);
    const StateTable& b = child(node.right);
    const std::size_t width = node.bag.size();

    // Group the second child's states by their fd projection.
    StateTable groups(width);
    std::vector<std::vector<std::uint32_t>> members;
    std::vector<Packed> proj(width);
    auto project = [&](const Packed* k) {
      for (std::size_t j = 0; j < width; ++j) proj[j] = fd_of(k[j]);
    };
    for (std::size_t i = 0; i < b.size(); ++i) {
      project(b.key(i));
      if (groups.insert(proj.data(), static_cast<std::uint32_t>(members.size()))) members.emplace_back();
      members[groups.value(*groups.find(proj.data()))].push_back(static_cast<std::uint32_t>(i));
    }

    const std::vector<std::uint32_t>& open = slack_[current_];
    auto out = std::make_unique<StateTable>(width);
    std::vector<Packed> key(width);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Packed* ka = a.key(i);
      project(ka);
      const auto group = groups.find(proj.data());
      if (!group) continue;
      for (std::uint32_t j : members[groups.value(*group)]) {
        const Packed* kb = b.key(j);
        bool fits = true;
        for (std::size_t x = 0; x < width && fits; ++x) {
          const std::uint32_t cd = cd_of(ka[x]) + cd_of(kb[x]);
          fits = cd <= fd_of(ka[x]) && fd_of(ka[x]) <= cd + open[x];
          key[x] = pack(fd_of(ka[x]), cd);
        }
        if (fits && !out->find(key.data())) out->insert(key.data(), sets_.unite(a.value(i), b.value(j)));
      }
    }
    return out;
  }

  void check_node(std::size_t i) const {
    const StateTable& table = *tables_[i];
    for (std::size_t s = 0; s < table.size(); ++s) {
      DPState f(table.stride());
      for (std::size_t j = 0; j < table.stride(); ++j) {
        f[j] = FeasiblePair{static_cast<std::uint16_t>(fd_of(table.key(s)[j])),
                            static_cast<std::uint16_t>(cd_of(table.key(s)[j]))};
      }
      if (!check_partial_solution(g_, ntd_, i, f, sets_.edges(table.value(s)))) {
        throw ContractViolation("stored entry at node " + std::to_string(i) + " is not a partial solution");
      }
    }
  }

  const Graph& g_;
  const NiceTreeDecomposition& ntd_;
  std::vector<std::int8_t> pre_;
  DpOptions options_;
  std::vector<std::unique_ptr<StateTable>> tables_;
  std::vector<std::vector<std::uint32_t>> slack_;
  std::size_t current_ = 0;
  EdgeSets sets_;
};

}  // namespace

std::optional<WeightAssignment> dp_solve(const Graph& g, const NiceTreeDecomposition& ntd,
                                         const PartialWeightAssignment& pre, const DpOptions& options,
                                         DpStats* stats) {
  if (auto problem = nice_problem(g, ntd)) throw ValidationError("invalid nice decomposition: " + *problem);
  Solver solver(g, ntd, pre, options);
  if (!isolated_edges(g).empty()) {
    if (stats) *stats = DpStats{};
    return std::nullopt;
  }
  return solver.run(stats);
}

std::optional<WeightAssignment> solve_treewidth(const Graph& g, const PartialWeightAssignment& pre,
                                                const std::optional<TreeDecomposition>& td,
                                                const DpOptions& options, DpStats* stats) {
  const NiceTreeDecomposition ntd = make_nice(td ? *td : compute_decomposition(g), g);
  return dp_solve(g, ntd, pre, options, stats);
}

std::vector<EdgeId> subtree_edges(const Graph& g, const NiceTreeDecomposition& ntd, std::size_t node) {
  (void)g;
  std::vector<EdgeId> out;
  std::vector<std::size_t> stack{node};
  while (!stack.empty()) {
    const NiceNode& cur = ntd.nodes[stack.back()];
    stack.pop_back();
    if (cur.kind == NiceKind::IntroduceEdge) out.push_back(cur.edge);
    if (cur.left >= 0) stack.push_back(static_cast<std::size_t>(cur.left));
    if (cur.right >= 0) stack.push_back(static_cast<std::size_t>(cur.right));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool check_partial_solution(const Graph& g, const NiceTreeDecomposition& ntd, std::size_t node, const DPState& f,
                            const std::vector<EdgeId>& h_edges) {
  const std::vector<VertexId>& bag = ntd.nodes[node].bag;
  if (f.size() != bag.size()) return false;
  const std::vector<EdgeId> graph_edges = subtree_edges(g, ntd, node);
  std::vector<std::uint32_t> deg(g.vertex_count(), 0);
  for (EdgeId e : h_edges) {
    if (!std::binary_search(graph_edges.begin(), graph_edges.end(), e)) return false;
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  constexpr std::uint32_t kOutside = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> fd(g.vertex_count(), kOutside);
  for (std::size_t i = 0; i < bag.size(); ++i) {
    if (f[i].cd > f[i].fd || f[i].cd != deg[bag[i]]) return false;
    fd[bag[i]] = f[i].fd;
  }
  for (EdgeId id : graph_edges) {
    const Edge& e = g.edge(id);
    const bool in_u = fd[e.u] != kOutside;
    const bool in_v = fd[e.v] != kOutside;
    if (in_u && in_v) {
      if (fd[e.u] == fd[e.v]) return false;
    } else if (in_u) {
      if (deg[e.v] == fd[e.u]) return false;
    } else if (in_v) {
      if (deg[e.u] == fd[e.v]) return false;
    } else if (deg[e.u] == deg[e.v]) {
      return false;
    }
  }
  return true;
}

std::uint64_t state_count_bound(std::size_t max_degree, int width) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t base = max_degree + 1;
  std::uint64_t out = 1;
  for (int i = 0; i < 2 * (width + 1); ++i) {
    if (out > kMax / base) return kMax;
    out *= base;
  }
  return out;
}

}  // namespace vcew
