#include "vcew/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "vcew/errors.hpp"

namespace vcew {

namespace {

constexpr std::uint32_t kUnbounded = std::numeric_limits<std::uint32_t>::max();

// Immutable description of the enumeration: free edges in canonical order,
// colors contributed by fixed weight-1 edges, and a check schedule. An edge
// is checked right after the last free edge touching either endpoint has been
// decided, so both endpoint colors are final when compared.
class SearchSpace {
 public:
  SearchSpace(const Graph& g, const PartialWeightAssignment& pre, const std::optional<ColorBound>& bound)
      : graph_(g) {
    const std::vector<std::int8_t> fixed = pre.dense(g.edge_count());
    fixed_ = fixed;
    base_colors_.assign(g.vertex_count(), 0);
    std::vector<long> last_free(g.vertex_count(), -1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      if (fixed[e] < 0) {
        const long pos = static_cast<long>(free_.size());
        free_.push_back(e);
        last_free[edge.u] = pos;
        last_free[edge.v] = pos;
      } else if (fixed[e] == 1) {
        ++base_colors_[edge.u];
        ++base_colors_[edge.v];
      }
    }
    checks_after_.assign(free_.size() + 1, {});
    for (const Edge& edge : g.edges()) {
      const long ready = std::max(last_free[edge.u], last_free[edge.v]);
      checks_after_[static_cast<std::size_t>(ready + 1)].push_back(edge);
    }

    bound_.assign(g.vertex_count(), kUnbounded);
    if (bound) {
      if (const auto* scalar = std::get_if<std::uint32_t>(&*bound)) {
        std::fill(bound_.begin(), bound_.end(), *scalar);
      } else {
        const auto& per_vertex = std::get<std::vector<std::uint32_t>>(*bound);
        if (per_vertex.size() != g.vertex_count()) {
          throw ParameterError("color bound has " + std::to_string(per_vertex.size()) + " entries, graph has " +
                               std::to_string(g.vertex_count()) + " vertices");
        }
        bound_ = per_vertex;
      }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (base_colors_[v] > bound_[v]) start_feasible_ = false;
    }
  }

  const Graph& graph() const { return graph_; }
  std::size_t free_count() const { return free_.size(); }
  EdgeId free_edge(std::size_t pos) const { return free_[pos]; }
  const std::vector<Edge>& checks_after(std::size_t depth) const { return checks_after_[depth]; }
  const ColorVector& base_colors() const { return base_colors_; }
  std::uint32_t bound(VertexId v) const { return bound_[v]; }
  bool start_feasible() const { return start_feasible_; }

  WeightAssignment assemble(const std::vector<std::uint8_t>& chosen) const {
    std::vector<Weight> w(graph_.edge_count(), 0);
    for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
      if (fixed_[e] == 1) w[e] = 1;
    }
    for (std::size_t pos = 0; pos < free_.size(); ++pos) w[free_[pos]] = chosen[pos];
    return WeightAssignment(std::move(w));
  }

 private:
  const Graph& graph_;
  std::vector<std::int8_t> fixed_;
  std::vector<EdgeId> free_;
  std::vector<std::vector<Edge>> checks_after_;
  ColorVector base_colors_;
  std::vector<std::uint32_t> bound_;
  bool start_feasible_ = true;
};

// Mutable per-worker search state.
class Walker {
 public:
  explicit Walker(const SearchSpace& space)
      : space_(space), colors_(space.base_colors()), chosen_(space.free_count(), 0) {}

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t leaves() const { return leaves_; }
  const std::vector<std::uint8_t>& chosen() const { return chosen_; }

  bool checks_pass(std::size_t depth) const {
    for (const Edge& e : space_.checks_after(depth)) {
      if (colors_[e.u] == colors_[e.v]) return false;
    }
    return true;
  }

  bool take(std::size_t pos) {
    const Edge& e = space_.graph().edge(space_.free_edge(pos));
    if (colors_[e.u] + 1 > space_.bound(e.u) || colors_[e.v] + 1 > space_.bound(e.v)) return false;
    ++colors_[e.u];
    ++colors_[e.v];
    chosen_[pos] = 1;
    return true;
  }

  void untake(std::size_t pos) {
    const Edge& e = space_.graph().edge(space_.free_edge(pos));
    --colors_[e.u];
    --colors_[e.v];
    chosen_[pos] = 0;
  }

  // Skip positions [0, first) and take `first`; used to split the search
  // between workers by the position of the first weight-1 free edge.
  bool enter_branch(std::size_t first) {
    for (std::size_t depth = 0; depth <= first; ++depth) {
      if (!checks_pass(depth)) return false;
    }
    return take(first);
  }

  // Depth-first over positions >= pos choosing exactly `need` more ones.
  // Take-before-skip yields lexicographic order of the chosen index sets.
  bool first_with(std::size_t pos, std::size_t need) {
    ++nodes_;
    if (!checks_pass(pos)) return false;
    const std::size_t m = space_.free_count();
    if (need == 0) {
      ++leaves_;
      for (std::size_t depth = pos + 1; depth <= m; ++depth) {
        if (!checks_pass(depth)) return false;
      }
      return true;
    }
    if (m - pos < need) return false;
    if (take(pos)) {
      if (first_with(pos + 1, need - 1)) return true;
      untake(pos);
    }
    return first_with(pos + 1, need);
  }

  template <typename Visit>
  bool all(std::size_t pos, Visit& visit) {
    ++nodes_;
    if (!checks_pass(pos)) return true;
    if (pos == space_.free_count()) {
      ++leaves_;
      return visit(chosen_, colors_);
    }
    if (take(pos)) {
      const bool go_on = all(pos + 1, visit);
      untake(pos);
      if (!go_on) return false;
    }
    return all(pos + 1, visit);
  }

 private:
  const SearchSpace& space_;
  ColorVector colors_;
  std::vector<std::uint8_t> chosen_;
  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
};

void check_capacity(std::size_t free_edges, std::optional<std::size_t> budget, unsigned cutoff) {
  const unsigned capped = std::min(cutoff, 63u);
  const std::uint64_t size = enumeration_size(free_edges, budget);
  if (size > (std::uint64_t{1} << capped)) {
    std::string msg = "search space of " + std::to_string(free_edges) + " free edges";
    if (budget) msg += " with at most " + std::to_string(*budget) + " ones";
    msg += " exceeds the cutoff of 2^" + std::to_string(cutoff) + " assignments";
    throw CapacityError(msg);
  }
}

std::optional<std::vector<std::uint8_t>> first_parallel(const SearchSpace& space, std::size_t need,
                                                        unsigned threads, SearchStats& stats) {
  const std::size_t m = space.free_count();
  const std::size_t tasks = m - need + 1;
  std::atomic<std::size_t> next{0};
  std::size_t best = tasks;
  std::vector<std::uint8_t> best_chosen;
  std::mutex mu;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> leaves{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t j = next.fetch_add(1);
      if (j >= tasks) break;
      {
        std::lock_guard lock(mu);
        if (j > best) break;
      }
      Walker walker(space);
      const bool found = walker.enter_branch(j) && walker.first_with(j + 1, need - 1);
      nodes += walker.nodes();
      leaves += walker.leaves();
      if (found) {
        std::lock_guard lock(mu);
        if (j < best) {
          best = j;
          best_chosen = walker.chosen();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  stats.nodes_expanded += nodes;
  stats.assignments_checked += leaves;
  if (best == tasks) return std::nullopt;
  return best_chosen;
}

}  // namespace

std::uint64_t enumeration_size(std::size_t free_edges, std::optional<std::size_t> budget) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::size_t top = budget ? std::min(*budget, free_edges) : free_edges;
  if (top == free_edges) return free_edges >= 64 ? kMax : (std::uint64_t{1} << free_edges);
  unsigned __int128 total = 0;
  unsigned __int128 term = 1;  // C(free_edges, i)
  for (std::size_t i = 0; i <= top; ++i) {
    total += term;
    if (total > kMax) return kMax;
    term = term * (free_edges - i) / (i + 1);
    if (term > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(total);
}

std::optional<WeightAssignment> solve_exhaustive(const Graph& g, const PartialWeightAssignment& pre,
                                                 const OracleOptions& options, SearchStats* stats) {
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  if (!isolated_edges(g).empty()) return std::nullopt;
  SearchSpace space(g, pre, std::nullopt);
  const std::size_t m = space.free_count();
  check_capacity(m, options.budget, options.cutoff);
  const std::size_t top = options.budget ? std::min(*options.budget, m) : m;
  for (std::size_t ones = 0; ones <= top; ++ones) {
    if (options.threads > 1 && ones > 0) {
      if (auto chosen = first_parallel(space, ones, options.threads, st)) return space.assemble(*chosen);
      continue;
    }
    Walker walker(space);
    const bool found = walker.first_with(0, ones);
    st.nodes_expanded += walker.nodes();
    st.assignments_checked += walker.leaves();
    if (found) return space.assemble(walker.chosen());
  }
  return std::nullopt;
}

std::uint64_t for_each_proper(const Graph& g, const PartialWeightAssignment& pre,
                              const std::optional<ColorBound>& bound,
                              const std::function<bool(const WeightAssignment&, const ColorVector&)>& visit,
                              unsigned cutoff) {
  SearchSpace space(g, pre, bound);
  check_capacity(space.free_count(), std::nullopt, cutoff);
  if (!space.start_feasible()) return 0;
  std::uint64_t visited = 0;
  auto adapter = [&](const std::vector<std::uint8_t>& chosen, const ColorVector& colors) {
    ++visited;
    return visit(space.assemble(chosen), colors);
  };
  Walker walker(space);
  walker.all(0, adapter);
  return visited;
}

std::uint64_t count_proper(const Graph& g, const PartialWeightAssignment& pre, unsigned cutoff) {
  SearchSpace space(g, pre, std::nullopt);
  check_capacity(space.free_count(), std::nullopt, cutoff);
  std::uint64_t count = 0;
  auto counter = [&](const std::vector<std::uint8_t>&, const ColorVector&) {
    ++count;
    return true;
  };
  Walker walker(space);
  walker.all(0, counter);
  return count;
}

bool exists_with_color_bound(const Graph& g, const PartialWeightAssignment& pre, const ColorBound& bound,
                             unsigned cutoff) {
  SearchSpace space(g, pre, bound);
  check_capacity(space.free_count(), std::nullopt, cutoff);
  if (!space.start_feasible()) return false;
  bool found = false;
  auto stop_at_first = [&](const std::vector<std::uint8_t>&, const ColorVector&) {
    found = true;
    return false;
  };
  Walker walker(space);
  walker.all(0, stop_at_first);
  return found;
}

}  // namespace vcew
