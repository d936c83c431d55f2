#include "vcew/generators.hpp"

#include <algorithm>
#include <random>

#include "vcew/errors.hpp"

namespace vcew {

namespace {

// Standard distributions are implementation-defined; these are not, so
// seeded output is the same everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("probability must lie in [0,1]");
}

}  // namespace

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.chance(p)) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

Graph planted_twins(std::size_t core, double core_p, std::size_t classes, std::size_t class_size,
                    std::uint64_t seed) {
  check_probability(core_p);
  if (core == 0 && classes > 0) throw ParameterError("twin classes need a nonempty core");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < core; ++u) {
    for (VertexId v = u + 1; v < core; ++v) {
      if (rng.chance(core_p)) edges.push_back({u, v});
    }
  }
  VertexId next = static_cast<VertexId>(core);
  for (std::size_t c = 0; c < classes; ++c) {
    std::vector<VertexId> signature;
    while (signature.empty()) {
      for (VertexId s = 0; s < core; ++s) {
        if (rng.chance(0.5)) signature.push_back(s);
      }
    }
    for (std::size_t i = 0; i < class_size; ++i, ++next) {
      for (VertexId s : signature) edges.push_back({s, next});
    }
  }
  return Graph(next, std::move(edges));
}

PartialWeightAssignment random_preweights(const Graph& g, double fraction, bool allow_zero, std::uint64_t seed) {
  check_probability(fraction);
  Rng rng(seed);
  PartialWeightAssignment pre;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!rng.chance(fraction)) continue;
    pre.set(e, allow_zero ? static_cast<Weight>(rng.below(2)) : Weight{1});
  }
  return pre;
}

ListColoringInstance random_list_instance(std::size_t n, double p, std::uint32_t max_color, std::size_t max_list,
                                          std::uint64_t seed) {
  if (max_color < 2 || max_list == 0) throw ParameterError("lists need max_color >= 2 and max_list >= 1");
  ListColoringInstance inst;
  inst.graph = random_graph(n, p, seed);
  Rng rng(seed ^ 0x5bd1e995ull);
  const std::size_t palette = max_color - 1;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t size = 1 + rng.below(std::min(max_list, palette));
    std::vector<Color> colors;
    for (Color c = 2; c <= max_color; ++c) colors.push_back(c);
    // Partial Fisher-Yates for the first `size` colors.
    for (std::size_t i = 0; i < size; ++i) std::swap(colors[i], colors[i + rng.below(colors.size() - i)]);
    colors.resize(size);
    std::sort(colors.begin(), colors.end());
    inst.lists.push_back(std::move(colors));
  }
  return inst;
}

}  // namespace vcew
