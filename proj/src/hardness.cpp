#include "vcew/hardness.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vcew/errors.hpp"
#include "vcew/vc_fpt.hpp"

namespace vcew {

bool is_list_coloring(const ListColoringInstance& inst, const std::vector<Color>& c) {
  if (c.size() != inst.graph.vertex_count() || inst.lists.size() != c.size()) return false;
  for (VertexId v = 0; v < c.size(); ++v) {
    if (!std::binary_search(inst.lists[v].begin(), inst.lists[v].end(), c[v])) return false;
  }
  return std::none_of(inst.graph.edges().begin(), inst.graph.edges().end(),
                      [&](const Edge& e) { return c[e.u] == c[e.v]; });
}

std::string role_name(VertexRole role) {
  switch (role) {
    case VertexRole::Original:
      return "original";
    case VertexRole::SuspendedMid:
      return "suspended_mid";
    case VertexRole::SuspendedLeaf:
      return "suspended_leaf";
    case VertexRole::Pendant:
      return "pendant";
    case VertexRole::ChainVertex:
      return "chain";
    case VertexRole::UniversalZ:
      return "z";
    case VertexRole::TriangleU:
      return "triangle_u";
    case VertexRole::TriangleV:
      return "triangle_v";
  }
  return "unknown";
}

std::string role_name(EdgeRole role) {
  switch (role) {
    case EdgeRole::GraphEdge:
      return "graph";
    case EdgeRole::PendantEdge:
      return "pendant";
    case EdgeRole::SuspendedInner:
      return "suspended_inner";
    case EdgeRole::SuspendedOuter:
      return "suspended_outer";
    case EdgeRole::ChainEdge:
      return "chain";
    case EdgeRole::TriangleZEdge0:
      return "triangle_z0";
    case EdgeRole::TriangleZEdge1:
      return "triangle_z1";
    case EdgeRole::TriangleThirdEdge:
      return "triangle_third";
  }
  return "unknown";
}

VertexId ReductionBuilder::add_vertex(VertexAnnotation annotation) {
  vertices_.push_back(annotation);
  return static_cast<VertexId>(vertices_.size() - 1);
}

void ReductionBuilder::add_edge(VertexId a, VertexId b, EdgeRole role) {
  edges_.emplace_back(Edge::canonical(a, b), role);
}

SuspendedPath ReductionBuilder::add_suspended_path(VertexId v) {
  const VertexId x = add_vertex({VertexRole::SuspendedMid, v, 0, 0});
  const VertexId y = add_vertex({VertexRole::SuspendedLeaf, v, 0, 0});
  add_edge(v, x, EdgeRole::SuspendedInner);
  add_edge(x, y, EdgeRole::SuspendedOuter);
  return {x, y};
}

TypeAGadget ReductionBuilder::add_type_a(VertexId a, std::uint32_t k, std::uint32_t gadget_index) {
  if (k < 2) throw ParameterError("type-A gadget needs k >= 2, got " + std::to_string(k));
  const VertexId u = add_vertex({VertexRole::TriangleU, a, k, gadget_index});
  const VertexId v = add_vertex({VertexRole::TriangleV, a, k, gadget_index});
  add_edge(a, u, EdgeRole::TriangleZEdge0);
  add_edge(a, v, EdgeRole::TriangleZEdge1);
  add_edge(u, v, EdgeRole::TriangleThirdEdge);
  for (std::uint32_t i = 0; i + 1 < k; ++i) add_suspended_path(u);
  for (std::uint32_t i = 0; i + 1 < k; ++i) add_suspended_path(v);
  return {u, v};
}

TypeBChain ReductionBuilder::add_type_b(VertexId v, std::uint32_t k, VertexId z, std::uint32_t n_scale) {
  if (k < 2 || k >= n_scale) {
    throw ParameterError("type-B gadget needs 2 <= k < N, got k=" + std::to_string(k) + " N=" +
                         std::to_string(n_scale));
  }
  TypeBChain out;
  VertexId prev = v;
  for (std::uint32_t i = 1; i <= n_scale - k; ++i) {
    const VertexId x = add_vertex({VertexRole::ChainVertex, v, k, i});
    add_edge(prev, x, EdgeRole::ChainEdge);
    for (std::uint32_t j = 0; j < k + i - 1; ++j) add_suspended_path(x);
    out.chain.push_back(x);
    prev = x;
  }
  add_edge(prev, z, EdgeRole::ChainEdge);
  return out;
}

ReductionBuilder::Result ReductionBuilder::finish() const {
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& [e, role] : edges_) edges.push_back(e);
  Result out{Graph(vertices_.size(), edges), vertices_, std::vector<EdgeRole>(edges_.size())};
  for (const auto& [e, role] : edges_) out.edge_roles[*out.graph.find_edge(e.u, e.v)] = role;
  return out;
}

NormalizedInstance normalize_instance(const ListColoringInstance& inst) {
  for (const auto& list : inst.lists) {
    if (list.empty()) throw DomainError("every vertex needs a nonempty list");
  }
  std::vector<VertexId> kept(inst.graph.vertex_count());
  std::iota(kept.begin(), kept.end(), 0);
  NormalizedInstance out;
  // A vertex with more colors than vertices can always be colored last.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (inst.lists[kept[i]].size() > kept.size()) {
        out.removed.push_back(kept[i]);
        kept.erase(kept.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  out.kept = kept;
  out.instance.graph = induced_subgraph(inst.graph, kept);
  const std::uint64_t n = kept.size();
  for (VertexId v : kept) {
    for (Color c : inst.lists[v]) {
      if (c < 2 || c > n * n + 1) {
        throw DomainError("color " + std::to_string(c) + " of vertex " + std::to_string(v + 1) +
                          " is outside {2, ..., " + std::to_string(n * n + 1) + "}");
      }
    }
    out.instance.lists.push_back(inst.lists[v]);
  }
  return out;
}

std::vector<Color> disallowed_colors(const ListColoringInstance& inst, VertexId v) {
  Color t = 0;
  for (const auto& list : inst.lists) {
    if (!list.empty()) t = std::max(t, list.back());
  }
  const Color top = t + static_cast<Color>(inst.graph.vertex_count()) - 1;
  std::vector<Color> out;
  for (Color k = 2; k <= top; ++k) {
    if (!std::binary_search(inst.lists[v].begin(), inst.lists[v].end(), k)) out.push_back(k);
  }
  return out;
}

std::uint32_t default_scale(std::size_t n) {
  const std::uint64_t m = n;
  const std::uint64_t value = m * m * m + m * m - m;
  if (value > 0xffffffffull) throw ParameterError("instance too large for the default scale");
  return static_cast<std::uint32_t>(value);
}

AnnotatedReduction build_reduction(const ListColoringInstance& inst, std::optional<std::uint32_t> n_scale) {
  const std::size_t n = inst.graph.vertex_count();
  if (n == 0) throw ParameterError("instance has no vertices");
  if (inst.lists.size() != n) throw ParameterError("instance needs one list per vertex");
  Color t = 0;
  for (const auto& list : inst.lists) {
    if (list.empty()) throw ParameterError("every vertex needs a nonempty list");
    t = std::max(t, list.back());
  }
  if (t < 2) throw ParameterError("largest list color must be at least 2");

  std::vector<std::vector<Color>> disallowed(n);
  std::size_t chains = 0;
  Color max_disallowed = 0;
  for (VertexId v = 0; v < n; ++v) {
    disallowed[v] = disallowed_colors(inst, v);
    chains += disallowed[v].size();
    if (!disallowed[v].empty()) max_disallowed = std::max(max_disallowed, disallowed[v].back());
  }
  const std::uint32_t scale = n_scale ? *n_scale : default_scale(n);
  if (chains > 0) {
    if (scale <= max_disallowed) {
      throw ParameterError("N=" + std::to_string(scale) + " must exceed every disallowed color (largest " +
                           std::to_string(max_disallowed) + ")");
    }
    if (chains > scale) {
      throw ParameterError("z would have degree " + std::to_string(2ull * scale + chains) + " > 3N=" +
                           std::to_string(3ull * scale));
    }
  }

  ReductionBuilder b;
  AnnotatedReduction red;
  for (VertexId v = 0; v < n; ++v) red.original.push_back(b.add_vertex({VertexRole::Original, v, 0, 0}));
  if (chains > 0) red.z = b.add_vertex({VertexRole::UniversalZ, 0, 0, 0});
  for (const Edge& e : inst.graph.edges()) b.add_edge(red.original[e.u], red.original[e.v], EdgeRole::GraphEdge);
  for (VertexId v = 0; v < n; ++v) {
    const VertexId h = red.original[v];
    b.add_suspended_path(h);
    b.add_suspended_path(h);
    for (Color i = 2; i < t; ++i) {
      const VertexId p = b.add_vertex({VertexRole::Pendant, h, 0, i - 1});
      b.add_edge(h, p, EdgeRole::PendantEdge);
    }
    for (Color k : disallowed[v]) b.add_type_b(h, k, *red.z, scale);
  }
  if (red.z) {
    for (std::uint32_t i = 1; i <= scale; ++i) b.add_type_a(*red.z, scale + i, i);
  }

  auto built = b.finish();
  red.graph = std::move(built.graph);
  red.vertex_roles = std::move(built.vertex_roles);
  red.edge_roles = std::move(built.edge_roles);
  red.t = t;
  red.n_scale = scale;
  red.chain_count = chains;
  red.source = inst.graph;
  return red;
}

WeightAssignment witness_weighting(const AnnotatedReduction& red, const ListColoringInstance& inst,
                                   const std::vector<Color>& c) {
  if (!is_list_coloring(inst, c)) throw ContractViolation("coloring is not a proper list coloring");
  const Graph& h = red.graph;
  WeightAssignment w(h.edge_count(), 0);
  std::vector<Color> pendants_left(h.vertex_count(), 0);
  for (VertexId v = 0; v < red.original.size(); ++v) {
    if (c[v] < 2) throw ContractViolation("colors below 2 cannot be realised");
    pendants_left[red.original[v]] = c[v] - 2;
  }
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    switch (red.edge_roles[e]) {
      case EdgeRole::SuspendedInner:
      case EdgeRole::TriangleZEdge1:
      case EdgeRole::TriangleThirdEdge:
        w.set(e, 1);
        break;
      case EdgeRole::PendantEdge: {
        const Edge& edge = h.edge(e);
        const VertexId host = red.vertex_roles[edge.u].role == VertexRole::Pendant ? edge.v : edge.u;
        if (pendants_left[host] > 0) {
          --pendants_left[host];
          w.set(e, 1);
        }
        break;
      }
      default:
        break;
    }
  }
  if (!is_proper(h, w)) throw ContractViolation("forward weighting is not proper");
  return w;
}

std::vector<Color> extract_coloring(const AnnotatedReduction& red, const WeightAssignment& w) {
  const ColorVector colors = induced_colors(red.graph, w);
  std::vector<Color> out;
  for (VertexId h : red.original) out.push_back(colors[h]);
  return out;
}

PartialWeightAssignment forced_weights(const AnnotatedReduction& red) {
  PartialWeightAssignment pre;
  for (EdgeId e = 0; e < red.graph.edge_count(); ++e) {
    switch (red.edge_roles[e]) {
      case EdgeRole::SuspendedInner:
      case EdgeRole::TriangleZEdge1:
        pre.set(e, 1);
        break;
      case EdgeRole::SuspendedOuter:
      case EdgeRole::ChainEdge:
      case EdgeRole::TriangleZEdge0:
        pre.set(e, 0);
        break;
      default:
        break;
    }
  }
  return pre;
}

std::optional<WeightAssignment> solve_reduced(const AnnotatedReduction& red, const OracleOptions& options,
                                              SearchStats* stats) {
  return solve_exhaustive(red.graph, forced_weights(red), options, stats);
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }

  std::vector<std::size_t> parent;
};

}  // namespace

bool verify_fvs_bound(const AnnotatedReduction& red) {
  const auto cover = minimum_vertex_cover(red.source, red.source.vertex_count());
  std::vector<char> removed(red.graph.vertex_count(), 0);
  for (VertexId v : cover->vertices) removed[red.original[v]] = 1;
  if (red.z) removed[*red.z] = 1;
  DisjointSets sets(red.graph.vertex_count());
  for (const Edge& e : red.graph.edges()) {
    if (removed[e.u] || removed[e.v]) continue;
    if (!sets.unite(e.u, e.v)) return false;
  }
  return true;
}

std::string emit_roles(const AnnotatedReduction& red) {
  std::ostringstream out;
  for (VertexId v = 0; v < red.graph.vertex_count(); ++v) {
    const auto& a = red.vertex_roles[v];
    out << "v " << v + 1 << ' ' << role_name(a.role);
    switch (a.role) {
      case VertexRole::Original:
      case VertexRole::UniversalZ:
        break;
      case VertexRole::ChainVertex:
      case VertexRole::TriangleU:
      case VertexRole::TriangleV:
        out << ' ' << a.owner + 1 << ' ' << a.color << ' ' << a.index;
        break;
      default:
        out << ' ' << a.owner + 1;
        break;
    }
    out << '\n';
  }
  for (EdgeId e = 0; e < red.graph.edge_count(); ++e) {
    const Edge& edge = red.graph.edge(e);
    out << "e " << edge.u + 1 << ' ' << edge.v + 1 << ' ' << role_name(red.edge_roles[e]) << '\n';
  }
  return out.str();
}

std::string emit_dot(const AnnotatedReduction& red) {
  std::ostringstream out;
  out << "graph H {\n";
  for (VertexId v = 0; v < red.graph.vertex_count(); ++v) {
    out << "  " << v + 1 << " [label=\"" << v + 1 << "\", role=\"" << role_name(red.vertex_roles[v].role)
        << "\"];\n";
  }
  for (EdgeId e = 0; e < red.graph.edge_count(); ++e) {
    const Edge& edge = red.graph.edge(e);
    out << "  " << edge.u + 1 << " -- " << edge.v + 1 << " [role=\"" << role_name(red.edge_roles[e]) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace vcew
