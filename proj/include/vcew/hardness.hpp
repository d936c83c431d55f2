#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vcew/graph.hpp"
#include "vcew/list_coloring.hpp"
#include "vcew/oracle.hpp"

namespace vcew {

enum class VertexRole { Original, SuspendedMid, SuspendedLeaf, Pendant, ChainVertex, UniversalZ, TriangleU, TriangleV };

enum class EdgeRole {
  GraphEdge,
  PendantEdge,
  SuspendedInner,  // host - middle vertex
  SuspendedOuter,  // middle vertex - leaf
  ChainEdge,
  TriangleZEdge0,
  TriangleZEdge1,
  TriangleThirdEdge,
};

struct VertexAnnotation {
  VertexRole role = VertexRole::Original;
  VertexId owner = 0;    // host vertex; for chains the original vertex the chain starts at
  std::uint32_t color = 0;  // disallowed color of the gadget, if any
  std::uint32_t index = 0;  // position in a chain (1-based) or gadget number (1-based)
};

std::string role_name(VertexRole role);
std::string role_name(EdgeRole role);

struct SuspendedPath {
  VertexId mid = 0;
  VertexId leaf = 0;
};

struct TypeAGadget {
  VertexId u = 0;
  VertexId v = 0;
};

struct TypeBChain {
  std::vector<VertexId> chain;  // x_1 .. x_{N-k}
};

// Incrementally built annotated graph. Edge roles are re-keyed to canonical
// edge ids by finish().
class ReductionBuilder {
 public:
  VertexId add_vertex(VertexAnnotation annotation);
  void add_edge(VertexId a, VertexId b, EdgeRole role);
  std::size_t vertex_count() const { return vertices_.size(); }

  // Path v - x - y.
  SuspendedPath add_suspended_path(VertexId v);
  // Triangle a, u, v with k-1 suspended paths on u and on v. k >= 2.
  TypeAGadget add_type_a(VertexId a, std::uint32_t k, std::uint32_t gadget_index = 1);
  // Chain x_1 .. x_{N-k} from v to z, x_i carrying k+i-1 suspended paths. 2 <= k < N.
  TypeBChain add_type_b(VertexId v, std::uint32_t k, VertexId z, std::uint32_t n_scale);

  struct Result {
    Graph graph;
    std::vector<VertexAnnotation> vertex_roles;
    std::vector<EdgeRole> edge_roles;
  };
  Result finish() const;

 private:
  std::vector<VertexAnnotation> vertices_;
  std::vector<std::pair<Edge, EdgeRole>> edges_;
};

struct AnnotatedReduction {
  Graph graph;
  std::vector<VertexAnnotation> vertex_roles;
  std::vector<EdgeRole> edge_roles;
  std::vector<VertexId> original;  // G vertex -> H vertex
  std::optional<VertexId> z;
  std::uint32_t t = 0;
  std::uint32_t n_scale = 0;  // N
  std::size_t chain_count = 0;
  Graph source;  // G, for structural checks
};

struct NormalizedInstance {
  ListColoringInstance instance;
  std::vector<VertexId> kept;     // new id -> input id
  std::vector<VertexId> removed;  // input ids, in removal order
};

// Removes vertices whose list is longer than the current vertex count until
// none remain, then requires every color to lie in {2, ..., n^2+1}
// (DomainError otherwise).
NormalizedInstance normalize_instance(const ListColoringInstance& inst);

// Colors in {2, ..., t+n-1} missing from L(v).
std::vector<Color> disallowed_colors(const ListColoringInstance& inst, VertexId v);

std::uint32_t default_scale(std::size_t n);  // n^3 + n^2 - n

// The list coloring reduction. N defaults to default_scale(n). ParameterError
// if N is not larger than every disallowed color, or z would have degree
// above 3N.
AnnotatedReduction build_reduction(const ListColoringInstance& inst, std::optional<std::uint32_t> n_scale = {});

// Forward weighting for a proper list coloring c. ContractViolation if c is
// not a list coloring or the weighting fails verification.
WeightAssignment witness_weighting(const AnnotatedReduction& red, const ListColoringInstance& inst,
                                   const std::vector<Color>& c);

std::vector<Color> extract_coloring(const AnnotatedReduction& red, const WeightAssignment& w);

// The weights every proper weighting is forced to take; graph, pendant and
// triangle third edges stay free.
PartialWeightAssignment forced_weights(const AnnotatedReduction& red);

std::optional<WeightAssignment> solve_reduced(const AnnotatedReduction& red, const OracleOptions& options = {},
                                              SearchStats* stats = nullptr);

// Whether H minus (minimum vertex cover of G plus z) is a forest.
bool verify_fvs_bound(const AnnotatedReduction& red);

// "v <id> <role> [owner color index]" and "e <u> <v> <role>" lines, 1-indexed.
std::string emit_roles(const AnnotatedReduction& red);
std::string emit_dot(const AnnotatedReduction& red);

}  // namespace vcew
