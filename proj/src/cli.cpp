#include "vcew/cli.hpp"

#include <chrono>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vcew/decomposition.hpp"
#include "vcew/errors.hpp"
#include "vcew/generators.hpp"
#include "vcew/hardness.hpp"
#include "vcew/io.hpp"
#include "vcew/oracle.hpp"
#include "vcew/prewt_fpt.hpp"
#include "vcew/treewidth_dp.hpp"
#include "vcew/vc_fpt.hpp"

namespace vcew {

namespace {

using ordered_json = nlohmann::ordered_json;

struct SolveArgs {
  std::string graph;
  std::string algo = "auto";
  std::string td;
  std::optional<std::size_t> budget;
  std::optional<std::size_t> k;
  std::uint64_t seed = 0;
  unsigned cutoff = 30;
  unsigned threads = 1;
};

std::string choose_algorithm(const Graph& g, const PartialWeightAssignment& pre,
                             const std::optional<TreeDecomposition>& td) {
  if (pre.any_zero()) return "tw";
  if (!pre.empty()) return "prewt";
  if (g.edge_count() - pre.size() <= 24) return "oracle";
  const int width = td ? td->width() : compute_decomposition(g).width();
  if (width <= 4 && g.max_degree() <= 8) return "tw";
  return "vc";
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const GraphInstance inst = parse_graph(read_file(a.graph));
  const Graph& g = inst.graph;
  std::optional<TreeDecomposition> td;
  if (!a.td.empty()) {
    td = parse_td(read_file(a.td));
    if (auto problem = decomposition_problem(g, *td)) throw ValidationError("tree decomposition: " + *problem);
  }
  const std::string algo = a.algo == "auto" ? choose_algorithm(g, inst.pre, td) : a.algo;

  OracleOptions oracle;
  oracle.cutoff = a.cutoff;
  oracle.threads = a.threads;
  SearchStats search;
  std::int64_t states = 0;
  const auto start = std::chrono::steady_clock::now();
  std::optional<WeightAssignment> w;
  if (algo == "oracle") {
    oracle.budget = a.budget;
    w = solve_exhaustive(g, inst.pre, oracle, &search);
  } else if (algo == "tw") {
    DpStats dp;
    w = solve_treewidth(g, inst.pre, td, {}, &dp);
    states = static_cast<std::int64_t>(dp.states_stored);
  } else if (algo == "vc") {
    if (!inst.pre.empty()) throw ParameterError("the vertex cover solver does not take pre-weights");
    w = solve_vertex_cover(g, a.k, a.budget, oracle, &search);
  } else if (algo == "prewt") {
    w = solve_prewt(g, inst.pre, a.k, oracle, &search);
  } else {
    throw ParameterError("unknown algorithm '" + algo + "'");
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;

  ResultRecord r = make_result(g, inst.pre, w, algo);
  if (r.status == Status::Yes && !r.verified) throw ContractViolation(algo + " returned an unverified witness");
  r.stats["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  r.stats["nodes_expanded"] = static_cast<std::int64_t>(search.nodes_expanded);
  r.stats["states_stored"] = states;
  out << emit_result(r, false);
  ordered_json stats;
  for (const auto& [key, value] : r.stats) stats[key] = value;
  err << ordered_json{{"stats", stats}}.dump() << '\n';
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& weights_path, std::ostream& out) {
  const GraphInstance inst = parse_graph(read_file(graph_path));
  const WeightAssignment w = parse_weights(inst.graph, read_file(weights_path));
  const auto conflicts = find_conflicts(inst.graph, w);
  std::vector<std::pair<Edge, Weight>> violated;
  for (const auto& [e, expected] : inst.pre.entries()) {
    if (w[e] != expected) violated.emplace_back(inst.graph.edge(e), expected);
  }
  out << (conflicts.empty() && violated.empty() ? "proper" : "improper") << '\n';
  for (const Edge& e : conflicts) out << "conflict " << e.u + 1 << ' ' << e.v + 1 << '\n';
  for (const auto& [e, expected] : violated) {
    out << "preweight " << e.u + 1 << ' ' << e.v + 1 << " expected " << static_cast<int>(expected) << '\n';
  }
  return 0;
}

int cmd_kernelize(const std::string& graph_path, std::optional<std::size_t> k, const std::string& prefix,
                  std::ostream& out) {
  const GraphInstance inst = parse_graph(read_file(graph_path));
  if (!inst.pre.empty()) throw ParameterError("kernelization does not take pre-weights");
  const Kernel ker = kernelize(inst.graph, k);
  ordered_json classes = ordered_json::array();
  for (std::size_t i = 0; i < ker.classes.size(); ++i) {
    ordered_json signature = ordered_json::array();
    for (VertexId s : ker.classes[i].signature) signature.push_back(s + 1);
    classes.push_back({{"signature", signature},
                       {"before", ker.classes[i].members.size()},
                       {"after", ker.kept_sizes[i]}});
  }
  ordered_json j;
  j["k"] = ker.k;
  j["cover_size"] = ker.cover.size();
  j["class_cap"] = class_cap(ker.k);
  j["class_count"] = ker.classes.size();
  j["vertex_bound"] = kernel_vertex_bound(ker.k);
  j["vertices_before"] = inst.graph.vertex_count();
  j["vertices_after"] = ker.graph.vertex_count();
  j["edges_after"] = ker.graph.edge_count();
  j["classes"] = classes;
  if (!prefix.empty()) {
    write_file(prefix + ".gr", emit_graph(ker.graph));
    write_file(prefix + ".map", emit_mapping(ker));
  }
  out << j.dump() << '\n';
  return 0;
}

struct ReduceArgs {
  std::string instance;
  std::optional<std::uint32_t> n_scale;
  std::string prefix;
  std::string dot;
  bool raw = false;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
  const ListColoringInstance parsed = parse_listcoloring(read_file(a.instance));
  ListColoringInstance inst = parsed;
  std::vector<VertexId> removed;
  if (!a.raw) {
    NormalizedInstance norm = normalize_instance(parsed);
    inst = std::move(norm.instance);
    removed = std::move(norm.removed);
  }
  const AnnotatedReduction red = build_reduction(inst, a.n_scale);
  if (!a.prefix.empty()) {
    write_file(a.prefix + ".gr", emit_graph(red.graph));
    write_file(a.prefix + ".roles", emit_roles(red));
  }
  if (!a.dot.empty()) write_file(a.dot, emit_dot(red));
  ordered_json j;
  j["n"] = inst.graph.vertex_count();
  j["t"] = red.t;
  j["N"] = red.n_scale;
  j["vertices"] = red.graph.vertex_count();
  j["edges"] = red.graph.edge_count();
  j["chains"] = red.chain_count;
  j["z_degree"] = red.z ? ordered_json(red.graph.degree(*red.z)) : ordered_json(nullptr);
  ordered_json gone = ordered_json::array();
  for (VertexId v : removed) gone.push_back(v + 1);
  j["removed"] = gone;
  out << j.dump() << '\n';
  return 0;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex-coloring {0,1}-edge-weighting solvers and instance tools", "vcew"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "decide an instance and print a verified result");
  solve_cmd->add_option("graph", solve.graph, ".gr file")->required();
  solve_cmd->add_option("--algo", solve.algo, "auto, oracle, tw, vc or prewt")
      ->check(CLI::IsMember({"auto", "oracle", "tw", "vc", "prewt"}));
  solve_cmd->add_option("--td", solve.td, "tree decomposition (.td) for tw");
  solve_cmd->add_option("--budget", solve.budget, "maximum number of weight-1 free edges (oracle, vc)");
  solve_cmd->add_option("--k", solve.k, "vertex cover size bound (vc, prewt)");
  solve_cmd->add_option("--seed", solve.seed, "accepted for uniformity; solvers are deterministic");
  solve_cmd->add_option("--cutoff", solve.cutoff, "refuse searches above 2^cutoff assignments");
  solve_cmd->add_option("--threads", solve.threads, "oracle worker threads")->check(CLI::Range(1u, 256u));

  std::string verify_graph, verify_weights;
  auto* verify_cmd = app.add_subcommand("verify", "check a weighting against a graph");
  verify_cmd->add_option("graph", verify_graph, ".gr file")->required();
  verify_cmd->add_option("weights", verify_weights, "\"u v w\" lines")->required();

  std::string kernel_graph, kernel_prefix;
  std::optional<std::size_t> kernel_k;
  auto* kernel_cmd = app.add_subcommand("kernelize", "twin-class kernel with mapping");
  kernel_cmd->add_option("graph", kernel_graph, ".gr file")->required();
  kernel_cmd->add_option("--k", kernel_k, "vertex cover size bound");
  kernel_cmd->add_option("--out", kernel_prefix, "write <prefix>.gr and <prefix>.map");

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce-lc", "build the annotated reduction of a list coloring instance");
  reduce_cmd->add_option("instance", reduce.instance, ".lc file")->required();
  reduce_cmd->add_option("--N", reduce.n_scale, "chain scale (default n^3+n^2-n)");
  reduce_cmd->add_option("--out", reduce.prefix, "write <prefix>.gr and <prefix>.roles");
  reduce_cmd->add_option("--dot", reduce.dot, "write a DOT rendering");
  reduce_cmd->add_flag("--raw", reduce.raw, "skip normalization");

  auto* gen_cmd = app.add_subcommand("gen", "seeded instance generators");
  gen_cmd->require_subcommand(1);
  std::uint64_t seed = 1;
  std::string gen_out;
  std::size_t n = 8, core = 3, classes = 1, size = 10, max_list = 2;
  double p = 0.5, fraction = 0.0;
  bool allow_zero = false;
  std::string gadget = "type-a";
  std::uint32_t gadget_k = 2, gadget_q = 1, gadget_n = 5, max_color = 4;

  auto* gen_random = gen_cmd->add_subcommand("random", "G(n, p) graph");
  gen_random->add_option("--n", n);
  gen_random->add_option("--p", p);
  gen_random->add_option("--preweight", fraction, "fraction of edges pre-weighted");
  gen_random->add_flag("--allow-zero", allow_zero, "pre-weights may be 0");

  auto* gen_planted = gen_cmd->add_subcommand("planted", "core plus independent twin classes");
  gen_planted->add_option("--core", core);
  gen_planted->add_option("--p", p, "edge probability inside the core");
  gen_planted->add_option("--classes", classes);
  gen_planted->add_option("--size", size, "members per class");

  auto* gen_gadget = gen_cmd->add_subcommand("gadget", "standalone gadget graph");
  gen_gadget->add_option("type", gadget, "suspended, type-a or type-b")
      ->check(CLI::IsMember({"suspended", "type-a", "type-b"}));
  gen_gadget->add_option("--k", gadget_k, "disallowed color");
  gen_gadget->add_option("--q", gadget_q, "number of suspended paths");
  gen_gadget->add_option("--N", gadget_n, "chain scale for type-b");

  auto* gen_lc = gen_cmd->add_subcommand("lc", "random list coloring instance");
  gen_lc->add_option("--n", n);
  gen_lc->add_option("--p", p);
  gen_lc->add_option("--max-color", max_color);
  gen_lc->add_option("--max-list", max_list);

  for (auto* sub : {gen_random, gen_planted, gen_gadget, gen_lc}) {
    sub->add_option("--seed", seed);
    sub->add_option("--out", gen_out, "output file (default: stdout)");
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out, err);
    if (*verify_cmd) return cmd_verify(verify_graph, verify_weights, out);
    if (*kernel_cmd) return cmd_kernelize(kernel_graph, kernel_k, kernel_prefix, out);
    if (*reduce_cmd) return cmd_reduce(reduce, out);
    if (*gen_random) {
      const Graph g = random_graph(n, p, seed);
      emit(gen_out, emit_graph(g, random_preweights(g, fraction, allow_zero, seed + 1)), out);
    } else if (*gen_planted) {
      emit(gen_out, emit_graph(planted_twins(core, p, classes, size, seed)), out);
    } else if (*gen_gadget) {
      ReductionBuilder b;
      const VertexId host = b.add_vertex({});
      if (gadget == "suspended") {
        for (std::uint32_t i = 0; i < gadget_q; ++i) b.add_suspended_path(host);
      } else if (gadget == "type-a") {
        b.add_type_a(host, gadget_k);
      } else {
        const VertexId z = b.add_vertex({VertexRole::UniversalZ, 0, 0, 0});
        b.add_type_b(host, gadget_k, z, gadget_n);
      }
      emit(gen_out, emit_graph(b.finish().graph), out);
    } else if (*gen_lc) {
      emit(gen_out, emit_listcoloring(random_list_instance(n, p, max_color, max_list, seed)), out);
    }
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace vcew
