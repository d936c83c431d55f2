#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "vcew/cli.hpp"
#include "vcew/io.hpp"

using namespace vcew;
using namespace vcew::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "vcew");
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("vcew_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& contents) const {
    const std::string path = (dir_ / name).string();
    write_file(path, contents);
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("solve prints a verified result") {
  Scratch s;
  const std::string c4 = s.file("c4.gr", emit_graph(cycle_graph(4)));
  for (const std::string algo : {"oracle", "tw", "vc", "auto"}) {
    const Run r = run({"solve", c4, "--algo", algo});
    REQUIRE(r.code == 0);
    const ResultRecord rec = parse_result(r.out);
    CHECK(rec.status == Status::Yes);
    CHECK(rec.verified);
    CHECK(rec.stats.empty());
    CHECK(nlohmann::json::parse(r.err).contains("stats"));
  }
  const std::string c3 = s.file("c3.gr", emit_graph(cycle_graph(3)));
  CHECK(parse_result(run({"solve", c3}).out).status == Status::No);
}

TEST_CASE("auto selection") {
  Scratch s;
  const Graph g = path_graph(4);
  PartialWeightAssignment zero;
  zero.set(0, 0);
  CHECK(parse_result(run({"solve", s.file("z.gr", emit_graph(g, zero))}).out).algorithm == "tw");
  PartialWeightAssignment one;
  one.set(0, 1);
  CHECK(parse_result(run({"solve", s.file("o.gr", emit_graph(g, one))}).out).algorithm == "prewt");
  CHECK(parse_result(run({"solve", s.file("p.gr", emit_graph(g))}).out).algorithm == "oracle");
  CHECK(parse_result(run({"solve", s.file("l.gr", emit_graph(path_graph(40)))}).out).algorithm == "tw");
  CHECK(parse_result(run({"solve", s.file("k.gr", emit_graph(star_graph(30)))}).out).algorithm == "vc");
}

TEST_CASE("exit codes") {
  Scratch s;
  CHECK(run({}).code == 2);
  CHECK(run({"solve"}).code == 2);
  CHECK(run({"solve", s.path("missing.gr")}).code == 2);
  CHECK(run({"solve", s.file("bad.gr", "p vcew 2 1\n1 3\n")}).code == 2);
  const std::string p6 = s.file("p6.gr", emit_graph(path_graph(6)));
  CHECK(run({"solve", p6, "--algo", "oracle", "--cutoff", "2"}).code == 3);
  CHECK(run({"solve", p6, "--algo", "nope"}).code == 2);
  PartialWeightAssignment zero;
  zero.set(0, 0);
  const std::string z = s.file("z.gr", emit_graph(path_graph(6), zero));
  CHECK(run({"solve", z, "--algo", "prewt"}).code == 2);
  CHECK(run({"solve", s.file("c5.gr", emit_graph(cycle_graph(5))), "--algo", "vc", "--k", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("solve with a supplied decomposition") {
  Scratch s;
  const std::string g = s.file("c4.gr", emit_graph(cycle_graph(4)));
  const std::string good = s.file("good.td", "s td 2 3 4\nb 1 1 2 3\nb 2 1 3 4\n1 2\n");
  const std::string bad = s.file("bad.td", "s td 2 3 4\nb 1 1 2 3\nb 2 2 3 4\n1 2\n");
  CHECK(run({"solve", g, "--algo", "tw", "--td", good}).code == 0);
  CHECK(run({"solve", g, "--algo", "tw", "--td", bad}).code == 2);
}

TEST_CASE("verify reports conflicts and pre-weight mismatches") {
  Scratch s;
  PartialWeightAssignment pre;
  pre.set(1, 0);
  const std::string g = s.file("p3.gr", emit_graph(path_graph(3), pre));
  const Run ok = run({"verify", g, s.file("ok.w", "1 2 1\n2 3 0\n")});
  CHECK(ok.out == "improper\nconflict 1 2\n");
  const Run both = run({"verify", g, s.file("both.w", "1 2 1\n2 3 1\n")});
  CHECK(both.out == "improper\npreweight 2 3 expected 0\n");
  const std::string free = s.file("free.gr", emit_graph(path_graph(3)));
  CHECK(run({"verify", free, s.path("both.w")}).out == "proper\n");
  CHECK(run({"verify", free, s.file("short.w", "1 2 1\n")}).code == 2);
}

TEST_CASE("kernelize writes the kernel and mapping") {
  Scratch s;
  const std::string g = s.file("star.gr", emit_graph(star_graph(40)));
  const Run r = run({"kernelize", g, "--out", s.path("ker")});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["k"] == 1);
  CHECK(j["class_cap"] == 33);
  CHECK(j["vertices_after"] == 35);
  CHECK(parse_graph(read_file(s.path("ker.gr"))).graph.vertex_count() == 35);
  CHECK(read_file(s.path("ker.map")).substr(0, 4) == "1 1\n");
}

TEST_CASE("reduce-lc") {
  Scratch s;
  const std::string lc = s.file("in.lc", "p lc 2 1\n1 2\nl 1 2 4\nl 2 3\n");
  const Run r = run({"reduce-lc", lc, "--N", "6", "--out", s.path("red"), "--dot", s.path("red.dot")});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["N"] == 6);
  CHECK(j["chains"] == 5);
  CHECK(j["z_degree"] == 17);
  CHECK(read_file(s.path("red.roles")).substr(0, 13) == "v 1 original\n");
  CHECK(run({"reduce-lc", lc, "--N", "5"}).code == 2);
  CHECK(run({"reduce-lc", s.file("wide.lc", "p lc 1 0\nl 1 9\n")}).code == 2);
}

TEST_CASE("generators are seeded") {
  const Run a = run({"gen", "random", "--n", "9", "--p", "0.4", "--seed", "5", "--preweight", "0.3"});
  const Run b = run({"gen", "random", "--n", "9", "--p", "0.4", "--seed", "5", "--preweight", "0.3"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != run({"gen", "random", "--n", "9", "--p", "0.4", "--seed", "6"}).out);
  CHECK(parse_graph(run({"gen", "planted", "--core", "3", "--classes", "2", "--size", "4"}).out)
            .graph.vertex_count() == 11);
  CHECK(parse_graph(run({"gen", "gadget", "type-a", "--k", "3"}).out).graph.edge_count() == 11);
  CHECK(parse_graph(run({"gen", "gadget", "suspended", "--q", "4"}).out).graph.vertex_count() == 9);
  CHECK(run({"gen", "gadget", "type-b", "--k", "6", "--N", "5"}).code == 2);
  CHECK(parse_listcoloring(run({"gen", "lc", "--n", "5"}).out).lists.size() == 5);
  CHECK(run({"gen", "random", "--p", "1.5"}).code == 2);
}
