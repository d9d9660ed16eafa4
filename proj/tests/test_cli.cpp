#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "jsj/metadata.hpp"
#include "jsj/triangulation.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = jsj::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("jsj_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("cli block sizes") {
  for (int k = 1; k <= 5; ++k) {
    auto r = call({"-q", "block", std::to_string(k)});
    REQUIRE(r.code == 0);
    auto t = jsj::read_triangulation(r.out);
    CHECK(t.size() == 9 * k + 6);
  }
  CHECK(call({"block", "0"}).code == 1);
  CHECK(call({"block", "two"}).code == 1);
}

TEST_CASE("cli widths through a pipe") {
  auto grid = call({"gen-graph", "grid", "3"});
  REQUIRE(grid.code == 0);
  CHECK(call({"width", "--exact"}, grid.out).out == "tw=3 pw=3\n");
  CHECK(call({"width"}, call({"gen-graph", "binary-tree", "3"}).out).out == "tw=1 pw=2\n");
  auto bounds = call({"width", "--bounds"}, grid.out);
  CHECK(bounds.out.rfind("tw in [", 0) == 0);
  CHECK(call({"width", "--exact", "--bounds"}, grid.out).code == 1);
}

TEST_CASE("cli build, verify, export") {
  TempDir dir;
  auto graph = dir / "p2.graph";
  REQUIRE(call({"gen-graph", "path", "2", "-o", graph}).code == 0);
  auto build = call({"build", graph, "-o", dir / "p2.tri"});
  REQUIRE(build.code == 0);
  CHECK(build.err.find("delta=36") != std::string::npos);
  CHECK(fs::exists(dir / "p2.tri.meta.json"));

  auto verify = call({"verify", graph, dir / "p2.tri", dir / "p2.tri.meta.json"});
  CHECK(verify.code == 0);
  CHECK(verify.out.find("all checks passed") != std::string::npos);

  auto json = call({"verify", "--json", graph, dir / "p2.tri", dir / "p2.tri.meta.json"});
  CHECK(nlohmann::json::parse(json.out)["passed"] == true);

  // same arguments, same bytes
  REQUIRE(call({"-q", "build", graph, "-o", dir / "again.tri", "--meta", dir / "again.json"}).code == 0);
  CHECK(slurp(dir / "p2.tri") == slurp(dir / "again.tri"));
  CHECK(slurp(dir / "p2.tri.meta.json") == slurp(dir / "again.json"));

  auto exported = call({"export", dir / "p2.tri"});
  CHECK(exported.out == slurp(dir / "p2.tri"));
  auto dual = call({"export", "--dual", dir / "p2.tri"});
  CHECK(dual.out.rfind("p 99\n", 0) == 0);

  // wrong graph for this triangulation
  auto c3 = dir / "c3.graph";
  REQUIRE(call({"gen-graph", "cycle", "3", "-o", c3}).code == 0);
  CHECK(call({"verify", c3, dir / "p2.tri", dir / "p2.tri.meta.json"}).code == 2);

  // a triangulation with one gluing removed
  auto t = jsj::read_triangulation(slurp(dir / "p2.tri"));
  t.unjoin(0, 0);
  std::ofstream(dir / "open.tri") << jsj::write_triangulation(t);
  CHECK(call({"verify", graph, dir / "open.tri", dir / "p2.tri.meta.json"}).code == 2);
}

TEST_CASE("cli build options") {
  auto graph = call({"gen-graph", "cycle", "3"}).out;
  auto a = call({"-q", "build", "--delta", "4", "--K", "2", "--seed", "3"}, graph);
  REQUIRE(a.code == 0);
  auto t = jsj::read_triangulation(a.out);
  CHECK(jsj::is_closed(t));
  CHECK(call({"build", "--width-mode", "fast"}, graph).code == 1);
  CHECK(call({"build", "--K", "0"}, graph).code == 1);
  CHECK(call({"build"}, "0 1\n2 3\n").code == 1);
  auto h = call({"build", "--width-mode", "heuristic"}, graph);
  CHECK(h.err.find("upper_bound") != std::string::npos);
}

TEST_CASE("cli usage errors") {
  CHECK(call({}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({"gen-graph", "hypercube", "3"}).code == 1);
  CHECK(call({"width", "/nonexistent/file"}).code == 1);
  auto bad = call({"export"}, "tri 2\nbdry bdry bdry bdry\n");
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line") != std::string::npos);
  CHECK(call({"--help"}).code == 0);
}
