#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(GRAJAC_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = "/tmp/grajac_cli_" + name;
  std::ofstream(path) << content;
  return path;
}

const std::string kTriangle =
    R"({"vertices":3,"arcs":[{"from":1,"to":2,"kind":"bi","mult":1},)"
    R"({"from":1,"to":3,"kind":"bi","mult":1},{"from":2,"to":3,"kind":"bi","mult":1}]})";

}  // namespace

TEST_CASE("pic and jac on the undirected triangle") {
  std::string path = temp_file("c3.json", kTriangle);
  RunResult pic = run("pic " + path);
  CHECK(pic.exit_code == 0);
  CHECK(pic.out == "Z x Z_3\n");
  RunResult jac = run("--format json jac " + path);
  CHECK(jac.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(jac.out);
  CHECK(j["rank"] == 0);
  CHECK(j["invariant_factors"] == nlohmann::json::array({3}));
}

TEST_CASE("gen pipes into pic") {
  RunResult gen = run("gen cycle --orientation DDD");
  CHECK(gen.exit_code == 0);
  CHECK(nlohmann::json::parse(gen.out) == nlohmann::json::parse(kTriangle));

  RunResult tp = run("gen two-path --n 5 --k 1");
  std::string path = temp_file("tp.json", tp.out);
  CHECK(run("jac " + path).out == "Z_3\n");

  RunResult tree = run("gen tree --n 6 --seed 42");
  CHECK(run("jac " + temp_file("tree.json", tree.out)).out == "0\n");
}

TEST_CASE("snf with transforms") {
  std::string path = temp_file("m.json", R"({"rows":2,"cols":2,"entries":[[2,4],[4,8]]})");
  RunResult plain = run("snf " + path);
  CHECK(plain.exit_code == 0);
  nlohmann::json d = nlohmann::json::parse(plain.out);
  CHECK(d["entries"] == nlohmann::json::parse("[[2,0],[0,0]]"));
  nlohmann::json full = nlohmann::json::parse(run("snf " + path + " --transforms").out);
  CHECK(full.contains("p"));
  CHECK(full.contains("q"));
  CHECK(full["d"]["entries"] == d["entries"]);
}

TEST_CASE("scc output") {
  std::string path = temp_file("c3b.json", kTriangle);
  RunResult text = run("scc " + path);
  CHECK(text.exit_code == 0);
  CHECK(text.out == "1 2 3 (terminal)\n");
  nlohmann::json j = nlohmann::json::parse(run("--format json scc " + path).out);
  CHECK(j["components"] == nlohmann::json::parse("[[1,2,3]]"));
  CHECK(j["terminal"] == nlohmann::json::parse("[true]"));
}

TEST_CASE("verify emits records and a summary") {
  RunResult r = run("verify trees --n-max 6 --count 20 --seed 7");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line, last;
  int records = 0;
  while (std::getline(in, line)) {
    if (line.rfind("passed", 0) == 0) {
      last = line;
    } else {
      nlohmann::json j = nlohmann::json::parse(line);
      CHECK(j["pass"] == true);
      CHECK(j["theorem"] == "tree");
      ++records;
    }
  }
  CHECK(records == 20);
  CHECK(last == "passed 20 / total 20");

  // --jobs must not change the output
  CHECK(run("verify trees --n-max 6 --count 20 --seed 7 --jobs 4").out == r.out);
}

TEST_CASE("chip subcommands") {
  std::string path = temp_file("c3c.json", kTriangle);
  CHECK(run("chip fire " + path + " 3,0,0 --vertex 1 --lend").out == "1,1,1\n");
  RunResult eq = run("chip equiv " + path + " 3,0,0 1,1,1");
  CHECK(eq.exit_code == 0);
  CHECK(eq.out.rfind("true\n", 0) == 0);
  CHECK(run("chip equiv " + path + " 1,0,0 0,0,0").out == "false\n");
  CHECK(run("chip equiv " + path + " 1,0,0 0,1,0").out == "false\n");
  RunResult cls = run("--format json chip class " + path + " 1,2,3");
  nlohmann::json j = nlohmann::json::parse(cls.out);
  CHECK(j["moduli"] == nlohmann::json::array({3}));
}

TEST_CASE("explore dumps computed groups") {
  RunResult r = run("explore --layers 2,2,2,2");
  CHECK(r.exit_code == 0);
  std::string first = r.out.substr(0, r.out.find('\n'));
  nlohmann::json j = nlohmann::json::parse(first);
  CHECK(j["predicted"].is_null());
  CHECK(j["pass"] == true);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("pic /tmp/grajac_cli_missing_file.json").exit_code == 2);
  CHECK(run("gen cycle --orientation FX").exit_code == 2);
  CHECK(run("verify no-such-family").exit_code == 2);
  std::string path = temp_file("c3d.json", kTriangle);
  CHECK(run("chip fire " + path + " 1,0 --vertex 1 --lend").exit_code == 2);
  CHECK(run("chip fire " + path + " 1,0,0 --vertex 1").exit_code == 2);
}
