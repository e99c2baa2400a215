#include "isect/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace isect;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = execute(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::filesystem::path path;

  explicit TempFile(const std::string& name, const std::string& text = {})
      : path(std::filesystem::temp_directory_path() / ("isect_cli_" + name)) {
    if (!text.empty()) std::ofstream(path) << text;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

std::string value_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("value ", 0) == 0) return line;
  }
  return {};
}

const char* kFiveDotted = R"({"kind": "dotted", "items": [
  {"id": 1, "s": 1, "t": 5, "d": 2}, {"id": 2, "s": 2, "t": 3, "d": 1}, {"id": 3, "s": 1, "t": 7, "d": 2},
  {"id": 4, "s": 4, "t": 6, "d": 2}, {"id": 5, "s": 6, "t": 8, "d": 2}]})";

}  // namespace

TEST_CASE("build prints a sorted edge list") {
  TempFile model("dotted.json", kFiveDotted);
  Run r = run({"build", "--model", model.str()});
  CHECK(r.code == 0);
  CHECK(r.out == "1 2\n1 3\n2 3\n4 5\n");

  TempFile out("edges.txt");
  CHECK(run({"build", "--model", model.str(), "--out", out.str()}).code == 0);
  std::ifstream in(out.path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == r.out);
}

TEST_CASE("solve agrees with oracle") {
  for (int seed = 1; seed <= 20; ++seed) {
    TempFile model("arcs.json");
    Run gen = run({"gen", "--kind", "arcs", "--n", "10", "--seed", std::to_string(seed), "--out", model.str()});
    REQUIRE(gen.code == 0);
    Run solve = run({"solve", "--model", model.str(), "--problem", "mwis"});
    Run oracle = run({"oracle", "--model", model.str(), "--problem", "mwis"});
    CHECK(solve.code == 0);
    CHECK(oracle.code == 0);
    CHECK(value_line(solve.out) != "");
    CHECK(value_line(solve.out) == value_line(oracle.out));
  }
}

TEST_CASE("gen is deterministic and round-trips") {
  Run a = run({"gen", "--kind", "tolerance", "--n", "12", "--seed", "5"});
  Run b = run({"gen", "--kind", "tolerance", "--n", "12", "--seed", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != run({"gen", "--kind", "tolerance", "--n", "12", "--seed", "6"}).out);
}

TEST_CASE("check") {
  Run ok = run({"check", "umbrella", "--kind", "interval", "--count", "100", "--seed", "7"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("violations 0") != std::string::npos);
  Run list = run({"check", "--list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("trapezoid") != std::string::npos);
  CHECK(run({"check", "no-such-suite"}).code == 2);
  CHECK(run({"check", "umbrella", "--kind", "arcs"}).code == 2);
}

TEST_CASE("bench prints a table") {
  Run r = run({"bench", "--kind", "interval", "--problem", "mis", "--n", "8,40", "--count", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("kind problem n structured_ms oracle_ms\n", 0) == 0);
  CHECK(r.out.find("interval mis 40 ") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"solve", "--problem", "mwis"}).code == 2);
  CHECK(run({"gen", "--kind", "nope", "--n", "3"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  TempFile missing("missing.json");
  Run r = run({"build", "--model", missing.str()});
  CHECK(r.code == 2);

  TempFile bad("bad.json", R"({"kind": "interval", "items": [{"id": 1, "a": 3, "b": 2}]})");
  r = run({"build", "--model", bad.str()});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("error: ValidationError: $.items[0]", 0) == 0);

  TempFile big("big.json");
  REQUIRE(run({"gen", "--kind", "graph", "--n", "40", "--seed", "1", "--out", big.str()}).code == 0);
  r = run({"oracle", "--model", big.str(), "--problem", "max-clique"});
  CHECK(r.code == 1);
  CHECK(r.err.find("InstanceTooLarge") != std::string::npos);
}
