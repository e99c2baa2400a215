#include "isect/checks.hpp"
#include "isect/cli.hpp"
#include "isect/error.hpp"
#include "isect/interval.hpp"
#include "isect/model_io.hpp"
#include "isect/oracle.hpp"
#include "isect/solve.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace isect;

namespace {

py::dict solution_dict(const BruteSolution& s) {
  py::dict d;
  d["problem"] = std::string(problem_name(s.problem.kind));
  d["value"] = s.infinite ? std::string("inf") : to_string(s.value);
  d["witness"] = s.witness;
  return d;
}

Problem make_problem(const std::string& name, int k, std::vector<int> targets, int source, int target) {
  auto kind = parse_problem_kind(name);
  if (!kind) throw Error(Errc::BadParams, "unknown problem \"" + name + "\"");
  Problem p;
  p.kind = *kind;
  p.k = k;
  p.targets = std::move(targets);
  p.source = source;
  p.target = target;
  return p;
}

IntervalModel interval_model(const std::vector<std::pair<std::string, std::string>>& spans) {
  std::vector<Interval> items;
  for (const auto& [a, b] : spans) items.push_back({parse_rational(a), parse_rational(b)});
  return IntervalModel(std::move(items));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Intersection-graph models, structured algorithms and brute-force oracles";

  static py::handle error_type = py::exception<Error>(m, "Error", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "edges", [](const std::string& text) { return model_graph(parse_model_file(text)).edges(); },
      py::arg("model_json"), "Edge list (u, v), u < v, of a model file's intersection graph.");

  m.def(
      "generate",
      [](const std::string& kind, int n, std::uint64_t seed, int k, int max_len, int jump, const std::string& r) {
        auto parsed = parse_kind(kind);
        if (!parsed) throw Error(Errc::BadParams, "unknown kind \"" + kind + "\"");
        GeneratorSpec spec{*parsed, n, seed, k, max_len, jump, parse_rational(r)};
        return emit_model_file(generate_model(spec));
      },
      py::arg("kind"), py::arg("n"), py::arg("seed") = 1, py::arg("k") = 0, py::arg("max_len") = 0,
      py::arg("jump") = 2, py::arg("r") = "1", "Seeded random model file text.");

  m.def(
      "solve",
      [](const std::string& text, const std::string& problem, int k) {
        return solution_dict(structured_solve(parse_model_file(text), make_problem(problem, k, {}, 0, 0)));
      },
      py::arg("model_json"), py::arg("problem"), py::arg("k") = 1);

  m.def(
      "oracle",
      [](const std::string& text, const std::string& problem, int k, std::vector<int> targets, int source,
         int target) {
        Graph g = model_graph(parse_model_file(text));
        return solution_dict(brute_solve(g, make_problem(problem, k, std::move(targets), source, target)));
      },
      py::arg("model_json"), py::arg("problem"), py::arg("k") = 1, py::arg("targets") = std::vector<int>{},
      py::arg("source") = 0, py::arg("target") = 0);

  m.def(
      "check",
      [](const std::string& suite, std::optional<std::string> kind, int count, std::uint64_t seed) {
        CheckOptions opts;
        opts.count = count;
        opts.seed = seed;
        if (kind) {
          opts.kind = parse_kind(*kind);
          if (!opts.kind) throw Error(Errc::BadParams, "unknown kind \"" + *kind + "\"");
        }
        CheckResult r = run_check(suite, opts);
        py::dict d;
        d["instances"] = r.instances;
        d["assertions"] = r.assertions;
        d["violations"] = r.violations;
        d["messages"] = r.messages;
        return d;
      },
      py::arg("suite"), py::arg("kind") = py::none(), py::arg("count") = 100, py::arg("seed") = 1);

  m.def(
      "interval_apsp",
      [](const std::vector<std::pair<std::string, std::string>>& spans) {
        DistanceMatrix d = apsp_interval(interval_model(spans));
        std::vector<std::vector<int>> rows(d.order(), std::vector<int>(d.order()));
        for (Vertex u = 1; u <= d.order(); ++u) {
          for (Vertex v = 1; v <= d.order(); ++v) rows[u - 1][v - 1] = *d.at(u, v);
        }
        return rows;
      },
      py::arg("intervals"), "All-pairs distances of a connected strict interval model; endpoints as strings.");

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = execute(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end; returns (exit code, stdout, stderr).");
}
