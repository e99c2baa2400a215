#include "isect/cli.hpp"

#include "isect/checks.hpp"
#include "isect/error.hpp"
#include "isect/model_io.hpp"
#include "isect/oracle.hpp"
#include "isect/solve.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace isect {
namespace {

struct ProblemArgs {
  std::string model;
  std::string problem;
  int k = 1;
  std::vector<int> targets;
  int source = 0;
  int target = 0;
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::SchemaError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) throw Error(Errc::BadParams, "cannot write " + path);
}

std::vector<std::string> kind_names() {
  std::vector<std::string> names;
  for (auto k : {ModelKind::Interval, ModelKind::Arcs, ModelKind::Permutation, ModelKind::Trapezoid,
                 ModelKind::Dotted, ModelKind::Tolerance, ModelKind::Chords, ModelKind::Disks, ModelKind::Boxes,
                 ModelKind::Graph}) {
    names.emplace_back(kind_name(k));
  }
  return names;
}

const CLI::Validator kProblemName(
    [](std::string& s) { return parse_problem_kind(s) ? std::string() : "unknown problem \"" + s + "\""; },
    "PROBLEM");

const CLI::Validator kRationalText(
    [](std::string& s) {
      try {
        parse_rational(s);
        return std::string();
      } catch (const Error& e) {
        return std::string(e.what());
      }
    },
    "RATIONAL");

void add_problem_options(CLI::App* cmd, ProblemArgs& a) {
  cmd->add_option("--model", a.model, "Model file (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--problem", a.problem, "Problem name")->required()->check(kProblemName);
  cmd->add_option("--k", a.k, "Distance parameter")->check(CLI::NonNegativeNumber);
  cmd->add_option("--targets", a.targets, "Steiner targets")->delimiter(',');
  cmd->add_option("--source", a.source, "Path source vertex");
  cmd->add_option("--target", a.target, "Path target vertex");
  cmd->add_option("--out", a.out, "Write the output here instead of stdout");
}

Problem to_problem(const ProblemArgs& a) {
  Problem p;
  p.kind = *parse_problem_kind(a.problem);
  p.k = a.k;
  p.targets = a.targets;
  p.source = a.source;
  p.target = a.target;
  return p;
}

std::string edge_lines(const Graph& g) {
  std::ostringstream out;
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int execute(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intersection-graph models, structured algorithms and brute-force oracles", "isect"};
  app.require_subcommand(1);
  const std::vector<std::string> kinds = kind_names();

  std::string build_model, build_out;
  auto* build = app.add_subcommand("build", "Print the edge list of a model, one \"u v\" pair per line");
  build->add_option("--model", build_model, "Model file (JSON)")->required()->check(CLI::ExistingFile);
  build->add_option("--out", build_out, "Write the output here instead of stdout");

  ProblemArgs solve_args, oracle_args;
  auto* solve = app.add_subcommand("solve", "Solve a problem with the structured algorithm for the model");
  add_problem_options(solve, solve_args);
  auto* oracle = app.add_subcommand("oracle", "Solve a problem by exhaustive search");
  add_problem_options(oracle, oracle_args);

  std::string suite, check_kind;
  bool list_suites = false;
  CheckOptions check_opts;
  auto* check = app.add_subcommand("check", "Run a named invariant suite over a generated corpus");
  check->add_option("suite", suite, "Suite name");
  check->add_flag("--list", list_suites, "List the suites");
  check->add_option("--kind", check_kind, "Model kind")->check(CLI::IsMember(kinds));
  check->add_option("--count", check_opts.count, "Number of models")->check(CLI::NonNegativeNumber);
  check->add_option("--seed", check_opts.seed, "Corpus seed");
  check->add_option("--min-n", check_opts.min_n, "Smallest model size")->check(CLI::PositiveNumber);
  check->add_option("--max-n", check_opts.max_n, "Largest model size")->check(CLI::PositiveNumber);

  GeneratorSpec gen_spec;
  std::string gen_kind, gen_r = "1", gen_out;
  auto* gen = app.add_subcommand("gen", "Emit a seeded random model file");
  gen->add_option("--kind", gen_kind, "Model kind")->required()->check(CLI::IsMember(kinds));
  gen->add_option("--n", gen_spec.n, "Model size")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_spec.seed, "64-bit seed");
  gen->add_option("--k", gen_spec.k, "Box dimension (0 picks from the seed)")->check(CLI::NonNegativeNumber);
  gen->add_option("--max-len", gen_spec.max_len, "Span scale (0 picks from the seed)")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--jump", gen_spec.jump, "Largest dotted-interval jump")->check(CLI::PositiveNumber);
  gen->add_option("--r", gen_r, "Disk radius")->check(kRationalText);
  gen->add_option("--out", gen_out, "Write the output here instead of stdout");

  std::string bench_kind = "interval", bench_problem = "mwis";
  std::vector<int> bench_sizes{8, 12, 16, 100, 1000};
  std::uint64_t bench_seed = 1;
  int bench_count = 3;
  auto* bench = app.add_subcommand("bench", "Time the structured and exhaustive paths on generated models");
  bench->add_option("--kind", bench_kind, "Model kind")->check(CLI::IsMember(kinds));
  bench->add_option("--problem", bench_problem, "Problem name")->check(kProblemName);
  bench->add_option("--n", bench_sizes, "Model sizes")->delimiter(',')->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "Seed of the first model");
  bench->add_option("--count", bench_count, "Models per size")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      ModelFile file = parse_model_file(read_file(build_model));
      write_output(edge_lines(model_graph(file)), build_out, out);
      return 0;
    }
    if (solve->parsed() || oracle->parsed()) {
      const ProblemArgs& a = solve->parsed() ? solve_args : oracle_args;
      ModelFile file = parse_model_file(read_file(a.model));
      Problem p = to_problem(a);
      BruteSolution s = solve->parsed() ? structured_solve(file, p) : brute_solve(model_graph(file), p);
      write_output(format_solution(s), a.out, out);
      return 0;
    }
    if (check->parsed()) {
      if (list_suites) {
        for (const auto& s : check_suites()) {
          out << s.name << ": " << s.summary << " [";
          for (std::size_t i = 0; i < s.kinds.size(); ++i) out << (i ? "," : "") << kind_name(s.kinds[i]);
          out << "; n " << s.min_n << ".." << s.max_n << "]\n";
        }
        return 0;
      }
      if (suite.empty()) {
        err << "check: a suite name is required (see --list)\n";
        return 2;
      }
      if (!find_suite(suite)) {
        err << "check: unknown suite \"" << suite << "\" (see --list)\n";
        return 2;
      }
      if (!check_kind.empty()) {
        check_opts.kind = parse_kind(check_kind);
        const auto& kinds = find_suite(suite)->kinds;
        if (std::find(kinds.begin(), kinds.end(), *check_opts.kind) == kinds.end()) {
          err << "check: suite " << suite << " does not take kind " << check_kind << '\n';
          return 2;
        }
      }
      CheckResult r = run_check(suite, check_opts);
      out << "suite " << r.suite << " kind " << kind_name(r.kind) << " instances " << r.instances << " assertions "
          << r.assertions << " violations " << r.violations << '\n';
      for (const auto& m : r.messages) out << "  " << m << '\n';
      return r.ok() ? 0 : 1;
    }
    if (gen->parsed()) {
      gen_spec.kind = *parse_kind(gen_kind);
      gen_spec.r = parse_rational(gen_r);
      write_output(emit_model_file(generate_model(gen_spec)), gen_out, out);
      return 0;
    }
    if (bench->parsed()) {
      ModelKind kind = *parse_kind(bench_kind);
      Problem p;
      p.kind = *parse_problem_kind(bench_problem);
      out << "kind problem n structured_ms oracle_ms\n";
      for (int n : bench_sizes) {
        double structured = 0, brute = 0;
        bool brute_ran = n <= OracleLimits{}.max_vertices;
        for (int i = 0; i < bench_count; ++i) {
          GeneratorSpec spec;
          spec.kind = kind;
          spec.n = n;
          spec.seed = bench_seed + static_cast<std::uint64_t>(i);
          ModelFile file = generate_model(spec);
          auto start = std::chrono::steady_clock::now();
          structured_solve(file, p);
          structured += millis_since(start);
          if (brute_ran) {
            Graph g = model_graph(file);
            start = std::chrono::steady_clock::now();
            brute_solve(g, p);
            brute += millis_since(start);
          }
        }
        out << kind_name(kind) << ' ' << problem_name(p.kind) << ' ' << n << ' ' << std::fixed
            << std::setprecision(3) << structured / bench_count << ' ';
        if (brute_ran) out << brute / bench_count << '\n';
        else out << "-\n";
        out.unsetf(std::ios::floatfield);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace isect
