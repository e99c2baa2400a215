#include "isect/solve.hpp"

#include "isect/chordal.hpp"
#include "isect/error.hpp"

#include <algorithm>
#include <sstream>

namespace isect {
namespace {

BruteSolution set_answer(const Problem& p, std::vector<Vertex> set, const std::vector<Rational>& weights) {
  BruteSolution s;
  s.problem = p;
  std::sort(set.begin(), set.end());
  if (p.kind == ProblemKind::MaxWeightIndependentSet) {
    s.value = 0;
    for (Vertex v : set) s.value += weights.empty() ? Rational(1) : weights[v - 1];
  } else {
    s.value = static_cast<std::int64_t>(set.size());
  }
  s.witness = std::move(set);
  return s;
}

BruteSolution coloring_answer(const Problem& p, std::vector<Vertex> colors) {
  BruteSolution s;
  s.problem = p;
  s.witness_kind = WitnessKind::Coloring;
  s.value = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  s.witness = std::move(colors);
  return s;
}

std::vector<Vertex> best_clique(const std::vector<std::vector<Vertex>>& cliques) {
  std::vector<Vertex> best;
  for (const auto& c : cliques) {
    if (c.size() > best.size() || (c.size() == best.size() && set_precedes(c, best))) best = c;
  }
  return best;
}

std::vector<Vertex> mapped(const std::vector<Vertex>& set, const std::vector<Vertex>& source) {
  std::vector<Vertex> out;
  for (Vertex v : set) out.push_back(source[v - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_set_problem(ProblemKind k) {
  return k == ProblemKind::MaxIndependentSet || k == ProblemKind::MaxWeightIndependentSet ||
         k == ProblemKind::MaxClique;
}

// Layer of each vertex in the longest-decreasing-subsequence sense: a
// proper colouring of the permutation graph with omega colours.
std::vector<int> permutation_coloring(const Permutation& p) {
  const int n = p.size();
  std::vector<int> color(n, 0);
  // tails[c]: largest value ending a decreasing subsequence of length c + 1.
  std::vector<int> tails;
  for (int pos = 1; pos <= n; ++pos) {
    Vertex v = p.pi(pos);
    auto it = std::lower_bound(tails.begin(), tails.end(), v, [](int tail, int x) { return tail > x; });
    int c = static_cast<int>(it - tails.begin());
    if (it == tails.end()) tails.push_back(v);
    else *it = v;
    color[v - 1] = c;
  }
  return color;
}

}  // namespace

bool has_structured_solver(ModelKind kind, ProblemKind problem) {
  switch (kind) {
    case ModelKind::Interval:
    case ModelKind::Permutation:
      return is_set_problem(problem) || problem == ProblemKind::ChromaticNumber;
    case ModelKind::Graph:
      return problem == ProblemKind::MaxIndependentSet || problem == ProblemKind::MaxClique ||
             problem == ProblemKind::ChromaticNumber;
    case ModelKind::Arcs:
      return problem == ProblemKind::MaxIndependentSet || problem == ProblemKind::MaxWeightIndependentSet;
    default:
      return false;
  }
}

BruteSolution structured_solve(const ModelFile& file, const Problem& p) {
  if (!has_structured_solver(file.kind, p.kind)) {
    throw Error(Errc::BadParams, "no structured algorithm for " + std::string(problem_name(p.kind)) + " on " +
                                     std::string(kind_name(file.kind)) + " models");
  }
  const bool weighted = p.kind == ProblemKind::MaxWeightIndependentSet;
  std::vector<Rational> weights = weighted ? file.weights : std::vector<Rational>{};

  switch (file.kind) {
    case ModelKind::Interval: {
      const auto& m = std::get<IntervalModel>(file.model);
      if (p.kind == ProblemKind::ChromaticNumber) return coloring_answer(p, greedy_color(m));
      if (p.kind == ProblemKind::MaxClique) {
        NormalizedModel norm = normalize(m);
        return set_answer(p, mapped(best_clique(maximal_cliques_interval(norm.model)), norm.source), weights);
      }
      return set_answer(p, mwis_interval(m, weights), file.weights);
    }
    case ModelKind::Arcs:
      return set_answer(p, mwis_circular_arc(std::get<ArcModel>(file.model), weights), file.weights);
    case ModelKind::Permutation: {
      const auto& perm = std::get<Permutation>(file.model);
      if (p.kind == ProblemKind::ChromaticNumber) return coloring_answer(p, permutation_coloring(perm));
      if (p.kind == ProblemKind::MaxClique) return set_answer(p, max_clique_permutation(perm), weights);
      return set_answer(p, mwis_permutation(perm, weights), file.weights);
    }
    case ModelKind::Graph: {
      // Chordal graphs only: everything follows a perfect elimination
      // ordering.
      Graph g = std::get<Graph>(file.model);
      if (p.kind == ProblemKind::MaxClique) return set_answer(p, best_clique(maximal_cliques_chordal(g)), weights);
      std::vector<Vertex> peo = perfect_elimination_ordering(g);
      if (p.kind == ProblemKind::ChromaticNumber) {
        // Greedy colouring in reverse elimination order uses omega colours.
        std::vector<int> color(g.order(), -1);
        for (auto it = peo.rbegin(); it != peo.rend(); ++it) {
          std::vector<bool> used(g.order() + 1, false);
          for (Vertex u : g.neighbors(*it)) {
            if (color[u - 1] >= 0) used[color[u - 1]] = true;
          }
          int c = 0;
          while (used[c]) ++c;
          color[*it - 1] = c;
        }
        return coloring_answer(p, color);
      }
      // Taking each still-free simplicial vertex in elimination order gives
      // a maximum independent set.
      std::vector<bool> blocked(g.order() + 1, false);
      std::vector<Vertex> set;
      for (Vertex v : peo) {
        if (blocked[v]) continue;
        set.push_back(v);
        for (Vertex u : g.neighbors(v)) blocked[u] = true;
      }
      return set_answer(p, set, file.weights);
    }
    default:
      break;
  }
  throw Error(Errc::BadParams, "no structured algorithm");
}

std::string format_solution(const BruteSolution& s) {
  std::ostringstream out;
  out << "problem " << problem_name(s.problem.kind) << "\n";
  out << "value " << (s.infinite ? std::string("inf") : to_string(s.value)) << "\n";
  out << "witness";
  for (Vertex v : s.witness) out << ' ' << v;
  out << "\n";
  return out.str();
}

}  // namespace isect
