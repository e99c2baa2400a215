#include "isect/checks.hpp"

#include "isect/chordal.hpp"
#include "isect/error.hpp"
#include "isect/oracle.hpp"
#include "isect/solve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace isect {
namespace {

constexpr std::size_t kMaxMessages = 20;

class Recorder {
 public:
  explicit Recorder(CheckResult& result) : result_(result) {}

  void begin(int instance, std::uint64_t seed, int n) {
    label_ = "instance " + std::to_string(instance) + " (seed " + std::to_string(seed) + ", n " +
             std::to_string(n) + ")";
  }

  void expect(bool ok, std::string_view what) {
    ++result_.assertions;
    if (ok) return;
    ++result_.violations;
    if (result_.messages.size() < kMaxMessages) result_.messages.push_back(label_ + ": " + std::string(what));
  }

 private:
  CheckResult& result_;
  std::string label_;
};

using SuiteFn = std::function<void(const ModelFile&, std::uint64_t, Recorder&)>;

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::vector<Vertex>> sorted_family(std::vector<std::vector<Vertex>> f) {
  for (auto& s : f) std::sort(s.begin(), s.end());
  std::sort(f.begin(), f.end());
  return f;
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.has_edge(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.has_edge(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_proper_coloring(const Graph& g, std::span<const Vertex> color) {
  for (auto [u, v] : g.edges()) {
    if (color[u - 1] == color[v - 1]) return false;
  }
  return true;
}

bool is_spanning_tree_of(const Graph& t, const Graph& g) {
  if (t.order() != g.order() || static_cast<int>(t.size()) != g.order() - 1 || !is_connected(t)) return false;
  return std::all_of(t.edges().begin(), t.edges().end(), [&](Edge e) { return g.has_edge(e.first, e.second); });
}

std::vector<Rational> weights_of(const ModelFile& f) { return f.weights; }

Problem of(ProblemKind kind) {
  Problem p;
  p.kind = kind;
  return p;
}

// ---- interval suites ----

void umbrella_suite(const ModelFile& f, std::uint64_t, Recorder& rec) {
  const auto& m = std::get<IntervalModel>(f.model);
  Graph g = build_interval_graph(m);
  // For each w the neighbours below w must be exactly L(w)..w-1, which is
  // the triple condition u < v < w, uw in E => vw in E for every triple.
  for (Vertex w = 1; w <= g.order(); ++w) {
    auto nb = g.neighbors(w);
    if (nb.empty() || nb.front() > w) continue;
    for (Vertex v = nb.front() + 1; v < w; ++v) {
      rec.expect(g.has_edge(v, w), "umbrella fails at v=" + std::to_string(v) + ", w=" + std::to_string(w));
    }
  }
}

void interval_tree_suite(const ModelFile& f, std::uint64_t, Recorder& rec) {
  const auto& m = std::get<IntervalModel>(f.model);
  Graph g = build_interval_graph(m);
  IntervalTree t = build_interval_tree(m);
  rec.expect(is_spanning_tree_of(t.tree(), g), "interval tree is not a spanning tree");
  const int n = g.order();
  auto dist = bfs_distances(g, n);
  for (Vertex v = 1; v <= n; ++v) {
    rec.expect(dist[v - 1] && *dist[v - 1] == t.level[v], "level of " + std::to_string(v) + " differs from d(v, n)");
    Vertex h = v;
    for (Vertex u : g.neighbors(v)) h = std::max(h, u);
    rec.expect(t.high[v] == h, "H(" + std::to_string(v) + ") is not the highest neighbour");
  }
}

void apsp_suite(const ModelFile& f, std::uint64_t, Recorder& rec) {
  if (f.kind == ModelKind::Arcs) {
    const auto& m = std::get<ArcModel>(f.model);
    Graph g = build_circular_arc_graph(m);
    if (!is_connected(g)) {
      bool threw = false;
      try {
        apsp_circular_arc(m);
      } catch (const Error& e) {
        threw = e.code() == Errc::DisconnectedGraph;
      }
      rec.expect(threw, "disconnected arc model did not raise DisconnectedGraph");
      return;
    }
    rec.expect(apsp_circular_arc(m) == bfs_apsp(g), "apsp_circular_arc differs from BFS");
    return;
  }
  const auto& m = std::get<IntervalModel>(f.model);
  Graph g = build_interval_graph(m);
  DistanceMatrix oracle = bfs_apsp(g);
  rec.expect(apsp_interval(m) == oracle, "apsp_interval differs from BFS");
  IntervalTree t = build_interval_tree(m);
  const int n = g.order();
  int mismatches = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (distance_query(t, u, v) != *oracle.at(u, v)) ++mismatches;
    }
  }
  rec.expect(mismatches == 0, std::to_string(mismatches) + " distance_query mismatches");
  Metrics met = metrics(g);
  DiameterCenter dc = diameter_and_center(m);
  rec.expect(dc.diameter == met.diameter, "diameter differs");
  rec.expect(dc.radius == met.radius, "radius differs");
  rec.expect(dc.center == met.center, "center differs");
  rec.expect(dc.eccentricity == met.eccentricity, "eccentricities differ");
}

void spanner_suite(const ModelFile& f, std::uint64_t, Recorder& rec) {
  const auto& m = std::get<IntervalModel>(f.model);
  Graph g = build_interval_graph(m);
  SpannerTree s = tree_3_spanner(m);
  rec.expect(is_tree_t_spanner(g, s.tree, Rational(3)), "tree is not a 3-spanner");
}

void coloring_suite(const ModelFile& f, std::uint64_t, Recorder& rec) {
  const auto& m = std::get<IntervalModel>(f.model);
  Graph g = build_interval_graph(m);
  std::vector<int> color = greedy_color(m);
  rec.expect(is_proper_coloring(g, color), "greedy colouring is not proper");
  int used = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  std::size_t omega = 0;
  for (const auto& c : maximal_cliques_interval(normalize(m).model)) omega = std::max(omega, c.size());
  rec.expect(used == static_cast<int>(omega), "colour count differs from the clique number");
  if (g.order() <= 9) {
    auto chi = brute_solve(g, of(ProblemKind::ChromaticNumber));
    rec.expect(chi.value == used, "colour count differs from the chromatic number");
  }
}

// ---- circular arcs ----

void arcs_suite(const ModelFile& f, std::uint64_t, Recorder& rec) {
  const auto& m = std::get<ArcModel>(f.model);
  Graph g = build_circular_arc_graph(m);
  const int n = g.order();
  rec.expect(m.is_canonical(), "generated model is not canonical");
  CutSplit cut = split_at_cut(m);
  std::vector<Vertex> all = cut.backward;
  all.insert(all.end(), cut.forward.begin(), cut.forward.end());
  std::vector<Vertex> expected(n);
  std::iota(expected.begin(), expected.end(), 1);
  rec.expect(sorted(all) == expected, "S_B and S_F do not partition the arcs");
  rec.expect(is_clique(g, cut.backward), "S_B is not a clique");

  if (n <= 14) {
    Graph wg = g.with_weights(weights_of(f));
    auto brute = brute_solve(wg, of(ProblemKind::MaxWeightIndependentSet));
    auto mine = mwis_circular_arc(m, f.weights);
    Rational w = 0;
    for (Vertex v : mine) w += wg.weight(v);
    rec.expect(is_independent(g, mine), "mwis_circular_arc result is not independent");
    rec.expect(w == brute.value, "mwis_circular_arc weight differs from brute force");
  }
  for (Vertex i = 1; i <= n; ++i) {
    SubModel sub = delete_closed_neighborhood(m, i);
    std::vector<Vertex> rest;
    for (Vertex v = 1; v <= n; ++v) {
      if (v != i && !g.has_edge(i, v)) rest.push_back(v);
    }
    rec.expect(sub.source == rest, "G - N[" + std::to_string(i) + "] has the wrong vertex set");
    Graph sg = build_interval_graph(sub.model);
    rec.expect(sg == induced_subgraph(g, sub.source), "G - N[" + std::to_string(i) + "] has the wrong edges");
    if (n <= 9) rec.expect(is_interval_bruteforce(sg), "G - N[i] is not an interval graph");
  }
}

// ---- permutations ----

int longest_decreasing(const Permutation& p) {
  std::vector<int> tails;
  for (int pos = 1; pos <= p.size(); ++pos) {
    int v = -p.pi(pos);
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) tails.push_back(v);
    else *it = v;
  }
  return static_cast<int>(tails.size());
}

void permutation_suite(const ModelFile& f, std::uint64_t, Recorder& rec) {
  const auto& p = std::get<Permutation>(f.model);
  Graph g = build_permutation_graph(p);
  const int n = p.size();
  rec.expect(build_permutation_graph(complement_permutation(p)) == complement(g), "complement identity fails");

  // Greedy monotone runs from every start: increasing ones are independent,
  // decreasing ones cliques.
  for (int start = 1; start <= n; ++start) {
    std::vector<Vertex> up{p.pi(start)}, down{p.pi(start)};
    for (int pos = start + 1; pos <= n; ++pos) {
      if (p.pi(pos) > up.back()) up.push_back(p.pi(pos));
      if (p.pi(pos) < down.back()) down.push_back(p.pi(pos));
    }
    rec.expect(is_independent(g, sorted(up)), "increasing subsequence is not independent");
    rec.expect(is_clique(g, sorted(down)), "decreasing subsequence is not a clique");
  }

  if (n <= 11) {
    rec.expect(sorted_family(enumerate_mis(p)) == sorted_family(maximal_independent_sets_bruteforce(g)),
               "enumerate_mis differs from brute force");
  }
  if (n <= 16) {
    Graph wg = g.with_weights(weights_of(f));
    auto brute = brute_solve(wg, of(ProblemKind::MaxWeightIndependentSet));
    auto dp = mwis_permutation(p, f.weights);
    rec.expect(dp == brute.witness, "mwis_permutation differs from brute force");
    auto tree = mwis_permutation_tree(p, f.weights);
    Rational w = 0;
    for (Vertex v : tree) w += wg.weight(v);
    rec.expect(w == brute.value && is_independent(g, tree), "MIS-tree optimum differs from brute force");
    auto clique = max_clique_permutation(p);
    auto omega = brute_solve(g, of(ProblemKind::MaxClique));
    rec.expect(is_clique(g, clique), "max_clique_permutation is not a clique");
    rec.expect(static_cast<int>(clique.size()) == longest_decreasing(p), "clique size differs from LDS length");
    rec.expect(Rational(static_cast<std::int64_t>(clique.size())) == omega.value, "clique size differs from brute omega");
  }
}

// ---- trapezoids ----

void check_four_reps(const TrapezoidModel& m, Recorder& rec) {
  Graph g = build_trapezoid_graph(m);
  auto segs = to_segment_rep(m);
  auto boxes = to_box_rep(m);
  PermutationDiagram diagram = to_permutation_diagram(m);
  int bad = 0;
  for (Vertex x = 1; x <= m.size(); ++x) {
    for (Vertex y = x + 1; y <= m.size(); ++y) {
      bool base = trapezoids_adjacent(m[x], m[y]);
      if (base != g.has_edge(x, y) || base != segments_joint(segs[x - 1], segs[y - 1]) ||
          base != boxes_incomparable(boxes[x - 1], boxes[y - 1]) || base != diagram_adjacent(diagram, x, y)) {
        ++bad;
      }
    }
  }
  rec.expect(bad == 0, std::to_string(bad) + " pairs where the four representations disagree");
}

void trapezoid_suite(const ModelFile& f, std::uint64_t seed, Recorder& rec) {
  const auto& m = std::get<TrapezoidModel>(f.model);
  check_four_reps(m, rec);
  Graph g = build_trapezoid_graph(m);
  std::vector<Vertex> order(m.size());
  std::iota(order.begin(), order.end(), 1);
  rec.expect(check_cocomparability_order(g, order), "index order is not a cocomparability ordering");
  if (m.size() <= 9) rec.expect(is_weakly_chordal_bruteforce(g), "trapezoid graph is not weakly chordal");

  GeneratorSpec spec{ModelKind::Permutation, m.size(), seed};
  Permutation p = std::get<Permutation>(generate_model(spec).model);
  TrapezoidModel lines = TrapezoidModel::from_permutation(p);
  rec.expect(build_trapezoid_graph(lines) == build_permutation_graph(p), "line model differs from the permutation graph");
  check_four_reps(lines, rec);
}

// ---- chordal ----

void chordal_structure(const Graph& h, Recorder& rec) {
  const int n = h.order();
  rec.expect(is_chordal(h), "graph expected to be chordal is not");
  if (!is_chordal(h)) return;
  rec.expect(check_ordering(h, {perfect_elimination_ordering(h), OrderingKind::PerfectElimination}),
             "perfect_elimination_ordering fails the checker");
  auto cliques = maximal_cliques_chordal(h);
  rec.expect(static_cast<int>(cliques.size()) <= std::max(n, 1), "more than n maximal cliques");
  if (n <= 12) {
    rec.expect(sorted_family(cliques) == sorted_family(maximal_cliques_bruteforce(h)),
               "maximal cliques differ from brute force");
  }
  if (static_cast<int>(h.size()) != n * (n - 1) / 2) {
    std::vector<Vertex> simplicial;
    for (Vertex v = 1; v <= n; ++v) {
      std::vector<Vertex> nb(h.neighbors(v).begin(), h.neighbors(v).end());
      if (is_clique(h, nb)) simplicial.push_back(v);
    }
    bool pair = false;
    for (std::size_t i = 0; i < simplicial.size() && !pair; ++i) {
      for (std::size_t j = i + 1; j < simplicial.size() && !pair; ++j) {
        pair = !h.has_edge(simplicial[i], simplicial[j]);
      }
    }
    rec.expect(pair, "non-complete chordal graph without two non-adjacent simplicial vertices");
  }
  if (n <= 16) {
    CliqueGraph cg = clique_graph(h);
    std::map<std::pair<int, int>, const std::vector<Vertex>*> sep;
    for (const auto& l : cg.links) sep[{std::min(l.x, l.y), std::max(l.x, l.y)}] = &l.separator;
    auto get = [&](int a, int b) -> const std::vector<Vertex>* {
      auto it = sep.find({std::min(a, b), std::max(a, b)});
      return it == sep.end() ? nullptr : it->second;
    };
    auto subset = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    const int c = static_cast<int>(cg.cliques.size());
    for (int x = 0; x < c; ++x) {
      for (int y = x + 1; y < c; ++y) {
        for (int z = y + 1; z < c; ++z) {
          auto* s1 = get(x, y);
          auto* s2 = get(y, z);
          auto* s3 = get(x, z);
          if (!s1 || !s2 || !s3) continue;
          auto fits = [&](const auto& a, const auto& b, const auto& other) { return a == b && subset(a, other); };
          rec.expect(fits(*s1, *s2, *s3) || fits(*s1, *s3, *s2) || fits(*s2, *s3, *s1),
                     "clique-graph triangle violates the separator property");
        }
      }
    }
  }
}

void chordal_suite(const ModelFile& f, std::uint64_t, Recorder& rec) {
  if (f.kind == ModelKind::Interval) {
    Graph g = build_interval_graph(std::get<IntervalModel>(f.model));
    rec.expect(is_chordal(g), "interval graph is not chordal");
    if (g.order() <= 16) chordal_structure(g, rec);
    return;
  }
  const Graph& g = std::get<Graph>(f.model);
  if (g.order() <= 12) rec.expect(is_chordal(g) == !has_hole_bruteforce(g, 4), "is_chordal disagrees with hole search");
  chordal_structure(elimination_fill(g), rec);
}

// ---- geometric families ----

void dotted_suite(const ModelFile& f, std::uint64_t, Recorder& rec) {
  const auto& items = std::get<std::vector<DottedInterval>>(f.model);
  DottedGraph dg = build_ddig(items);
  std::int64_t jump = 0;
  int bad = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    jump = std::max(jump, items[i].d);
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      bool crt = dotted_intersect(items[i], items[j]);
      if (crt != dotted_intersect_enumerate(items[i], items[j]) ||
          crt != dg.graph.has_edge(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1))) {
        ++bad;
      }
    }
  }
  rec.expect(bad == 0, std::to_string(bad) + " dotted pairs where the congruence test disagrees");
  rec.expect(dg.jump_bound == jump, "jump bound is not the largest jump");
}

void boxes_suite(const ModelFile& f, std::uint64_t, Recorder& rec) {
  const auto& m = std::get<KBoxModel>(f.model);
  Graph g = build_box_graph(m);
  auto coords = coordinate_graphs(m);
  rec.expect(g == edge_intersection(coords), "box graph differs from the coordinate-wise intersection");
  rec.expect(verify_box_representation(g, m), "verify_box_representation rejects the built graph");
}

void udg_suite(const ModelFile& f, std::uint64_t, Recorder& rec) {
  Graph g = build_unit_disk_graph(std::get<DiskPoints>(f.model));
  if (g.order() > 9) return;
  auto chi = brute_solve(g, of(ProblemKind::ChromaticNumber));
  auto omega = brute_solve(g, of(ProblemKind::MaxClique));
  rec.expect(chi.value <= 3 * omega.value - 2, "chromatic number exceeds 3 omega - 2");
}

void circle_suite(const ModelFile& f, std::uint64_t, Recorder& rec) {
  const auto& m = std::get<ChordModel>(f.model);
  rec.expect(build_circle_graph(m) == circle_graph_by_segments(m), "circle graph differs from the geometric check");
}

void tolerance_suite(const ModelFile& f, std::uint64_t, Recorder& rec) {
  ToleranceRep rep = std::get<ToleranceRep>(f.model);
  Graph g = build_tolerance_graph(rep);
  int bad = 0;
  const int n = static_cast<int>(rep.intervals.size());
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      const Tolerance& tu = rep.tolerances[u - 1];
      const Tolerance& tv = rep.tolerances[v - 1];
      bool edge = false;
      if (!(tu.infinite && tv.infinite)) {
        Rational t = tu.infinite ? tv.value : tv.infinite ? tu.value : std::min(tu.value, tv.value);
        edge = overlap_length(rep.intervals[u - 1], rep.intervals[v - 1]) >= t;
      }
      if (edge != g.has_edge(u, v)) ++bad;
    }
  }
  rec.expect(bad == 0, std::to_string(bad) + " pairs violate the tolerance rule");
  if (n <= 9) {
    for (auto& t : rep.tolerances) t = {Rational(1), false};
    rec.expect(is_interval_bruteforce(build_tolerance_graph(rep)), "constant-tolerance graph is not an interval graph");
  }
}

// ---- plumbing ----

void roundtrip_suite(const ModelFile& f, std::uint64_t, Recorder& rec) {
  std::string text = emit_model_file(f);
  ModelFile back = parse_model_file(text);
  rec.expect(emit_model_file(back) == text, "gen -> parse -> emit is not byte-identical");
  rec.expect(model_graph(back) == model_graph(f), "parsed model builds a different graph");
}

void solve_suite(const ModelFile& original, std::uint64_t, Recorder& rec) {
  ModelFile f = original;
  if (f.kind == ModelKind::Graph) f.model = elimination_fill(std::get<Graph>(f.model));
  Graph g = model_graph(f);
  if (g.order() > 16) return;
  for (ProblemKind k : {ProblemKind::MaxIndependentSet, ProblemKind::MaxWeightIndependentSet, ProblemKind::MaxClique,
                        ProblemKind::ChromaticNumber}) {
    if (!has_structured_solver(f.kind, k)) continue;
    Problem p = of(k);
    BruteSolution mine = structured_solve(f, p);
    BruteSolution brute = brute_solve(g, p);
    std::string name(problem_name(k));
    rec.expect(mine.value == brute.value, name + ": structured value differs from brute force");
    if (k == ProblemKind::ChromaticNumber) {
      rec.expect(is_proper_coloring(g, mine.witness), name + ": colouring is not proper");
    } else if (k == ProblemKind::MaxClique) {
      rec.expect(is_clique(g, mine.witness), name + ": witness is not a clique");
    } else {
      rec.expect(is_independent(g, mine.witness), name + ": witness is not independent");
    }
  }
}

struct Suite {
  SuiteInfo info;
  SuiteFn run;
};

const std::vector<Suite>& suites() {
  using K = ModelKind;
  static const std::vector<Suite> all = {
      {{"umbrella", "u < v < w with uw an edge forces vw", {K::Interval}, 2, 200}, umbrella_suite},
      {{"interval-tree", "spanning tree, H(v) and levels equal to d(v, n)", {K::Interval}, 2, 200},
       interval_tree_suite},
      {{"apsp", "structured all-pairs distances, diameter and center against BFS", {K::Interval, K::Arcs}, 2, 200},
       apsp_suite},
      {{"spanner", "tree 3-spanner stretch over all pairs", {K::Interval}, 2, 200}, spanner_suite},
      {{"coloring", "greedy colours = clique number = chromatic number", {K::Interval}, 2, 200}, coloring_suite},
      {{"arcs", "S_B clique, weighted independent set and G - N[i] submodels", {K::Arcs}, 1, 14}, arcs_suite},
      {{"permutation", "complement, MIS enumeration, independent sets and cliques", {K::Permutation}, 1, 11},
       permutation_suite},
      {{"trapezoid", "four representations, cocomparability order, line models", {K::Trapezoid}, 1, 100},
       trapezoid_suite},
      {{"chordal", "recognition, maximal cliques and clique-graph separators", {K::Graph, K::Interval}, 1, 9},
       chordal_suite},
      {{"dotted", "congruence test against enumeration", {K::Dotted}, 1, 40}, dotted_suite},
      {{"boxes", "box graph = intersection of coordinate interval graphs", {K::Boxes}, 1, 30}, boxes_suite},
      {{"udg", "chromatic number at most 3 omega - 2", {K::Disks}, 1, 9}, udg_suite},
      {{"circle", "chord interleaving against segment geometry", {K::Chords}, 1, 30}, circle_suite},
      {{"tolerance", "edge rule and constant-tolerance interval property", {K::Tolerance}, 1, 9}, tolerance_suite},
      {{"roundtrip",
        "gen -> parse -> emit is byte-identical",
        {K::Interval, K::Arcs, K::Permutation, K::Trapezoid, K::Dotted, K::Tolerance, K::Chords, K::Disks, K::Boxes,
         K::Graph},
        1,
        30},
       roundtrip_suite},
      {{"solve", "structured solvers against brute force", {K::Arcs, K::Interval, K::Permutation, K::Graph}, 1, 14},
       solve_suite},
  };
  return all;
}

}  // namespace

std::span<const SuiteInfo> check_suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& s : suites()) out.push_back(s.info);
    return out;
  }();
  return infos;
}

const SuiteInfo* find_suite(std::string_view name) {
  for (const auto& s : check_suites()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

Graph elimination_fill(const Graph& g) {
  const int n = g.order();
  std::vector<std::set<Vertex>> adj(n + 1);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  for (Vertex v = 1; v <= n; ++v) {
    std::vector<Vertex> later(adj[v].upper_bound(v), adj[v].end());
    for (std::size_t i = 0; i < later.size(); ++i) {
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        adj[later[i]].insert(later[j]);
        adj[later[j]].insert(later[i]);
      }
    }
  }
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v : adj[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges), g.weights());
}

CheckResult run_check(std::string_view name, const CheckOptions& options) {
  auto it = std::find_if(suites().begin(), suites().end(), [&](const Suite& s) { return s.info.name == name; });
  if (it == suites().end()) throw Error(Errc::BadParams, "unknown check suite \"" + std::string(name) + "\"");
  const SuiteInfo& info = it->info;
  ModelKind kind = options.kind.value_or(info.kinds.front());
  if (std::find(info.kinds.begin(), info.kinds.end(), kind) == info.kinds.end()) {
    throw Error(Errc::BadParams, "suite " + std::string(name) + " does not take " + std::string(kind_name(kind)) +
                                     " models");
  }
  int lo = options.min_n ? options.min_n : info.min_n;
  int hi = options.max_n ? options.max_n : info.max_n;
  if (name == "apsp" && kind == ModelKind::Arcs && !options.max_n) hi = 60;
  if (options.count < 0 || lo < 1 || hi < lo) throw Error(Errc::BadParams, "bad corpus size or range");

  CheckResult result;
  result.suite = std::string(name);
  result.kind = kind;
  Recorder rec(result);
  std::mt19937_64 sizes(options.seed);
  for (int i = 0; i < options.count; ++i) {
    GeneratorSpec spec;
    spec.kind = kind;
    spec.n = static_cast<int>(uniform_int(sizes, lo, hi));
    spec.seed = options.seed + static_cast<std::uint64_t>(i);
    rec.begin(i, spec.seed, spec.n);
    try {
      it->run(generate_model(spec), spec.seed, rec);
    } catch (const Error& e) {
      rec.expect(false, std::string("threw ") + std::string(to_string(e.code())) + ": " + e.what());
    }
    ++result.instances;
  }
  return result;
}

}  // namespace isect
