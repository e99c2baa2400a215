#include "helpers.hpp"

#include "isect/circular_arc.hpp"
#include "isect/error.hpp"
#include "isect/oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace isect;
using namespace isect::test;

namespace {

ArcModel arcs(std::initializer_list<std::pair<int, int>> items) {
  std::vector<Arc> out;
  for (auto [h, t] : items) out.push_back({h, t});
  return ArcModel(out);
}

ArcModel corpus_model(int n, std::uint64_t seed, int max_len = 0) {
  GeneratorSpec spec;
  spec.kind = ModelKind::Arcs;
  spec.n = n;
  spec.seed = seed;
  spec.max_len = max_len;
  return std::get<ArcModel>(generate_model(spec).model);
}

bool raw_contains(const RawArc& a, const Rational& x) {
  return a.h < a.t ? (a.h <= x && x <= a.t) : (x >= a.h || x <= a.t);
}

bool raw_intersect(const RawArc& a, const RawArc& b) {
  return raw_contains(a, b.h) || raw_contains(a, b.t) || raw_contains(b, a.h) || raw_contains(b, a.t);
}

Problem problem(ProblemKind kind) {
  Problem p;
  p.kind = kind;
  return p;
}

const ArcModel kC4 = arcs({{1, 4}, {3, 6}, {5, 8}, {7, 2}});
const ArcModel kK3 = arcs({{1, 4}, {2, 5}, {3, 6}});
const ArcModel kK3ThroughCut = arcs({{1, 4}, {2, 5}, {6, 3}});

}  // namespace

TEST_CASE("arc model validation") {
  CHECK(kC4.is_canonical());
  CHECK(kC4.covers_circle());
  CHECK_FALSE(kK3.covers_circle());
  CHECK_THROWS_AS(arcs({{1, 2}, {2, 3}}), Error);
  CHECK_THROWS_AS(arcs({{1, 5}, {2, 3}}), Error);
  CHECK_FALSE(arcs({{2, 3}, {1, 4}}).is_canonical());
}

TEST_CASE("arc containment and intersection") {
  CHECK(arc_contains_point({1, 4}, 2));
  CHECK_FALSE(arc_contains_point({1, 4}, 5));
  CHECK(arc_contains_point({7, 2}, 8));
  CHECK(arc_contains_point({7, 2}, 1));
  CHECK_FALSE(arc_contains_point({7, 2}, 5));

  CHECK(arcs_intersect({1, 4}, {3, 6}));
  CHECK_FALSE(arcs_intersect({1, 4}, {5, 8}));
  CHECK(arcs_intersect({1, 4}, {2, 3}));
  CHECK(arcs_intersect({2, 3}, {1, 4}));
  CHECK(arcs_intersect({7, 2}, {1, 4}));
}

TEST_CASE("build_circular_arc_graph") {
  CHECK(build_circular_arc_graph(kK3) == complete_graph(3));
  CHECK(build_circular_arc_graph(kC4) == cycle_graph(4));
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    ArcModel m = corpus_model(1 + static_cast<int>(seed % 20), seed);
    if (m.covers_circle()) continue;
    CHECK(build_circular_arc_graph(m) == build_interval_graph(straighten(m)));
  }
  CHECK_THROWS_AS(straighten(kC4), Error);
}

TEST_CASE("interval models are arc models with a gap") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GeneratorSpec spec;
    spec.n = 1 + static_cast<int>(seed % 25);
    spec.seed = seed;
    ModelFile f = generate_model(spec);
    const auto& m = std::get<IntervalModel>(f.model);
    std::vector<Arc> items;
    for (const auto& iv : m.intervals()) {
      items.push_back({static_cast<int>(iv.a.numerator()), static_cast<int>(iv.b.numerator())});
    }
    CHECK(build_circular_arc_graph(ArcModel(items)) == build_interval_graph(m));
  }
}

TEST_CASE("canonicalize") {
  CanonicalArcs same = canonicalize(kC4);
  CHECK(same.model == kC4);
  CHECK(same.source == std::vector<Vertex>{1, 2, 3, 4});

  std::vector<RawArc> raw{{Rational(7, 2), Rational(1, 3)}, {Rational(1, 2), Rational(2)}, {Rational(5, 2), Rational(3)}};
  CanonicalArcs c = canonicalize(raw);
  CHECK(c.model.is_canonical());
  Graph g = build_circular_arc_graph(c.model);
  for (Vertex u = 1; u <= 3; ++u) {
    for (Vertex v = u + 1; v <= 3; ++v) {
      CHECK(g.has_edge(u, v) == raw_intersect(raw[c.source[u - 1] - 1], raw[c.source[v - 1] - 1]));
    }
  }

  std::vector<RawArc> shared{{Rational(0), Rational(1)}, {Rational(1), Rational(2)}};
  CHECK_THROWS_AS(canonicalize(shared), Error);
}

TEST_CASE("split_at_cut") {
  CutSplit k3 = split_at_cut(kK3);
  CHECK(k3.cut_point == 6);
  CHECK(k3.backward == std::vector<Vertex>{3});
  CHECK(k3.forward == std::vector<Vertex>{1, 2});

  CutSplit through = split_at_cut(kK3ThroughCut);
  CHECK(through.backward == std::vector<Vertex>{1, 2, 3});
  CHECK(through.forward.empty());

  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    ArcModel m = corpus_model(1 + static_cast<int>(seed % 30), seed);
    Graph g = build_circular_arc_graph(m);
    CutSplit s = split_at_cut(m);
    CHECK(s.backward.size() + s.forward.size() == static_cast<std::size_t>(m.size()));
    for (std::size_t i = 0; i < s.backward.size(); ++i) {
      for (std::size_t j = i + 1; j < s.backward.size(); ++j) CHECK(g.has_edge(s.backward[i], s.backward[j]));
    }
  }
}

TEST_CASE("delete_closed_neighborhood") {
  for (Vertex i = 1; i <= 3; ++i) CHECK(delete_closed_neighborhood(kK3, i).model.size() == 0);
  SubModel c4 = delete_closed_neighborhood(kC4, 1);
  CHECK(c4.source == std::vector<Vertex>{3});
  CHECK(c4.model.size() == 1);

  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    ArcModel m = corpus_model(1 + static_cast<int>(seed % 9), seed);
    Graph g = build_circular_arc_graph(m);
    for (Vertex i = 1; i <= m.size(); ++i) {
      SubModel sub = delete_closed_neighborhood(m, i);
      std::vector<Vertex> rest;
      for (Vertex v = 1; v <= m.size(); ++v) {
        if (v != i && !g.has_edge(i, v)) rest.push_back(v);
      }
      CHECK(sub.source == rest);
      Graph sg = build_interval_graph(sub.model);
      CHECK(sg == induced_subgraph(g, sub.source));
      CHECK(is_interval_bruteforce(sg));
    }
  }
}

TEST_CASE("mwis_circular_arc") {
  CHECK(mwis_circular_arc(kK3, ints({1, 5, 2})) == std::vector<Vertex>{2});
  CHECK(mwis_circular_arc(kC4) == std::vector<Vertex>{1, 3});
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    GeneratorSpec spec;
    spec.kind = ModelKind::Arcs;
    spec.n = 1 + static_cast<int>(seed % 14);
    spec.seed = seed;
    ModelFile f = generate_model(spec);
    if (seed % 3 == 0) {
      for (auto& w : f.weights) w = w.numerator() % 3;
    }
    const auto& m = std::get<ArcModel>(f.model);
    Graph g = build_circular_arc_graph(m).with_weights(f.weights);
    auto brute = brute_solve(g, problem(ProblemKind::MaxWeightIndependentSet));
    auto mine = mwis_circular_arc(m, f.weights);
    Rational w = 0;
    for (Vertex v : mine) w += g.weight(v);
    CHECK(w == brute.value);
    for (std::size_t i = 0; i < mine.size(); ++i) {
      for (std::size_t j = i + 1; j < mine.size(); ++j) CHECK_FALSE(g.has_edge(mine[i], mine[j]));
    }
  }
}

TEST_CASE("arcs_to_intervals_with_sentinel") {
  // Gap model: I_0 reaches just past the first left endpoint.
  IntervalModel gap = arcs_to_intervals_with_sentinel(kK3);
  CHECK(gap.size() == 4);
  Graph gg = build_interval_graph(gap);
  CHECK(gg.neighbors(1).size() == 1);

  IntervalModel ring = arcs_to_intervals_with_sentinel(kC4);
  CHECK(ring.size() == 5);

  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    ArcModel m = corpus_model(1 + static_cast<int>(seed % 20), seed);
    Graph arc_graph = build_circular_arc_graph(m);
    IntervalModel im = arcs_to_intervals_with_sentinel(m);
    Graph ig = build_interval_graph(im);
    CutSplit cut = split_at_cut(m);
    auto wraps = [&](Vertex v) { return std::binary_search(cut.backward.begin(), cut.backward.end(), v); };
    for (Vertex u = 1; u <= m.size(); ++u) {
      for (Vertex v = u + 1; v <= m.size(); ++v) {
        bool on_line = ig.has_edge(u + 1, v + 1);
        if (on_line) CHECK(arc_graph.has_edge(u, v));
        if (arc_graph.has_edge(u, v) && !on_line) {
          // The pair meets only across the cut: one arc wraps and the other
          // meets the sentinel that stands for the wrapped part.
          CHECK(((wraps(u) && ig.has_edge(1, v + 1)) || (wraps(v) && ig.has_edge(1, u + 1))));
        }
      }
    }
  }
}

TEST_CASE("apsp_circular_arc") {
  DistanceMatrix k3 = apsp_circular_arc(kK3);
  for (Vertex u = 1; u <= 3; ++u) {
    for (Vertex v = 1; v <= 3; ++v) CHECK(k3.at(u, v) == (u == v ? 0 : 1));
  }
  DistanceMatrix c4 = apsp_circular_arc(kC4);
  CHECK(c4.at(1, 3) == 2);
  CHECK(c4.at(2, 4) == 2);
  CHECK_THROWS_AS(apsp_circular_arc(arcs({{1, 2}, {3, 4}})), Error);

  int connected = 0;
  for (std::uint64_t seed = 1; connected < 300; ++seed) {
    ArcModel m = corpus_model(2 + static_cast<int>(seed % 59), seed);
    Graph g = build_circular_arc_graph(m);
    if (!is_connected(g)) continue;
    ++connected;
    CHECK(apsp_circular_arc(m) == bfs_apsp(g));
  }
}

TEST_CASE("CI generator and properness") {
  CIParams p{4, 1, Rational(1, 4)};
  auto raw = ci_raw_arcs(p);
  REQUIRE(raw.size() == 8);
  CHECK(raw[0].h == 0);
  CHECK(raw[0].t == Rational(9, 4));
  CanonicalArcs ci = generate_ci(p);
  CHECK(ci.model.size() == 8);
  CHECK(is_proper(ci.model));
  CHECK_THROWS_AS(generate_ci({4, 1, Rational(1)}), Error);
  CHECK_THROWS_AS(generate_ci({4, 1, Rational(1, 2)}), Error);
  CHECK_THROWS_AS(generate_ci({4, 4, Rational(1, 4)}), Error);
  CHECK_THROWS_AS(generate_ci({4, 1, Rational(0)}), Error);
  for (int n = 2; n <= 9; ++n) {
    for (int k = 1; k < n; ++k) CHECK(is_proper(generate_ci({n, k, Rational(1, 3)}).model));
  }

  CHECK_FALSE(is_proper(arcs({{1, 4}, {2, 3}})));
  CHECK(is_proper(arcs({{1, 4}, {3, 6}, {5, 2}})));
}
