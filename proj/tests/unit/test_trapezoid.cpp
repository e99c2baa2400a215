#include "helpers.hpp"

#include "isect/chordal.hpp"
#include "isect/error.hpp"
#include "isect/trapezoid.hpp"

#include <doctest.h>

#include <numeric>

using namespace isect;
using namespace isect::test;

namespace {

TrapezoidModel corpus_model(int n, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.kind = ModelKind::Trapezoid;
  spec.n = n;
  spec.seed = seed;
  return std::get<TrapezoidModel>(generate_model(spec).model);
}

std::vector<Vertex> index_order(int n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  return order;
}

}  // namespace

TEST_CASE("trapezoids_adjacent") {
  CHECK_FALSE(trapezoids_adjacent({1, 2, 1, 2}, {3, 4, 3, 4}));
  CHECK_FALSE(trapezoids_adjacent({3, 4, 3, 4}, {1, 2, 1, 2}));
  CHECK(trapezoids_adjacent({1, 3, 2, 4}, {2, 4, 1, 3}));
  CHECK(trapezoids_adjacent({1, 4, 1, 4}, {2, 3, 2, 3}));
  // Left of on the top line only.
  CHECK(trapezoids_adjacent({1, 2, 3, 4}, {3, 4, 1, 2}));
}

TEST_CASE("model validation") {
  CHECK_NOTHROW(TrapezoidModel({{1, 2, 1, 2}, {3, 4, 3, 4}}));
  CHECK_THROWS_AS(TrapezoidModel({{3, 4, 3, 4}, {1, 2, 1, 2}}), Error);
  CHECK_THROWS_AS(TrapezoidModel({{1, 2, 1, 2}, {2, 4, 3, 4}}), Error);
  CHECK_THROWS_AS(TrapezoidModel({{2, 1, 1, 2}, {3, 4, 3, 4}}), Error);
  CHECK_THROWS_AS(TrapezoidModel({{1, 2, 1, 5}, {3, 4, 3, 4}}), Error);
}

TEST_CASE("build_trapezoid_graph") {
  CHECK(build_trapezoid_graph(TrapezoidModel({{1, 2, 1, 2}, {3, 4, 3, 4}, {5, 6, 5, 6}})).size() == 0);
  CHECK(build_trapezoid_graph(TrapezoidModel({{2, 3, 2, 3}, {1, 4, 1, 4}})) == complete_graph(2));

  GeneratorSpec spec;
  spec.kind = ModelKind::Permutation;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    spec.n = 1 + static_cast<int>(seed % 30);
    spec.seed = seed;
    const auto p = std::get<Permutation>(generate_model(spec).model);
    TrapezoidModel m = TrapezoidModel::from_permutation(p);
    CHECK(m.is_lines());
    CHECK(build_trapezoid_graph(m) == build_permutation_graph(p));
  }
}

TEST_CASE("four-way agreement on the corpus") {
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    TrapezoidModel m = corpus_model(1 + static_cast<int>(seed % 100), seed);
    Graph g = build_trapezoid_graph(m);
    auto segs = to_segment_rep(m);
    auto boxes = to_box_rep(m);
    auto diagram = to_permutation_diagram(m);
    bool agree = true;
    for (Vertex x = 1; x <= m.size(); ++x) {
      const auto& s = segs[x - 1];
      if (!(s.p.x < s.q.x && s.p.y < s.q.y)) agree = false;
      for (Vertex y = x + 1; y <= m.size(); ++y) {
        bool adj = g.has_edge(x, y);
        if (segments_joint(segs[x - 1], segs[y - 1]) != adj) agree = false;
        if (boxes_incomparable(boxes[x - 1], boxes[y - 1]) != adj) agree = false;
        if (diagram_adjacent(diagram, x, y) != adj) agree = false;
      }
    }
    CHECK(agree);
    CHECK(check_cocomparability_order(g, index_order(m.size())));
  }
}

TEST_CASE("representations of small pairs") {
  TrapezoidModel apart({{1, 2, 1, 2}, {3, 4, 3, 4}});
  auto segs = to_segment_rep(apart);
  CHECK_FALSE(segments_joint(segs[0], segs[1]));
  auto boxes = to_box_rep(apart);
  CHECK_FALSE(boxes_incomparable(boxes[0], boxes[1]));

  TrapezoidModel crossing({{1, 3, 2, 4}, {2, 4, 1, 3}});
  segs = to_segment_rep(crossing);
  CHECK(segments_joint(segs[0], segs[1]));
  boxes = to_box_rep(crossing);
  CHECK(boxes_incomparable(boxes[0], boxes[1]));

  TrapezoidModel nested({{2, 3, 2, 3}, {1, 4, 1, 4}});
  auto diagram = to_permutation_diagram(nested);
  CHECK(diagram_adjacent(diagram, 1, 2));
  // No line of one crosses a line of the other: each line is vertical.
  for (int top = 1; top <= 4; ++top) CHECK(diagram.lines.pi(top) == top);
}

TEST_CASE("permutation diagram of a lines model") {
  Permutation p({3, 1, 4, 2});
  auto diagram = to_permutation_diagram(TrapezoidModel::from_permutation(p));
  for (Vertex v = 1; v <= p.size(); ++v) {
    CHECK(diagram.pairing[v - 1].first == diagram.pairing[v - 1].second);
  }
  Graph g = build_permutation_graph(p);
  for (Vertex x = 1; x <= p.size(); ++x) {
    for (Vertex y = x + 1; y <= p.size(); ++y) CHECK(diagram_adjacent(diagram, x, y) == g.has_edge(x, y));
  }
}

TEST_CASE("check_cocomparability_order") {
  Graph c4 = cycle_graph(4);
  CHECK(check_cocomparability_order(c4, std::vector<Vertex>{1, 3, 2, 4}));
  CHECK(check_cocomparability_order(Graph(5, {}), std::vector<Vertex>{5, 2, 4, 1, 3}));
  // An isolated vertex placed between the ends of an edge breaks the rule.
  Graph g(3, {{1, 3}});
  CHECK_FALSE(check_cocomparability_order(g, std::vector<Vertex>{1, 2, 3}));
  CHECK(check_cocomparability_order(g, std::vector<Vertex>{2, 1, 3}));
}

TEST_CASE("trapezoid graphs are weakly chordal") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    TrapezoidModel m = corpus_model(1 + static_cast<int>(seed % 9), seed);
    CHECK(is_weakly_chordal_bruteforce(build_trapezoid_graph(m)));
  }
}
