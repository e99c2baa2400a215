#pragma once

#include "isect/graph.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace isect {

/// Closed interval [a, b].
struct Interval {
  Rational a;
  Rational b;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A sequence of closed intervals with a < b; vertex v is intervals()[v-1].
class IntervalModel {
 public:
  IntervalModel() = default;
  explicit IntervalModel(std::vector<Interval> intervals);

  int size() const noexcept { return static_cast<int>(intervals_.size()); }
  const Interval& operator[](Vertex v) const { return intervals_[static_cast<std::size_t>(v) - 1]; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }

  /// All 2n endpoints pairwise distinct and right endpoints increasing with
  /// the index (the IG ordering).
  bool is_strict() const;

  friend bool operator==(const IntervalModel&, const IntervalModel&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// Edge (i, j) iff max(a_i, a_j) <= min(b_i, b_j).
Graph build_interval_graph(const IntervalModel& m);

/// Same closed-intersection rule, but point intervals (a == b) are allowed.
/// Runs in O(n log n + m) by a left-to-right sweep.
Graph closed_intersection_graph(std::span<const Interval> intervals);

struct NormalizedModel {
  IntervalModel model;          // strict, endpoints exactly 1..2n
  std::vector<Vertex> source;   // source[v-1] = input vertex that became v
};

/// Relabels endpoints to 1..2n (ties: left endpoints before right ones, then
/// by index) and re-indexes by increasing right endpoint. The graph of the
/// result is the input's graph under the `source` relabeling.
NormalizedModel normalize(const IntervalModel& m);

/// Interval tree of a connected strict model: parent(u) = H(u), the highest
/// numbered neighbour of u, rooted at n.
struct IntervalTree {
  int n = 0;
  std::vector<Vertex> high;   // H(v), index v; H(n) = n
  std::vector<Vertex> low;    // L(v), lowest numbered neighbour (or v)
  std::vector<int> level;     // tree distance to n
  int height = 0;
  std::vector<std::pair<Vertex, Vertex>> levels;  // N_i = [first, second]
  std::vector<Vertex> main_path;                  // 1, H(1), ..., n
  std::vector<int> left_rank;   // endpoint ranks in 1..2n, index v
  std::vector<int> right_rank;

  Vertex parent(Vertex u) const { return high[u]; }
  bool adjacent(Vertex u, Vertex v) const;
  Graph tree() const;
};

/// Throws NotStrict or DisconnectedGraph.
IntervalTree build_interval_tree(const IntervalModel& m);

int distance_query(const IntervalTree& t, Vertex u, Vertex v);
/// Variant taking adjacency from g, which must be the graph of t's model.
int distance_query(const IntervalTree& t, const Graph& g, Vertex u, Vertex v);

/// Distances from `source` to every vertex in O(n); entry v-1.
std::vector<int> distances_from(const IntervalTree& t, Vertex source);

DistanceMatrix apsp_interval(const IntervalModel& m);

struct DiameterCenter {
  int diameter = 0;
  int radius = 0;
  std::vector<Vertex> center;
  std::vector<int> eccentricity;  // index v-1
};
DiameterCenter diameter_and_center(const IntervalModel& m);

struct SpannerTree {
  Graph tree;
  Rational stretch{3};
  std::vector<Vertex> parent;     // index v, parent[n] = n
  std::vector<Vertex> main_path;  // w*_h = 1, ..., w*_0 = n
};
SpannerTree tree_3_spanner(const IntervalModel& m);

/// Left-endpoint sweep, lowest free colour; colours start at 0, entry v-1.
std::vector<int> greedy_color(const IntervalModel& m);

/// Maximum-weight independent set (weights empty means all 1), ties broken
/// by `set_precedes`. Returns the sorted vertex set.
std::vector<Vertex> mwis_interval(const IntervalModel& m, std::span<const Rational> weights = {});

/// Maximal cliques in left-to-right sweep order, so the cliques containing
/// any given vertex are consecutive in the list.
std::vector<std::vector<Vertex>> maximal_cliques_interval(const IntervalModel& m);

/// A row order making every column's ones contiguous, found by trying all
/// row permutations (at most 8 rows). Returns 0-based row indices.
std::optional<std::vector<int>> has_consecutive_ones(const std::vector<std::vector<int>>& matrix);

}  // namespace isect
