#pragma once

#include "isect/graph.hpp"
#include "isect/interval.hpp"

#include <span>
#include <vector>

namespace isect {

/// Arc running clockwise from head h to tail t on a circle of positions
/// 1..2n. It wraps past position 2n when h > t.
struct Arc {
  int h = 0;
  int t = 0;

  bool wraps() const noexcept { return h > t; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Arcs whose 2n endpoints are exactly the integers 1..2n.
class ArcModel {
 public:
  ArcModel() = default;
  explicit ArcModel(std::vector<Arc> arcs);

  int size() const noexcept { return static_cast<int>(arcs_.size()); }
  int positions() const noexcept { return 2 * size(); }
  const Arc& operator[](Vertex v) const { return arcs_[static_cast<std::size_t>(v) - 1]; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  /// Position 1 is the head of arc 1 and heads increase with the index.
  bool is_canonical() const;
  bool covers_circle() const;

  friend bool operator==(const ArcModel&, const ArcModel&) = default;

 private:
  std::vector<Arc> arcs_;
};

/// Arc with arbitrary distinct rational coordinates; it wraps when h > t.
struct RawArc {
  Rational h;
  Rational t;
};

struct CanonicalArcs {
  ArcModel model;
  std::vector<Vertex> source;  // source[v-1] = input arc that became v
};

/// Relabels coordinates to 1..2n keeping the cyclic order, rotates so the
/// smallest head becomes position 1 and re-indexes by increasing head.
/// Throws SharedEndpoint.
CanonicalArcs canonicalize(std::span<const RawArc> arcs);
CanonicalArcs canonicalize(const ArcModel& m);

bool arc_contains_point(const Arc& a, int j);
bool arcs_intersect(const Arc& x, const Arc& y);

Graph build_circular_arc_graph(const ArcModel& m);

struct CutSplit {
  int cut_point = 0;               // t_n
  std::vector<Vertex> backward;    // S_B: arcs containing the cut point
  std::vector<Vertex> forward;     // S_F
};
CutSplit split_at_cut(const ArcModel& m);

struct SubModel {
  IntervalModel model;
  std::vector<Vertex> source;  // increasing; source[v-1] = arc of vertex v
};

/// Interval model of the arcs disjoint from arc i, unrolled from h_i.
SubModel delete_closed_neighborhood(const ArcModel& m, Vertex i);

/// Interval model of all arcs, cut at an uncovered point. Throws BadParams
/// when the arcs cover the circle.
IntervalModel straighten(const ArcModel& m);

std::vector<Vertex> mwis_circular_arc(const ArcModel& m, std::span<const Rational> weights = {});

/// Vertex 1 of the result is the sentinel interval I_0; vertex i + 1 is arc
/// i. Positions are shifted so that t_n becomes 2n; arcs crossing the cut
/// are unrolled past 2n and I_0 = [0, r] repeats their wrapped part, with r
/// also beyond the first left endpoint.
IntervalModel arcs_to_intervals_with_sentinel(const ArcModel& m);

/// Exact all-pairs distances; throws DisconnectedGraph.
DistanceMatrix apsp_circular_arc(const ArcModel& m);

struct CIParams {
  int n = 0;
  int k = 0;
  Rational eps;  // in units of pi/n; 0 < eps < 1/2
};
/// The 2n arcs a_i = (2i, 2(i+k) + eps), b_i = (2i+1, 2(i+k) + 1 - eps),
/// i = 0..n-1, in units of pi/n reduced modulo 2n, listed a_0..a_{n-1}
/// then b_0..b_{n-1}. Throws BadParams.
std::vector<RawArc> ci_raw_arcs(const CIParams& p);
CanonicalArcs generate_ci(const CIParams& p);

/// True iff no arc's span lies inside a different arc's span.
bool is_proper(const ArcModel& m);

}  // namespace isect
