#pragma once

#include "isect/graph.hpp"
#include "isect/interval.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace isect {

// ---- dotted intervals ----

/// Arithmetic progression {s, s + d, ..., t}; needs 1 <= s <= t, d >= 1 and
/// d dividing t - s.
struct DottedInterval {
  std::int64_t s = 1;
  std::int64_t t = 1;
  std::int64_t d = 1;
};

/// Throws MalformedModel.
void validate(const DottedInterval& x);

/// Solves the two congruences and looks for a solution inside the common
/// range.
bool dotted_intersect(const DottedInterval& x, const DottedInterval& y);
/// Reference check by walking the shorter progression.
bool dotted_intersect_enumerate(const DottedInterval& x, const DottedInterval& y);

struct DottedGraph {
  Graph graph;
  std::int64_t jump_bound = 0;  // largest jump
};
DottedGraph build_ddig(std::span<const DottedInterval> items);

// ---- tolerance ----

struct Tolerance {
  Rational value;
  bool infinite = false;

  static Tolerance inf() { return {Rational(0), true}; }
};

/// Closed intervals (points allowed) with positive tolerances.
struct ToleranceRep {
  std::vector<Interval> intervals;
  std::vector<Tolerance> tolerances;
};

/// Throws MalformedModel.
void validate(const ToleranceRep& rep);

/// Length of the intersection, 0 when empty or a point.
Rational overlap_length(const Interval& x, const Interval& y);

/// Edge iff the overlap length reaches the smaller tolerance.
Graph build_tolerance_graph(const ToleranceRep& rep);

struct ToleranceClass {
  bool bounded = false;
  bool regular = false;
};
ToleranceClass classify_tolerance_rep(const ToleranceRep& rep);

// ---- circle graphs ----

/// Chords between distinct integer positions; all endpoints distinct.
struct ChordModel {
  std::vector<std::pair<int, int>> chords;
};

/// Edge iff the endpoints interleave. Throws SharedEndpoint.
Graph build_circle_graph(const ChordModel& m);

/// Geometric check: the positions are placed in order on the parabola
/// y = x^2 (a convex curve, so cyclic order is kept) and chords are tested
/// with exact orientation predicates.
Graph circle_graph_by_segments(const ChordModel& m);

// ---- unit disk graphs ----

struct DiskPoints {
  std::vector<std::pair<Rational, Rational>> points;
  Rational r{1};
};

/// Edge iff squared distance <= r^2.
Graph build_unit_disk_graph(const DiskPoints& p);

// ---- boxes ----

/// boxes[v-1][i] is vertex v's closed interval in coordinate i.
struct KBoxModel {
  int k = 1;
  std::vector<std::vector<Interval>> boxes;
};

/// Throws DimensionMismatch or MalformedModel.
void validate(const KBoxModel& m);

Graph build_box_graph(const KBoxModel& m);

/// The interval graph of each coordinate.
std::vector<Graph> coordinate_graphs(const KBoxModel& m);

/// Graph on the same vertices whose edges are in every input graph.
Graph edge_intersection(std::span<const Graph> graphs);

/// True iff g is the box graph of m. Also checks that the box graph is the
/// edge intersection of the coordinate graphs and throws ValidationError if
/// not.
bool verify_box_representation(const Graph& g, const KBoxModel& m);

/// Backtracking search over integer boxes with coordinates in
/// 0..max_coord. Throws NodeBudgetExceeded past `budget` placements.
std::optional<KBoxModel> find_box_representation(const Graph& g, int k, int max_coord,
                                                 std::int64_t budget = 10'000'000);

// ---- line graphs ----

struct LineGraph {
  Graph graph;
  std::vector<Edge> labels;  // labels[i-1]: edge of g behind vertex i
};

/// Vertices are g's edges in lexicographic order. Throws EmptyGraph.
LineGraph line_graph(const Graph& g);

/// L(g), L(L(g)), ... for up to `steps` steps, stopping after the first
/// graph without edges. Throws SizeBudgetExceeded when an iterate would
/// have more than `max_vertices` vertices.
std::vector<Graph> iterate_line_graph(const Graph& g, int steps, int max_vertices = 5000);

}  // namespace isect
