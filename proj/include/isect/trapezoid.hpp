#pragma once

#include "isect/graph.hpp"
#include "isect/permutation.hpp"

#include <span>
#include <utility>
#include <vector>

namespace isect {

/// Trapezoid [a, b; c, d]: [a, b] on the top line, [c, d] on the bottom one.
struct Trapezoid {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;

  friend bool operator==(const Trapezoid&, const Trapezoid&) = default;
};

/// Trapezoids indexed by increasing b. A genuine model has a < b, c < d and
/// each line's 2n coordinates forming a permutation of 1..2n. A lines-mode
/// model has a = b, c = d and each line's n coordinates forming a
/// permutation of 1..n.
class TrapezoidModel {
 public:
  TrapezoidModel() = default;
  explicit TrapezoidModel(std::vector<Trapezoid> items);
  /// Lines mode from (top, bottom) pairs.
  static TrapezoidModel lines(std::span<const std::pair<int, int>> top_bottom);
  /// Lines mode realizing a permutation graph: vertex v runs from top v to
  /// bottom inv(v).
  static TrapezoidModel from_permutation(const Permutation& p);

  int size() const noexcept { return static_cast<int>(items_.size()); }
  bool is_lines() const noexcept { return lines_; }
  const Trapezoid& operator[](Vertex v) const { return items_[static_cast<std::size_t>(v) - 1]; }
  const std::vector<Trapezoid>& items() const noexcept { return items_; }

 private:
  std::vector<Trapezoid> items_;
  bool lines_ = false;
};

/// False iff one trapezoid lies entirely left of the other on both lines.
bool trapezoids_adjacent(const Trapezoid& x, const Trapezoid& y);
Graph build_trapezoid_graph(const TrapezoidModel& m);

struct Point2 {
  int x = 0;
  int y = 0;
};

/// Segment from p = (a, c) to q = (b, d).
struct Segment {
  Point2 p;
  Point2 q;
};
std::vector<Segment> to_segment_rep(const TrapezoidModel& m);
/// Disjoint iff one segment's q lies strictly below-left of the other's p.
bool segments_joint(const Segment& s, const Segment& t);

/// Box [a, b] x [c, d] with lower corner (a, c) and upper corner (b, d).
struct Box {
  Point2 lower;
  Point2 upper;
};
std::vector<Box> to_box_rep(const TrapezoidModel& m);
/// Comparable in the dominance order iff one box's upper corner is strictly
/// dominated by the other's lower corner.
bool boxes_incomparable(const Box& s, const Box& t);

/// Each vertex split into its left line (a -> c) and right line (b -> d).
/// `lines` maps a bottom coordinate to the top coordinate of the line that
/// ends there; `pairing[v-1]` holds the top coordinates of v's two lines
/// (equal in lines mode).
struct PermutationDiagram {
  Permutation lines;
  std::vector<std::pair<int, int>> pairing;
};
PermutationDiagram to_permutation_diagram(const TrapezoidModel& m);

/// Adjacent iff some line of x crosses some line of y, or the lines of x and
/// y interleave or nest instead of one pair lying wholly left of the other.
bool diagram_adjacent(const PermutationDiagram& diagram, Vertex x, Vertex y);

/// For positions i < j < k in `order`: an edge between the i-th and k-th
/// vertices forces an edge from the j-th to one of them.
bool check_cocomparability_order(const Graph& g, std::span<const Vertex> order);

}  // namespace isect
