#include "isect/trapezoid.hpp"

#include "isect/error.hpp"

#include <algorithm>
#include <string>

namespace isect {
namespace {

void require_permutation(std::vector<int> values, int range, const char* what) {
  std::sort(values.begin(), values.end());
  for (int k = 0; k < static_cast<int>(values.size()); ++k) {
    if (values[k] != k + 1 || static_cast<int>(values.size()) != range) {
      throw Error(Errc::MalformedModel,
                  std::string(what) + " coordinates must be a permutation of 1.." +
                      std::to_string(range));
    }
  }
}

void require_right_order(const std::vector<Trapezoid>& items) {
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (items[i - 1].b >= items[i].b) {
      throw Error(Errc::MalformedModel, "trapezoids must be indexed by increasing b (item " +
                                            std::to_string(i + 1) + ")");
    }
  }
}

}  // namespace

TrapezoidModel::TrapezoidModel(std::vector<Trapezoid> items) : items_(std::move(items)) {
  const int n = size();
  std::vector<int> top, bottom;
  for (int i = 0; i < n; ++i) {
    const Trapezoid& t = items_[i];
    if (t.a >= t.b || t.c >= t.d) {
      throw Error(Errc::MalformedModel, "trapezoid " + std::to_string(i + 1) + " needs a < b and c < d");
    }
    top.insert(top.end(), {t.a, t.b});
    bottom.insert(bottom.end(), {t.c, t.d});
  }
  require_permutation(top, 2 * n, "top");
  require_permutation(bottom, 2 * n, "bottom");
  require_right_order(items_);
}

TrapezoidModel TrapezoidModel::lines(std::span<const std::pair<int, int>> top_bottom) {
  TrapezoidModel m;
  m.lines_ = true;
  std::vector<int> top, bottom;
  for (auto [t, b] : top_bottom) {
    m.items_.push_back({t, t, b, b});
    top.push_back(t);
    bottom.push_back(b);
  }
  require_permutation(top, m.size(), "top");
  require_permutation(bottom, m.size(), "bottom");
  require_right_order(m.items_);
  return m;
}

TrapezoidModel TrapezoidModel::from_permutation(const Permutation& p) {
  std::vector<std::pair<int, int>> top_bottom;
  for (Vertex v = 1; v <= p.size(); ++v) top_bottom.emplace_back(v, p.inv(v));
  return lines(top_bottom);
}

bool trapezoids_adjacent(const Trapezoid& x, const Trapezoid& y) {
  bool x_left = x.b < y.a && x.d < y.c;
  bool y_left = y.b < x.a && y.d < x.c;
  return !(x_left || y_left);
}

Graph build_trapezoid_graph(const TrapezoidModel& m) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= m.size(); ++u) {
    for (Vertex v = u + 1; v <= m.size(); ++v) {
      if (trapezoids_adjacent(m[u], m[v])) edges.emplace_back(u, v);
    }
  }
  return Graph(m.size(), std::move(edges));
}

std::vector<Segment> to_segment_rep(const TrapezoidModel& m) {
  std::vector<Segment> out;
  for (const auto& t : m.items()) out.push_back({{t.a, t.c}, {t.b, t.d}});
  return out;
}

bool segments_joint(const Segment& s, const Segment& t) {
  auto below_left = [](Point2 u, Point2 v) { return u.x < v.x && u.y < v.y; };
  return !(below_left(s.q, t.p) || below_left(t.q, s.p));
}

std::vector<Box> to_box_rep(const TrapezoidModel& m) {
  std::vector<Box> out;
  for (const auto& t : m.items()) out.push_back({{t.a, t.c}, {t.b, t.d}});
  return out;
}

bool boxes_incomparable(const Box& s, const Box& t) {
  auto dominated = [](Point2 u, Point2 v) { return u.x < v.x && u.y < v.y; };
  return !dominated(s.upper, t.lower) && !dominated(t.upper, s.lower);
}

PermutationDiagram to_permutation_diagram(const TrapezoidModel& m) {
  const int n = m.size();
  PermutationDiagram out;
  if (m.is_lines()) {
    std::vector<int> seq(n);
    for (const auto& t : m.items()) {
      seq[t.c - 1] = t.a;
      out.pairing.emplace_back(t.a, t.a);
    }
    out.lines = Permutation(std::move(seq));
    return out;
  }
  std::vector<int> seq(2 * n);
  for (const auto& t : m.items()) {
    seq[t.c - 1] = t.a;
    seq[t.d - 1] = t.b;
    out.pairing.emplace_back(t.a, t.b);
  }
  out.lines = Permutation(std::move(seq));
  return out;
}

bool diagram_adjacent(const PermutationDiagram& diagram, Vertex x, Vertex y) {
  const Permutation& lines = diagram.lines;
  auto [xl, xr] = diagram.pairing[x - 1];
  auto [yl, yr] = diagram.pairing[y - 1];
  auto crosses = [&](int s, int t) { return (s - t) * (lines.inv(s) - lines.inv(t)) < 0; };
  for (int s : {xl, xr}) {
    for (int t : {yl, yr}) {
      if (crosses(s, t)) return true;
    }
  }
  // Without crossings the four lines keep their top order on the bottom, so
  // the pair is separated iff one vertex's lines all precede the other's.
  return !(std::max(xl, xr) < std::min(yl, yr) || std::max(yl, yr) < std::min(xl, xr));
}

bool check_cocomparability_order(const Graph& g, std::span<const Vertex> order) {
  const int n = g.order();
  std::vector<bool> seen(n + 1, false);
  if (static_cast<int>(order.size()) != n) throw Error(Errc::NotAPermutation, "order has wrong length");
  for (Vertex v : order) {
    if (!g.contains(v) || seen[v]) throw Error(Errc::NotAPermutation, "order is not a permutation");
    seen[v] = true;
  }
  for (int i = 0; i < n; ++i) {
    for (int k = i + 2; k < n; ++k) {
      if (!g.has_edge(order[i], order[k])) continue;
      for (int j = i + 1; j < k; ++j) {
        if (!g.has_edge(order[i], order[j]) && !g.has_edge(order[j], order[k])) return false;
      }
    }
  }
  return true;
}

}  // namespace isect
