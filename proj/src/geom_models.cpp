#include "isect/geom_models.hpp"

#include "isect/error.hpp"

#include <boost/integer/extended_euclidean.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

namespace isect {

void validate(const DottedInterval& x) {
  if (x.s < 1 || x.t < x.s || x.d < 1 || (x.t - x.s) % x.d != 0) {
    throw Error(Errc::MalformedModel, "dotted interval (" + std::to_string(x.s) + "," +
                                          std::to_string(x.t) + "," + std::to_string(x.d) +
                                          ") needs 1 <= s <= t, d >= 1 and d | t - s");
  }
}

bool dotted_intersect(const DottedInterval& x, const DottedInterval& y) {
  validate(x);
  validate(y);
  const std::int64_t lo = std::max(x.s, y.s), hi = std::min(x.t, y.t);
  if (lo > hi) return false;
  // z = x.s + x.d * k with x.d * k = y.s - x.s (mod y.d).
  auto [g, inv, unused] = boost::integer::extended_euclidean(x.d, y.d);
  (void)unused;
  std::int64_t diff = y.s - x.s;
  if (diff % g != 0) return false;
  const __int128 mod = y.d / g;
  __int128 k = (static_cast<__int128>(diff / g) * inv) % mod;
  if (k < 0) k += mod;
  const __int128 period = static_cast<__int128>(x.d) * mod;
  __int128 z = x.s + static_cast<__int128>(x.d) * k;
  // Smallest solution >= lo.
  if (z < lo) z += ((lo - z) + period - 1) / period * period;
  else z -= (z - lo) / period * period;
  return z <= hi;
}

bool dotted_intersect_enumerate(const DottedInterval& x, const DottedInterval& y) {
  validate(x);
  validate(y);
  const DottedInterval& walk = (x.t - x.s) / x.d <= (y.t - y.s) / y.d ? x : y;
  const DottedInterval& other = &walk == &x ? y : x;
  for (std::int64_t z = walk.s; z <= walk.t; z += walk.d) {
    if (z >= other.s && z <= other.t && (z - other.s) % other.d == 0) return true;
  }
  return false;
}

DottedGraph build_ddig(std::span<const DottedInterval> items) {
  DottedGraph out;
  std::vector<Edge> edges;
  const int n = static_cast<int>(items.size());
  for (int i = 0; i < n; ++i) {
    validate(items[i]);
    out.jump_bound = std::max(out.jump_bound, items[i].d);
    for (int j = i + 1; j < n; ++j) {
      if (dotted_intersect(items[i], items[j])) edges.emplace_back(i + 1, j + 1);
    }
  }
  out.graph = Graph(n, std::move(edges));
  return out;
}

void validate(const ToleranceRep& rep) {
  if (rep.intervals.size() != rep.tolerances.size()) {
    throw Error(Errc::MalformedModel, "one tolerance per interval is required");
  }
  for (std::size_t i = 0; i < rep.intervals.size(); ++i) {
    if (rep.intervals[i].b < rep.intervals[i].a) {
      throw Error(Errc::MalformedModel, "interval " + std::to_string(i + 1) + " has b < a");
    }
    if (!rep.tolerances[i].infinite && rep.tolerances[i].value <= 0) {
      throw Error(Errc::MalformedModel, "tolerance " + std::to_string(i + 1) + " must be positive");
    }
  }
}

Rational overlap_length(const Interval& x, const Interval& y) {
  Rational len = std::min(x.b, y.b) - std::max(x.a, y.a);
  return len > 0 ? len : Rational(0);
}

Graph build_tolerance_graph(const ToleranceRep& rep) {
  validate(rep);
  const int n = static_cast<int>(rep.intervals.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Tolerance& ti = rep.tolerances[i];
      const Tolerance& tj = rep.tolerances[j];
      if (ti.infinite && tj.infinite) continue;
      Rational need = ti.infinite ? tj.value : tj.infinite ? ti.value : std::min(ti.value, tj.value);
      if (overlap_length(rep.intervals[i], rep.intervals[j]) >= need) edges.emplace_back(i + 1, j + 1);
    }
  }
  return Graph(n, std::move(edges));
}

ToleranceClass classify_tolerance_rep(const ToleranceRep& rep) {
  validate(rep);
  ToleranceClass out{true, true};
  std::set<Rational> seen_values;
  int infinite_count = 0;
  for (std::size_t i = 0; i < rep.intervals.size(); ++i) {
    const Tolerance& t = rep.tolerances[i];
    Rational len = rep.intervals[i].b - rep.intervals[i].a;
    if (t.infinite || t.value > len) out.bounded = false;
    if (!t.infinite && t.value > len) out.regular = false;
    if (t.infinite) {
      if (++infinite_count > 1) out.regular = false;
    } else if (!seen_values.insert(t.value).second) {
      out.regular = false;
    }
  }
  std::map<Rational, std::set<std::size_t>> owners;
  for (std::size_t i = 0; i < rep.intervals.size(); ++i) {
    owners[rep.intervals[i].a].insert(i);
    owners[rep.intervals[i].b].insert(i);
  }
  for (const auto& [x, who] : owners) {
    if (who.size() > 1) out.regular = false;
  }
  return out;
}

namespace {

void validate_chords(const ChordModel& m) {
  std::set<int> seen;
  for (std::size_t i = 0; i < m.chords.size(); ++i) {
    for (int x : {m.chords[i].first, m.chords[i].second}) {
      if (!seen.insert(x).second) {
        throw Error(Errc::SharedEndpoint,
                    "position " + std::to_string(x) + " used twice (chord " + std::to_string(i + 1) + ")");
      }
    }
  }
}

}  // namespace

Graph build_circle_graph(const ChordModel& m) {
  validate_chords(m);
  const int n = static_cast<int>(m.chords.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    auto [x1, y1] = std::minmax(m.chords[i].first, m.chords[i].second);
    for (int j = i + 1; j < n; ++j) {
      auto [x2, y2] = std::minmax(m.chords[j].first, m.chords[j].second);
      if ((x1 < x2 && x2 < y1 && y1 < y2) || (x2 < x1 && x1 < y2 && y2 < y1)) edges.emplace_back(i + 1, j + 1);
    }
  }
  return Graph(n, std::move(edges));
}

Graph circle_graph_by_segments(const ChordModel& m) {
  validate_chords(m);
  std::vector<int> positions;
  for (auto [x, y] : m.chords) positions.insert(positions.end(), {x, y});
  std::sort(positions.begin(), positions.end());
  struct P {
    std::int64_t x, y;
  };
  auto place = [&](int pos) {
    std::int64_t r = std::lower_bound(positions.begin(), positions.end(), pos) - positions.begin();
    return P{r, r * r};
  };
  auto orient = [](P a, P b, P c) {
    std::int64_t v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return (v > 0) - (v < 0);
  };
  const int n = static_cast<int>(m.chords.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    P a = place(m.chords[i].first), b = place(m.chords[i].second);
    for (int j = i + 1; j < n; ++j) {
      P c = place(m.chords[j].first), d = place(m.chords[j].second);
      // Points are in strictly convex position, so no three are collinear
      // and proper crossing is the only way to meet.
      if (orient(a, b, c) != orient(a, b, d) && orient(c, d, a) != orient(c, d, b)) {
        edges.emplace_back(i + 1, j + 1);
      }
    }
  }
  return Graph(n, std::move(edges));
}

Graph build_unit_disk_graph(const DiskPoints& p) {
  if (p.r <= 0) throw Error(Errc::MalformedModel, "radius must be positive");
  const int n = static_cast<int>(p.points.size());
  const Rational r2 = p.r * p.r;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Rational dx = p.points[i].first - p.points[j].first;
      Rational dy = p.points[i].second - p.points[j].second;
      if (dx * dx + dy * dy <= r2) edges.emplace_back(i + 1, j + 1);
    }
  }
  return Graph(n, std::move(edges));
}

void validate(const KBoxModel& m) {
  if (m.k < 1) throw Error(Errc::DimensionMismatch, "k must be at least 1");
  for (std::size_t v = 0; v < m.boxes.size(); ++v) {
    if (static_cast<int>(m.boxes[v].size()) != m.k) {
      throw Error(Errc::DimensionMismatch, "box " + std::to_string(v + 1) + " has " +
                                               std::to_string(m.boxes[v].size()) + " intervals, expected " +
                                               std::to_string(m.k));
    }
    for (const auto& iv : m.boxes[v]) {
      if (iv.b < iv.a) throw Error(Errc::MalformedModel, "box " + std::to_string(v + 1) + " has an empty side");
    }
  }
}

Graph build_box_graph(const KBoxModel& m) {
  validate(m);
  const int n = static_cast<int>(m.boxes.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool meet = true;
      for (int c = 0; c < m.k && meet; ++c) {
        const Interval& x = m.boxes[i][c];
        const Interval& y = m.boxes[j][c];
        meet = std::max(x.a, y.a) <= std::min(x.b, y.b);
      }
      if (meet) edges.emplace_back(i + 1, j + 1);
    }
  }
  return Graph(n, std::move(edges));
}

std::vector<Graph> coordinate_graphs(const KBoxModel& m) {
  validate(m);
  std::vector<Graph> out;
  for (int c = 0; c < m.k; ++c) {
    std::vector<Interval> side;
    for (const auto& box : m.boxes) side.push_back(box[c]);
    out.push_back(closed_intersection_graph(side));
  }
  return out;
}

Graph edge_intersection(std::span<const Graph> graphs) {
  if (graphs.empty()) return Graph();
  std::vector<Edge> edges;
  for (const Edge& e : graphs[0].edges()) {
    if (std::all_of(graphs.begin() + 1, graphs.end(),
                    [&](const Graph& h) { return h.has_edge(e.first, e.second); })) {
      edges.push_back(e);
    }
  }
  return Graph(graphs[0].order(), std::move(edges));
}

bool verify_box_representation(const Graph& g, const KBoxModel& m) {
  Graph built = build_box_graph(m);
  auto sides = coordinate_graphs(m);
  if (!(edge_intersection(sides) == built)) {
    throw Error(Errc::ValidationError, "box graph differs from the intersection of its coordinate graphs");
  }
  return g.order() == built.order() && g.edges() == built.edges();
}

std::optional<KBoxModel> find_box_representation(const Graph& g, int k, int max_coord, std::int64_t budget) {
  if (k < 1 || max_coord < 0) throw Error(Errc::BadParams, "need k >= 1 and max_coord >= 0");
  const int n = g.order();
  std::vector<Interval> options;
  for (int lo = 0; lo <= max_coord; ++lo) {
    for (int hi = lo; hi <= max_coord; ++hi) options.push_back({Rational(lo), Rational(hi)});
  }
  KBoxModel m{k, std::vector<std::vector<Interval>>(n, std::vector<Interval>(k))};
  std::vector<std::size_t> choice(static_cast<std::size_t>(n) * k, 0);
  std::int64_t placed = 0;
  auto meets = [&](int u, int v) {
    for (int c = 0; c < k; ++c) {
      const Interval& x = m.boxes[u][c];
      const Interval& y = m.boxes[v][c];
      if (std::max(x.a, y.a) > std::min(x.b, y.b)) return false;
    }
    return true;
  };
  // Depth-first over (vertex, coordinate) slots; a vertex is checked against
  // all earlier vertices once its last coordinate is set.
  std::function<bool(int)> place = [&](int slot) -> bool {
    if (slot == n * k) return true;
    int v = slot / k, c = slot % k;
    for (const Interval& iv : options) {
      if (++placed > budget) throw Error(Errc::NodeBudgetExceeded, "box search budget exhausted");
      m.boxes[v][c] = iv;
      if (c == k - 1) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) ok = meets(u, v) == g.has_edge(u + 1, v + 1);
        if (!ok) continue;
      }
      if (place(slot + 1)) return true;
    }
    return false;
  };
  if (place(0)) return m;
  return std::nullopt;
}

LineGraph line_graph(const Graph& g) {
  if (g.size() == 0) throw Error(Errc::EmptyGraph, "line graph needs at least one edge");
  LineGraph out;
  out.labels = g.edges();
  std::vector<std::vector<Vertex>> incident(g.order() + 1);
  for (std::size_t i = 0; i < out.labels.size(); ++i) {
    incident[out.labels[i].first].push_back(static_cast<Vertex>(i) + 1);
    incident[out.labels[i].second].push_back(static_cast<Vertex>(i) + 1);
  }
  std::vector<Edge> edges;
  for (const auto& list : incident) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) edges.emplace_back(list[a], list[b]);
    }
  }
  out.graph = Graph(static_cast<int>(out.labels.size()), std::move(edges));
  return out;
}

std::vector<Graph> iterate_line_graph(const Graph& g, int steps, int max_vertices) {
  if (steps < 1) throw Error(Errc::BadParams, "steps must be at least 1");
  std::vector<Graph> out;
  for (int i = 0; i < steps; ++i) {
    const Graph& current = out.empty() ? g : out.back();
    if (current.size() == 0) break;
    if (static_cast<long long>(current.size()) > max_vertices) {
      throw Error(Errc::SizeBudgetExceeded, "next line graph would have " +
                                                std::to_string(current.size()) + " vertices");
    }
    Graph next = line_graph(current).graph;
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace isect
