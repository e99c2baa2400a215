#include "isect/interval.hpp"

#include "isect/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

namespace isect {
namespace {

struct Endpoint {
  Rational x;
  int kind;  // 0 = left, 1 = right
  Vertex v;
};

// Left endpoints sort before right ones at equal coordinates, which keeps
// touching intervals adjacent.
std::vector<Endpoint> sorted_endpoints(std::span<const Interval> intervals) {
  std::vector<Endpoint> ev;
  ev.reserve(intervals.size() * 2);
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    Vertex v = static_cast<Vertex>(i) + 1;
    ev.push_back({intervals[i].a, 0, v});
    ev.push_back({intervals[i].b, 1, v});
  }
  std::sort(ev.begin(), ev.end(), [](const Endpoint& p, const Endpoint& q) {
    if (p.x != q.x) return p.x < q.x;
    return std::tie(p.kind, p.v) < std::tie(q.kind, q.v);
  });
  return ev;
}

void require_strict(const IntervalModel& m) {
  if (!m.is_strict()) {
    throw Error(Errc::NotStrict,
                "model needs distinct endpoints and increasing right endpoints");
  }
}

// Shared core of the two distance_query overloads.
template <class Adjacent>
int tree_distance(const IntervalTree& t, Vertex u, Vertex v, Adjacent adjacent) {
  if (u == v) return 0;
  if (t.level[u] < t.level[v]) std::swap(u, v);
  int diff = t.level[u] - t.level[v];
  if (diff == 0) return adjacent(u, v) ? 1 : 2;
  Vertex z1 = u;
  while (t.level[z1] > t.level[v] + 1) z1 = t.high[z1];
  Vertex z2 = t.high[z1];
  if (adjacent(z1, v)) return diff;
  if (adjacent(z2, v)) return diff + 1;
  return diff + 2;
}

}  // namespace

IntervalModel::IntervalModel(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (!(intervals_[i].a < intervals_[i].b)) {
      throw Error(Errc::MalformedModel, "interval " + std::to_string(i + 1) + " = [" +
                                            to_string(intervals_[i].a) + ", " +
                                            to_string(intervals_[i].b) + "] needs a < b");
    }
  }
}

bool IntervalModel::is_strict() const {
  for (std::size_t i = 1; i < intervals_.size(); ++i) {
    if (!(intervals_[i - 1].b < intervals_[i].b)) return false;
  }
  auto ev = sorted_endpoints(intervals_);
  for (std::size_t i = 1; i < ev.size(); ++i) {
    if (ev[i - 1].x == ev[i].x) return false;
  }
  return true;
}

Graph closed_intersection_graph(std::span<const Interval> intervals) {
  int n = static_cast<int>(intervals.size());
  for (int i = 0; i < n; ++i) {
    if (intervals[i].b < intervals[i].a) {
      throw Error(Errc::MalformedModel, "interval " + std::to_string(i + 1) + " has b < a");
    }
  }
  std::vector<Edge> edges;
  // Active intervals keyed by right endpoint; every interval still active
  // when a new one opens intersects it.
  std::set<std::pair<Rational, Vertex>> active;
  for (const auto& e : sorted_endpoints(intervals)) {
    if (e.kind == 1) {
      active.erase({e.x, e.v});
      continue;
    }
    for (const auto& [b, u] : active) edges.emplace_back(std::min(u, e.v), std::max(u, e.v));
    active.insert({intervals[e.v - 1].b, e.v});
  }
  return Graph(n, std::move(edges));
}

Graph build_interval_graph(const IntervalModel& m) { return closed_intersection_graph(m.intervals()); }

NormalizedModel normalize(const IntervalModel& m) {
  int n = m.size();
  std::vector<int> left(n + 1), right(n + 1);
  int rank = 0;
  for (const auto& e : sorted_endpoints(m.intervals())) (e.kind == 0 ? left : right)[e.v] = ++rank;
  NormalizedModel out;
  out.source.resize(n);
  std::iota(out.source.begin(), out.source.end(), 1);
  std::sort(out.source.begin(), out.source.end(),
            [&](Vertex x, Vertex y) { return right[x] < right[y]; });
  std::vector<Interval> intervals;
  intervals.reserve(n);
  for (Vertex v : out.source) intervals.push_back({Rational(left[v]), Rational(right[v])});
  out.model = IntervalModel(std::move(intervals));
  return out;
}

bool IntervalTree::adjacent(Vertex u, Vertex v) const {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return left_rank[v] < right_rank[u];
}

Graph IntervalTree::tree() const {
  std::vector<Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (Vertex u = 1; u < n; ++u) edges.emplace_back(u, high[u]);
  return Graph(n, std::move(edges));
}

IntervalTree build_interval_tree(const IntervalModel& m) {
  require_strict(m);
  const int n = m.size();
  if (n == 0) throw Error(Errc::DisconnectedGraph, "empty model has no interval tree");
  IntervalTree t;
  t.n = n;
  t.high.assign(n + 1, 0);
  t.low.assign(n + 1, 0);
  t.level.assign(n + 1, 0);
  t.left_rank.assign(n + 1, 0);
  t.right_rank.assign(n + 1, 0);
  int rank = 0;
  Vertex max_open = 0;  // highest index whose left endpoint has been passed
  int closed = 0;       // right endpoints passed; they belong to 1..closed
  for (const auto& e : sorted_endpoints(m.intervals())) {
    ++rank;
    if (e.kind == 0) {
      t.left_rank[e.v] = rank;
      t.low[e.v] = closed + 1;
      max_open = std::max(max_open, e.v);
    } else {
      t.right_rank[e.v] = rank;
      t.high[e.v] = max_open;
      ++closed;
    }
  }
  for (Vertex u = 1; u < n; ++u) {
    if (t.high[u] == u) {
      throw Error(Errc::DisconnectedGraph,
                  "interval graph is disconnected (no neighbour above vertex " +
                      std::to_string(u) + ")");
    }
  }
  for (Vertex u = n - 1; u >= 1; --u) t.level[u] = t.level[t.high[u]] + 1;
  t.height = t.level[1];
  t.levels.assign(t.height + 1, {n + 1, 0});
  for (Vertex u = 1; u <= n; ++u) {
    auto& [lo, hi] = t.levels[t.level[u]];
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  for (Vertex u = 1;; u = t.high[u]) {
    t.main_path.push_back(u);
    if (u == n) break;
  }
  return t;
}

int distance_query(const IntervalTree& t, Vertex u, Vertex v) {
  return tree_distance(t, u, v, [&](Vertex x, Vertex y) { return t.adjacent(x, y); });
}

int distance_query(const IntervalTree& t, const Graph& g, Vertex u, Vertex v) {
  if (g.order() != t.n) throw Error(Errc::BadParams, "graph and interval tree differ in size");
  return tree_distance(t, u, v, [&](Vertex x, Vertex y) { return g.has_edge(x, y); });
}

std::vector<int> distances_from(const IntervalTree& t, Vertex s) {
  const int n = t.n;
  const int ls = t.level[s];
  std::vector<Vertex> ancestor(ls + 1);  // ancestor[l]: s's ancestor at level l
  for (Vertex x = s; ; x = t.high[x]) {
    ancestor[t.level[x]] = x;
    if (x == n) break;
  }
  // below[v]: v's ancestor at level ls + 1, for v deeper than s.
  std::vector<Vertex> below(n + 1, 0);
  std::vector<int> dist(n);
  for (Vertex v = n; v >= 1; --v) {
    int lv = t.level[v];
    int d;
    if (v == s) {
      d = 0;
    } else if (lv == ls) {
      d = t.adjacent(s, v) ? 1 : 2;
    } else if (lv < ls) {
      Vertex z1 = ancestor[lv + 1];
      d = ls - lv + (t.adjacent(z1, v) ? 0 : t.adjacent(t.high[z1], v) ? 1 : 2);
    } else {
      below[v] = lv == ls + 1 ? v : below[t.high[v]];
      Vertex z1 = below[v];
      d = lv - ls + (t.adjacent(z1, s) ? 0 : t.adjacent(t.high[z1], s) ? 1 : 2);
    }
    dist[v - 1] = d;
  }
  return dist;
}

DistanceMatrix apsp_interval(const IntervalModel& m) {
  IntervalTree t = build_interval_tree(m);
  DistanceMatrix d(t.n);
  for (Vertex s = 1; s <= t.n; ++s) {
    auto row = distances_from(t, s);
    for (Vertex v = 1; v <= t.n; ++v) d.set(s, v, row[v - 1]);
  }
  return d;
}

DiameterCenter diameter_and_center(const IntervalModel& m) {
  IntervalTree t = build_interval_tree(m);
  const int n = t.n;
  DiameterCenter out;
  if (t.height == 0) {
    out.center = {1};
    out.eccentricity = {0};
    return out;
  }
  // The main-path vertex at level 1 decides between h and h + 1.
  Vertex star = t.main_path[t.main_path.size() - 2];
  out.diameter = t.height;
  auto [first, last] = t.levels[1];
  for (Vertex v = first; v <= last; ++v) {
    if (v != star && !t.adjacent(v, star)) {
      out.diameter = t.height + 1;
      break;
    }
  }

  // The farthest vertex from any u is vertex 1 (leftmost right endpoint) or
  // the vertex with the rightmost left endpoint.
  Vertex far_right = 1;
  for (Vertex v = 2; v <= n; ++v) {
    if (t.left_rank[v] > t.left_rank[far_right]) far_right = v;
  }
  std::vector<int> to_right(n + 1, 0);
  for (Vertex u = n; u >= 1; --u) {
    if (u == far_right) continue;
    to_right[u] = t.adjacent(u, far_right) ? 1 : 1 + to_right[t.high[u]];
  }
  std::vector<int> reach;  // right ranks along the main path
  for (Vertex w : t.main_path) reach.push_back(t.right_rank[w]);
  out.eccentricity.resize(n);
  out.radius = n;
  for (Vertex u = 1; u <= n; ++u) {
    int to_left = 0;
    if (u != 1) {
      auto k = std::lower_bound(reach.begin(), reach.end(), t.left_rank[u]) - reach.begin();
      to_left = 1 + static_cast<int>(k);
    }
    // When vertex 1 also has the rightmost left endpoint, all intervals
    // share it and the graph is complete.
    int ecc = std::max({to_left, to_right[u], 1});
    out.eccentricity[u - 1] = ecc;
    out.radius = std::min(out.radius, ecc);
  }
  for (Vertex u = 1; u <= n; ++u) {
    if (out.eccentricity[u - 1] == out.radius) out.center.push_back(u);
  }
  return out;
}

SpannerTree tree_3_spanner(const IntervalModel& m) {
  IntervalTree t = build_interval_tree(m);
  const int n = t.n;
  SpannerTree out;
  out.main_path = t.main_path;
  out.parent.assign(n + 1, n);
  // Every vertex strictly between consecutive main-path vertices w < w' is
  // adjacent to w' by the umbrella property, so it can hang off w'.
  const auto& path = t.main_path;
  for (std::size_t j = 0; j + 1 < path.size(); ++j) {
    for (Vertex u = path[j]; u < path[j + 1]; ++u) out.parent[u] = path[j + 1];
  }
  std::vector<Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (Vertex u = 1; u < n; ++u) edges.emplace_back(u, out.parent[u]);
  out.tree = Graph(n, std::move(edges));
  return out;
}

std::vector<int> greedy_color(const IntervalModel& m) {
  std::vector<int> color(m.size(), -1);
  std::set<int> free;
  int next = 0;
  for (const auto& e : sorted_endpoints(m.intervals())) {
    if (e.kind == 1) {
      free.insert(color[e.v - 1]);
    } else if (free.empty()) {
      color[e.v - 1] = next++;
    } else {
      color[e.v - 1] = *free.begin();
      free.erase(free.begin());
    }
  }
  return color;
}

std::vector<Vertex> mwis_interval(const IntervalModel& m, std::span<const Rational> weights) {
  const int n = m.size();
  if (!weights.empty() && static_cast<int>(weights.size()) != n) {
    throw Error(Errc::MalformedModel, "expected " + std::to_string(n) + " weights");
  }
  auto w = [&](Vertex v) { return weights.empty() ? Rational(1) : weights[v - 1]; };
  for (Vertex v = 1; v <= n; ++v) {
    if (w(v) < 0) throw Error(Errc::MalformedModel, "negative weight at vertex " + std::to_string(v));
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
    if (m[x].b != m[y].b) return m[x].b < m[y].b;
    return x < y;
  });

  // best[i]: optimum over the first i intervals of `order`, as (weight, set
  // bitmask). Ties go to the set holding the lowest differing vertex, which
  // agrees with set_precedes and is preserved under adding a vertex.
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<Rational> value(n + 1, 0);
  std::vector<std::uint64_t> sets((n + 1) * words, 0);
  auto set_of = [&](int i) { return sets.begin() + static_cast<std::ptrdiff_t>(i * words); };
  std::vector<std::uint64_t> candidate(words);
  for (int i = 1; i <= n; ++i) {
    Vertex v = order[i - 1];
    // Intervals ending before a_v form a prefix of `order`.
    int p = static_cast<int>(std::partition_point(order.begin(), order.begin() + (i - 1),
                                                  [&](Vertex x) { return m[x].b < m[v].a; }) -
                             order.begin());
    Rational take = value[p] + w(v);
    std::copy(set_of(p), set_of(p) + words, candidate.begin());
    candidate[(v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
    bool use = take > value[i - 1];
    if (take == value[i - 1]) {
      auto prev = set_of(i - 1);
      for (std::size_t k = 0; k < words; ++k) {
        std::uint64_t diff = candidate[k] ^ prev[k];
        if (diff) {
          use = (candidate[k] & (diff & -diff)) != 0;
          break;
        }
      }
    }
    if (use) {
      value[i] = take;
      std::copy(candidate.begin(), candidate.end(), set_of(i));
    } else {
      value[i] = value[i - 1];
      std::copy(set_of(i - 1), set_of(i - 1) + words, set_of(i));
    }
  }
  std::vector<Vertex> out;
  auto best = set_of(n);
  for (Vertex v = 1; v <= n; ++v) {
    if (best[(v - 1) / 64] >> ((v - 1) % 64) & 1) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<Vertex>> maximal_cliques_interval(const IntervalModel& m) {
  require_strict(m);
  std::vector<std::vector<Vertex>> cliques;
  std::set<Vertex> active;
  bool opened = false;
  for (const auto& e : sorted_endpoints(m.intervals())) {
    if (e.kind == 0) {
      active.insert(e.v);
      opened = true;
    } else {
      if (opened) cliques.emplace_back(active.begin(), active.end());
      opened = false;
      active.erase(e.v);
    }
  }
  return cliques;
}

std::optional<std::vector<int>> has_consecutive_ones(const std::vector<std::vector<int>>& matrix) {
  const int rows = static_cast<int>(matrix.size());
  if (rows > 8) {
    throw Error(Errc::InstanceTooLarge, "consecutive-ones search is limited to 8 rows");
  }
  std::size_t cols = rows ? matrix[0].size() : 0;
  for (const auto& row : matrix) {
    if (row.size() != cols) throw Error(Errc::MalformedModel, "ragged 0/1 matrix");
  }
  std::vector<int> order(rows);
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (std::size_t c = 0; c < cols && ok; ++c) {
      int state = 0;  // 0 before the run, 1 inside, 2 after
      for (int r : order) {
        bool one = matrix[r][c] != 0;
        if (one && state == 2) {
          ok = false;
          break;
        }
        if (one) state = 1;
        else if (state == 1) state = 2;
      }
    }
    if (ok) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

}  // namespace isect
