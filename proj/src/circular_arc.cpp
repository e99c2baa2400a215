#include "isect/circular_arc.hpp"

#include "isect/error.hpp"
#include "isect/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace isect {
namespace {

// Position x shifted so that `start` becomes 1, on a circle of `len`.
int shift(int x, int start, int len) { return ((x - start) % len + len) % len + 1; }

// Half-points k + 1/2 (k = 1..2n, the last one between 2n and 1) that no
// arc covers.
std::vector<int> uncovered_gaps(const ArcModel& m) {
  const int len = m.positions();
  std::vector<int> cover(len + 2, 0);
  for (const Arc& a : m.arcs()) {
    if (!a.wraps()) {
      ++cover[a.h];
      --cover[a.t];
    } else {
      ++cover[a.h];
      --cover[len + 1];
      ++cover[1];
      --cover[a.t];
    }
  }
  std::vector<int> gaps;
  int running = 0;
  for (int k = 1; k <= len; ++k) {
    running += cover[k];
    if (running == 0) gaps.push_back(k);
  }
  return gaps;
}

// Arcs in `keep` (none of which may cover start - 1/2) as intervals on the
// circle unrolled from position `start`.
SubModel unroll(const ArcModel& m, int start, const std::vector<Vertex>& keep) {
  SubModel out;
  std::vector<Interval> intervals;
  for (Vertex v : keep) {
    int h = shift(m[v].h, start, m.positions());
    int t = shift(m[v].t, start, m.positions());
    intervals.push_back({Rational(h), Rational(t)});
    out.source.push_back(v);
  }
  out.model = IntervalModel(std::move(intervals));
  return out;
}

struct Candidate {
  Rational weight;
  std::vector<Vertex> set;
};

bool better(const Candidate& x, const Candidate& y) {
  if (x.weight != y.weight) return x.weight > y.weight;
  return set_precedes(x.set, y.set);
}

Candidate solve_sub(const SubModel& sub, std::span<const Rational> weights, Vertex extra) {
  std::vector<Rational> w;
  if (!weights.empty()) {
    for (Vertex v : sub.source) w.push_back(weights[v - 1]);
  }
  Candidate c;
  for (Vertex local : mwis_interval(sub.model, w)) c.set.push_back(sub.source[local - 1]);
  if (extra) c.set.insert(std::upper_bound(c.set.begin(), c.set.end(), extra), extra);
  for (Vertex v : c.set) c.weight += weights.empty() ? Rational(1) : weights[v - 1];
  return c;
}

}  // namespace

ArcModel::ArcModel(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  const int len = positions();
  std::vector<int> seen(len + 1, 0);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    for (int x : {arcs_[i].h, arcs_[i].t}) {
      if (x < 1 || x > len) {
        throw Error(Errc::MalformedModel, "arc " + std::to_string(i + 1) + " endpoint " +
                                              std::to_string(x) + " outside 1.." +
                                              std::to_string(len));
      }
      if (seen[x]++) {
        throw Error(Errc::MalformedModel, "endpoint " + std::to_string(x) + " used twice");
      }
    }
  }
}

bool ArcModel::is_canonical() const {
  if (arcs_.empty()) return true;
  if (arcs_[0].h != 1) return false;
  for (std::size_t i = 1; i < arcs_.size(); ++i) {
    if (arcs_[i - 1].h >= arcs_[i].h) return false;
  }
  return true;
}

bool ArcModel::covers_circle() const { return !arcs_.empty() && uncovered_gaps(*this).empty(); }

CanonicalArcs canonicalize(std::span<const RawArc> arcs) {
  const int n = static_cast<int>(arcs.size());
  std::vector<std::tuple<Rational, int, int>> points;  // value, arc, is_tail
  for (int i = 0; i < n; ++i) {
    points.emplace_back(arcs[i].h, i, 0);
    points.emplace_back(arcs[i].t, i, 1);
  }
  std::sort(points.begin(), points.end());
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (std::get<0>(points[k - 1]) == std::get<0>(points[k])) {
      throw Error(Errc::SharedEndpoint, "coordinate " + to_string(std::get<0>(points[k])) +
                                            " is shared by arcs " +
                                            std::to_string(std::get<1>(points[k - 1]) + 1) +
                                            " and " + std::to_string(std::get<1>(points[k]) + 1));
    }
  }
  std::vector<Arc> ranked(n);
  int first_head = 0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    auto [x, i, tail] = points[k];
    int rank = static_cast<int>(k) + 1;
    (tail ? ranked[i].t : ranked[i].h) = rank;
    if (!tail && first_head == 0) first_head = rank;
  }
  for (Arc& a : ranked) {
    a.h = shift(a.h, first_head, 2 * n);
    a.t = shift(a.t, first_head, 2 * n);
  }
  CanonicalArcs out;
  out.source.resize(n);
  std::iota(out.source.begin(), out.source.end(), 1);
  std::sort(out.source.begin(), out.source.end(),
            [&](Vertex x, Vertex y) { return ranked[x - 1].h < ranked[y - 1].h; });
  std::vector<Arc> sorted;
  for (Vertex v : out.source) sorted.push_back(ranked[v - 1]);
  out.model = ArcModel(std::move(sorted));
  return out;
}

CanonicalArcs canonicalize(const ArcModel& m) {
  std::vector<RawArc> raw;
  for (const Arc& a : m.arcs()) raw.push_back({Rational(a.h), Rational(a.t)});
  return canonicalize(raw);
}

bool arc_contains_point(const Arc& a, int j) {
  return a.wraps() ? (j >= a.h || j <= a.t) : (a.h <= j && j <= a.t);
}

bool arcs_intersect(const Arc& x, const Arc& y) {
  return arc_contains_point(x, y.h) || arc_contains_point(x, y.t) ||
         arc_contains_point(y, x.h) || arc_contains_point(y, x.t);
}

Graph build_circular_arc_graph(const ArcModel& m) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= m.size(); ++u) {
    for (Vertex v = u + 1; v <= m.size(); ++v) {
      if (arcs_intersect(m[u], m[v])) edges.emplace_back(u, v);
    }
  }
  return Graph(m.size(), std::move(edges));
}

CutSplit split_at_cut(const ArcModel& m) {
  CutSplit out;
  if (m.size() == 0) return out;
  out.cut_point = m[m.size()].t;
  for (Vertex v = 1; v <= m.size(); ++v) {
    (arc_contains_point(m[v], out.cut_point) ? out.backward : out.forward).push_back(v);
  }
  return out;
}

SubModel delete_closed_neighborhood(const ArcModel& m, Vertex i) {
  if (i < 1 || i > m.size()) throw Error(Errc::BadParams, "arc index out of range");
  std::vector<Vertex> keep;
  for (Vertex v = 1; v <= m.size(); ++v) {
    if (v != i && !arcs_intersect(m[v], m[i])) keep.push_back(v);
  }
  return unroll(m, m[i].h, keep);
}

IntervalModel straighten(const ArcModel& m) {
  auto gaps = uncovered_gaps(m);
  if (gaps.empty()) throw Error(Errc::BadParams, "arcs cover the whole circle");
  std::vector<Vertex> all(m.size());
  std::iota(all.begin(), all.end(), 1);
  return unroll(m, gaps.front() % m.positions() + 1, all).model;
}

std::vector<Vertex> mwis_circular_arc(const ArcModel& m, std::span<const Rational> weights) {
  if (!weights.empty() && static_cast<int>(weights.size()) != m.size()) {
    throw Error(Errc::MalformedModel, "expected " + std::to_string(m.size()) + " weights");
  }
  if (m.size() == 0) return {};
  if (!m.covers_circle()) return mwis_interval(straighten(m), weights);

  // An independent set meets the clique S_B at most once: either it avoids
  // S_B, or it is some i in S_B plus an optimum of G - N[i].
  CutSplit split = split_at_cut(m);
  Candidate best = solve_sub(unroll(m, split.cut_point % m.positions() + 1, split.forward),
                             weights, 0);
  for (Vertex i : split.backward) {
    Candidate c = solve_sub(delete_closed_neighborhood(m, i), weights, i);
    if (better(c, best)) best = std::move(c);
  }
  return best.set;
}

IntervalModel arcs_to_intervals_with_sentinel(const ArcModel& m) {
  const int n = m.size();
  const int len = m.positions();
  if (n == 0) return IntervalModel({{Rational(0), Rational(1, 2)}});
  const int start = m[n].t % len + 1;
  std::vector<Interval> intervals(n + 1);
  Rational first_left = len;
  Rational wrapped_tail = 0;
  for (Vertex v = 1; v <= n; ++v) {
    int h = shift(m[v].h, start, len);
    int t = shift(m[v].t, start, len);
    if (h > t) {
      wrapped_tail = std::max(wrapped_tail, Rational(t));
      t += len;
    }
    intervals[v] = {Rational(h), Rational(t)};
    first_left = std::min(first_left, Rational(h));
  }
  intervals[0] = {Rational(0), std::max(first_left + Rational(1, 2), wrapped_tail)};
  return IntervalModel(std::move(intervals));
}

DistanceMatrix apsp_circular_arc(const ArcModel& m) {
  const int n = m.size();
  const int len = m.positions();
  DistanceMatrix out(n);
  if (n == 0) return out;
  if (!m.covers_circle()) {
    NormalizedModel norm = normalize(straighten(m));
    DistanceMatrix d = apsp_interval(norm.model);
    for (Vertex x = 1; x <= n; ++x) {
      for (Vertex y = 1; y <= n; ++y) out.set(norm.source[x - 1], norm.source[y - 1], *d.at(x, y));
    }
    return out;
  }
  // Lift to the line: copies of every arc shifted by multiples of 2n. A
  // shortest path from copy 0 of u stays within 4n of it, and every lifted
  // path projects back to a walk, so d(u, v) is the minimum over the copies
  // of v. Arcs wrapping in from before the window are missing, which can
  // leave gaps at the left edge; only the component holding copy 0 is used.
  constexpr int kFirst = -4, kCopies = 9;
  std::vector<Interval> lifted;
  lifted.reserve(static_cast<std::size_t>(kCopies) * n);
  for (int c = 0; c < kCopies; ++c) {
    int offset = (c + kFirst) * len;
    for (const Arc& a : m.arcs()) {
      int t = a.wraps() ? a.t + len : a.t;
      lifted.push_back({Rational(a.h + offset), Rational(t + offset)});
    }
  }
  NormalizedModel norm = normalize(IntervalModel(std::move(lifted)));
  const int total = norm.model.size();
  std::vector<Vertex> where(static_cast<std::size_t>(total));
  for (int i = 0; i < total; ++i) where[norm.source[i] - 1] = i + 1;
  auto copy_of = [&](int c, Vertex v) { return where[static_cast<std::size_t>(c) * n + (v - 1)]; };

  // Components of an interval model in IG order are index ranges.
  Vertex anchor = copy_of(-kFirst, 1);
  std::vector<Rational> suffix_left(total + 2);
  suffix_left[total] = norm.model[total].a;
  for (Vertex v = total - 1; v >= 1; --v) suffix_left[v] = std::min(suffix_left[v + 1], norm.model[v].a);
  Vertex lo = 1, hi = total;
  for (Vertex v = 1; v < total; ++v) {
    if (suffix_left[v + 1] > norm.model[v].b) {  // nothing crosses between v and v + 1
      if (v < anchor) {
        lo = v + 1;
      } else {
        hi = v;
        break;
      }
    }
  }
  std::vector<Interval> part(norm.model.intervals().begin() + (lo - 1),
                             norm.model.intervals().begin() + hi);
  IntervalTree tree = build_interval_tree(IntervalModel(std::move(part)));
  for (Vertex u = 1; u <= n; ++u) {
    Vertex source = copy_of(-kFirst, u);
    if (source < lo || source > hi) throw Error(Errc::DisconnectedGraph, "lifted arcs split");
    auto row = distances_from(tree, source - lo + 1);
    for (Vertex v = 1; v <= n; ++v) {
      int best = -1;
      for (int c = 0; c < kCopies; ++c) {
        Vertex x = copy_of(c, v);
        if (x < lo || x > hi) continue;
        int d = row[x - lo];
        if (best < 0 || d < best) best = d;
      }
      out.set(u, v, best);
    }
  }
  return out;
}

std::vector<RawArc> ci_raw_arcs(const CIParams& p) {
  if (p.k < 1 || p.n <= p.k) throw Error(Errc::BadParams, "CI(n, k) needs n > k >= 1");
  if (p.eps <= 0 || p.eps >= Rational(1, 2)) {
    throw Error(Errc::BadParams, "eps must lie strictly between 0 and 1/2 (units of pi/n)");
  }
  const Rational len = 2 * p.n;
  auto wrap = [&](Rational x) { return x >= len ? x - len : x; };
  std::vector<RawArc> raw;
  for (int i = 0; i < p.n; ++i) raw.push_back({Rational(2 * i), wrap(Rational(2 * (i + p.k)) + p.eps)});
  for (int i = 0; i < p.n; ++i) {
    raw.push_back({Rational(2 * i + 1), wrap(Rational(2 * (i + p.k) + 1) - p.eps)});
  }
  return raw;
}

CanonicalArcs generate_ci(const CIParams& p) { return canonicalize(ci_raw_arcs(p)); }

bool is_proper(const ArcModel& m) {
  const int len = m.positions();
  for (Vertex x = 1; x <= m.size(); ++x) {
    for (Vertex y = 1; y <= m.size(); ++y) {
      if (x == y) continue;
      // Offsets measured clockwise from x's head.
      int yh = shift(m[y].h, m[x].h, len), yt = shift(m[y].t, m[x].h, len);
      int xt = shift(m[x].t, m[x].h, len);
      if (yh < yt && yt <= xt) return false;
    }
  }
  return true;
}

}  // namespace isect
