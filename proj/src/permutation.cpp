#include "isect/permutation.hpp"

#include "isect/error.hpp"
#include "isect/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace isect {
namespace {

// Best chain under `before(i, j)` (i < j), maximizing weight with the
// set_precedes tie-break. Sets are bitmasks; adding the same vertex to two
// disjoint-from-it sets preserves their order, so per-endpoint optima
// compose.
template <class Before>
std::vector<Vertex> best_chain(int n, std::span<const Rational> weights, Before before) {
  if (!weights.empty() && static_cast<int>(weights.size()) != n) {
    throw Error(Errc::MalformedModel, "expected " + std::to_string(n) + " weights");
  }
  auto w = [&](Vertex v) { return weights.empty() ? Rational(1) : weights[v - 1]; };
  for (Vertex v = 1; v <= n; ++v) {
    if (w(v) < 0) throw Error(Errc::MalformedModel, "negative weight at vertex " + std::to_string(v));
  }
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<Rational> value(n + 1, 0);
  std::vector<std::uint64_t> sets((n + 1) * words, 0);  // row 0: empty set
  auto row = [&](int i) { return sets.begin() + static_cast<std::ptrdiff_t>(i * words); };
  auto precedes = [&](auto x, auto y) {
    for (std::size_t k = 0; k < words; ++k) {
      std::uint64_t diff = x[k] ^ y[k];
      if (diff) return (x[k] & (diff & -diff)) != 0;
    }
    return false;
  };
  auto better = [&](int i, int j) {  // row i strictly better than row j
    if (value[i] != value[j]) return value[i] > value[j];
    return precedes(row(i), row(j));
  };
  int best = 0;
  for (Vertex j = 1; j <= n; ++j) {
    int from = 0;
    for (Vertex i = 1; i < j; ++i) {
      if (before(i, j) && better(i, from)) from = i;
    }
    value[j] = value[from] + w(j);
    std::copy(row(from), row(from) + words, row(j));
    row(j)[(j - 1) / 64] |= std::uint64_t{1} << ((j - 1) % 64);
    if (better(j, best)) best = j;
  }
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n; ++v) {
    if (row(best)[(v - 1) / 64] >> ((v - 1) % 64) & 1) out.push_back(v);
  }
  return out;
}

std::size_t default_cap(const Permutation& p, std::size_t cap) {
  return cap ? cap : std::size_t{10} * p.size() * p.size() + 1;
}

}  // namespace

Permutation::Permutation(std::vector<int> sequence) : pi_(std::move(sequence)) {
  const int n = size();
  inv_.assign(n, 0);
  for (int k = 1; k <= n; ++k) {
    int v = pi_[k - 1];
    if (v < 1 || v > n || inv_[v - 1] != 0) {
      throw Error(Errc::NotAPermutation,
                  "entry " + std::to_string(k) + " = " + std::to_string(v) + " breaks bijection on 1.." +
                      std::to_string(n));
    }
    inv_[v - 1] = k;
  }
}

Graph build_permutation_graph(const Permutation& p) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= p.size(); ++i) {
    for (Vertex j = i + 1; j <= p.size(); ++j) {
      if (p.inv(i) > p.inv(j)) edges.emplace_back(i, j);
    }
  }
  return Graph(p.size(), std::move(edges));
}

Permutation complement_permutation(const Permutation& p) {
  std::vector<int> seq(p.sequence().rbegin(), p.sequence().rend());
  return Permutation(std::move(seq));
}

PointRelation point_relation(const Permutation& p, Vertex x, Vertex y) {
  auto pos = [&](Vertex v) { return v == 0 ? 0 : p.inv(v); };
  if (x == y) throw Error(Errc::BadParams, "point_relation needs two different points");
  if (x > y) std::swap(x, y);
  PointRelation r;
  r.connected = pos(x) > pos(y);
  if (r.connected) return r;
  r.directly_non_connected = true;
  for (Vertex z = x + 1; z < y; ++z) {
    if (pos(x) < pos(z) && pos(z) < pos(y)) {
      r.directly_non_connected = false;
      break;
    }
  }
  return r;
}

std::vector<Vertex> upper_covers(const Permutation& p, Vertex x) {
  const int n = p.size();
  const int px = x == 0 ? 0 : p.inv(x);
  std::vector<Vertex> covers;
  int lowest = n + 1;  // smallest position among points above x seen so far
  for (Vertex y = x + 1; y <= n; ++y) {
    int py = p.inv(y);
    if (py <= px) continue;
    if (py < lowest) covers.push_back(y);
    lowest = std::min(lowest, py);
  }
  return covers;
}

std::vector<std::vector<Vertex>> MISTree::paths() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  // Iterative DFS keeping the current path.
  std::vector<std::pair<int, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    const auto& kids = nodes[node].children;
    if (kids.empty() && node != 0) out.push_back(path);
    if (next < kids.size()) {
      int child = kids[next++];
      path.push_back(nodes[child].point);
      stack.push_back({child, 0});
    } else {
      if (node != 0) path.pop_back();
      stack.pop_back();
    }
  }
  return out;
}

MISTree build_mis_tree(const Permutation& p, std::size_t cap) {
  cap = default_cap(p, cap);
  MISTree t;
  t.nodes.push_back({});
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    for (Vertex c : upper_covers(p, t.nodes[i].point)) {
      if (t.nodes.size() >= cap) {
        throw Error(Errc::NodeBudgetExceeded,
                    "MIS tree exceeds " + std::to_string(cap) + " nodes");
      }
      t.nodes[i].children.push_back(static_cast<int>(t.nodes.size()));
      t.nodes.push_back({c, static_cast<int>(i), {}});
    }
  }
  return t;
}

std::vector<std::vector<Vertex>> enumerate_mis(const Permutation& p, std::size_t cap) {
  if (p.size() == 0) return {{}};
  auto sets = build_mis_tree(p, cap).paths();
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

std::vector<Vertex> mwis_permutation(const Permutation& p, std::span<const Rational> weights) {
  return best_chain(p.size(), weights, [&](Vertex i, Vertex j) { return p.inv(i) < p.inv(j); });
}

std::vector<Vertex> mwis_permutation_tree(const Permutation& p, std::span<const Rational> weights,
                                          std::size_t cap) {
  if (!weights.empty() && static_cast<int>(weights.size()) != p.size()) {
    throw Error(Errc::MalformedModel, "expected " + std::to_string(p.size()) + " weights");
  }
  auto w = [&](Vertex v) { return weights.empty() ? Rational(1) : weights[v - 1]; };
  std::vector<Vertex> best;
  Rational best_value = -1;
  for (auto& set : enumerate_mis(p, cap)) {
    Rational value = 0;
    for (Vertex v : set) value += w(v);
    if (value > best_value || (value == best_value && set_precedes(set, best))) {
      best_value = value;
      best = std::move(set);
    }
  }
  return best;
}

std::vector<Vertex> max_clique_permutation(const Permutation& p) {
  return best_chain(p.size(), {}, [&](Vertex i, Vertex j) { return p.inv(i) > p.inv(j); });
}

}  // namespace isect
