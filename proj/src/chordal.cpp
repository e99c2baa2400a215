#include "isect/chordal.hpp"

#include "isect/error.hpp"
#include "isect/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace isect {
namespace {

// Closed neighbourhoods restricted to `alive`, as sorted vectors.
std::vector<Vertex> closed_within(const Graph& g, Vertex v, const std::vector<bool>& alive) {
  std::vector<Vertex> out;
  bool placed = false;
  for (Vertex w : g.neighbors(v)) {
    if (!alive[w]) continue;
    if (!placed && w > v) {
      out.push_back(v);
      placed = true;
    }
    out.push_back(w);
  }
  if (!placed) out.push_back(v);
  return out;
}

bool subset(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_clique(const Graph& g, const std::vector<Vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.has_edge(s[i], s[j])) return false;
    }
  }
  return true;
}

// Component labels of g - removed (0 for removed vertices).
std::vector<int> components_without(const Graph& g, const std::vector<bool>& removed) {
  std::vector<int> comp(g.order() + 1, 0);
  int id = 0;
  for (Vertex s = 1; s <= g.order(); ++s) {
    if (removed[s] || comp[s]) continue;
    comp[s] = ++id;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (!removed[w] && !comp[w]) {
          comp[w] = id;
          queue.push_back(w);
        }
      }
    }
  }
  return comp;
}

}  // namespace

std::vector<Vertex> lex_bfs(const Graph& g, Vertex start) {
  const int n = g.order();
  if (n == 0) return {};
  if (!g.contains(start)) throw Error(Errc::BadParams, "start vertex out of range");
  // label[v] holds the numbers n, n-1, ... of already visited neighbours in
  // visiting order; the lexicographically largest label is taken next.
  std::vector<std::vector<int>> label(n + 1);
  std::vector<bool> visited(n + 1, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex pick = 0;
    if (step == 0) {
      pick = start;
    } else {
      for (Vertex v = 1; v <= n; ++v) {
        if (!visited[v] && (pick == 0 || label[v] > label[pick])) pick = v;
      }
    }
    visited[pick] = true;
    order.push_back(pick);
    for (Vertex w : g.neighbors(pick)) {
      if (!visited[w]) label[w].push_back(n - step);
    }
  }
  return order;
}

bool check_ordering(const Graph& g, const Ordering& o) {
  const int n = g.order();
  if (static_cast<int>(o.order.size()) != n) throw Error(Errc::NotAPermutation, "order has wrong length");
  std::vector<int> position(n + 1, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = o.order[i];
    if (!g.contains(v) || position[v] >= 0) throw Error(Errc::NotAPermutation, "order is not a permutation");
    position[v] = i;
  }
  std::vector<bool> alive(n + 1, true);
  for (int i = 0; i < n; ++i) {
    Vertex vi = o.order[i];
    auto hood = closed_within(g, vi, alive);
    switch (o.kind) {
      case OrderingKind::PerfectElimination:
        if (!is_clique(g, hood)) return false;
        break;
      case OrderingKind::StrongElimination: {
        std::vector<Vertex> by_position = hood;
        std::sort(by_position.begin(), by_position.end(),
                  [&](Vertex x, Vertex y) { return position[x] < position[y]; });
        for (std::size_t j = 0; j < by_position.size(); ++j) {
          auto nj = closed_within(g, by_position[j], alive);
          for (std::size_t k = j + 1; k < by_position.size(); ++k) {
            if (!subset(nj, closed_within(g, by_position[k], alive))) return false;
          }
        }
        break;
      }
      case OrderingKind::MaximumNeighbourhood: {
        std::vector<std::vector<Vertex>> hoods;
        for (Vertex w : hood) hoods.push_back(closed_within(g, w, alive));
        bool found = false;
        for (std::size_t u = 0; u < hood.size() && !found; ++u) {
          found = std::all_of(hoods.begin(), hoods.end(),
                              [&](const std::vector<Vertex>& nw) { return subset(nw, hoods[u]); });
        }
        if (!found) return false;
        break;
      }
    }
    alive[vi] = false;
  }
  return true;
}

std::optional<Ordering> find_ordering_bruteforce(const Graph& g, OrderingKind kind) {
  if (g.order() > 8) throw Error(Errc::InstanceTooLarge, "ordering search is limited to 8 vertices");
  Ordering o{std::vector<Vertex>(g.order()), kind};
  std::iota(o.order.begin(), o.order.end(), 1);
  do {
    if (check_ordering(g, o)) return o;
  } while (std::next_permutation(o.order.begin(), o.order.end()));
  return std::nullopt;
}

bool is_chordal(const Graph& g) {
  auto order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  return check_ordering(g, {order, OrderingKind::PerfectElimination});
}

std::vector<Vertex> perfect_elimination_ordering(const Graph& g) {
  auto order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  if (!check_ordering(g, {order, OrderingKind::PerfectElimination})) {
    throw Error(Errc::NotChordal, "graph has no perfect elimination ordering");
  }
  return order;
}

std::vector<std::vector<Vertex>> maximal_cliques_chordal(const Graph& g) {
  auto peo = perfect_elimination_ordering(g);
  std::vector<bool> alive(g.order() + 1, true);
  std::vector<std::vector<Vertex>> candidates;
  for (Vertex v : peo) {
    candidates.push_back(closed_within(g, v, alive));
    alive[v] = false;
  }
  std::vector<std::vector<Vertex>> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
      if (i == j || !subset(candidates[i], candidates[j])) continue;
      // Keep the first of several equal candidates.
      maximal = candidates[i] == candidates[j] && i < j;
    }
    if (maximal) out.push_back(candidates[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_minimal_separator(const Graph& g, const std::vector<Vertex>& s, Vertex a, Vertex b) {
  std::vector<bool> removed(g.order() + 1, false);
  for (Vertex v : s) removed[v] = true;
  if (removed[a] || removed[b]) return false;
  auto comp = components_without(g, removed);
  if (comp[a] == comp[b]) return false;
  for (Vertex v : s) {
    bool sees_a = false, sees_b = false;
    for (Vertex w : g.neighbors(v)) {
      sees_a = sees_a || comp[w] == comp[a];
      sees_b = sees_b || comp[w] == comp[b];
    }
    if (!sees_a || !sees_b) return false;
  }
  return true;
}

CliqueGraph clique_graph(const Graph& g) {
  if (g.order() > 16) throw Error(Errc::InstanceTooLarge, "clique graph is limited to 16 vertices");
  CliqueGraph out;
  out.cliques = maximal_cliques_chordal(g);
  const int k = static_cast<int>(out.cliques.size());
  for (int x = 0; x < k; ++x) {
    for (int y = x + 1; y < k; ++y) {
      const auto& cx = out.cliques[x];
      const auto& cy = out.cliques[y];
      std::vector<Vertex> s, only_x, only_y;
      std::set_intersection(cx.begin(), cx.end(), cy.begin(), cy.end(), std::back_inserter(s));
      if (s.empty()) continue;
      std::set_difference(cx.begin(), cx.end(), cy.begin(), cy.end(), std::back_inserter(only_x));
      std::set_difference(cy.begin(), cy.end(), cx.begin(), cx.end(), std::back_inserter(only_y));
      bool all = true;
      for (Vertex a : only_x) {
        for (Vertex b : only_y) {
          if (!is_minimal_separator(g, s, a, b)) {
            all = false;
            break;
          }
        }
        if (!all) break;
      }
      if (all) out.links.push_back({x, y, s, static_cast<int>(s.size())});
    }
  }
  return out;
}

bool is_weakly_chordal_bruteforce(const Graph& g) {
  if (g.order() > 10) throw Error(Errc::InstanceTooLarge, "weak chordality check is limited to 10 vertices");
  return !has_hole_bruteforce(g, 5) && !has_hole_bruteforce(complement(g), 5);
}

}  // namespace isect
