#include "isect/oracle.hpp"

#include "isect/error.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace isect {
namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << (v - 1); }

std::vector<Vertex> mask_to_set(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

void require_size(int n, int cap, const char* what) {
  if (n > cap) {
    throw Error(Errc::InstanceTooLarge, std::string(what) + ": size " + std::to_string(n) +
                                            " exceeds oracle bound " + std::to_string(cap));
  }
}

// Bitmask view of a graph for the exhaustive searches.
struct DenseGraph {
  int n = 0;
  std::vector<Mask> adj;     // open neighbourhoods, index v
  std::vector<Mask> closed;  // closed neighbourhoods

  explicit DenseGraph(const Graph& g) : n(g.order()), adj(n + 1, 0), closed(n + 1, 0) {
    for (auto [u, v] : g.edges()) {
      adj[u] |= bit(v);
      adj[v] |= bit(u);
    }
    for (Vertex v = 1; v <= n; ++v) closed[v] = adj[v] | bit(v);
  }

  Mask all() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

  bool independent(Mask s) const {
    for (Mask m = s; m; m &= m - 1) {
      if (adj[std::countr_zero(m) + 1] & s) return false;
    }
    return true;
  }

  bool clique(Mask s) const {
    for (Mask m = s; m; m &= m - 1) {
      Vertex v = std::countr_zero(m) + 1;
      if ((s & ~bit(v) & ~adj[v]) != 0) return false;
    }
    return true;
  }

  bool connected_within(Mask s) const {
    if (s == 0) return true;
    Mask seen = s & -s;
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask m = frontier; m; m &= m - 1) next |= adj[std::countr_zero(m) + 1];
      next &= s & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == s;
  }

  bool acyclic_within(Mask s) const {
    int vertices = std::popcount(s);
    int edges = 0;
    for (Mask m = s; m; m &= m - 1) edges += std::popcount(adj[std::countr_zero(m) + 1] & s);
    edges /= 2;
    // A forest has |E| = |V| - components.
    int components = 0;
    Mask left = s;
    while (left) {
      Mask seen = left & -left;
      Mask frontier = seen;
      while (frontier) {
        Mask next = 0;
        for (Mask m = frontier; m; m &= m - 1) next |= adj[std::countr_zero(m) + 1];
        next &= left & ~seen;
        seen |= next;
        frontier = next;
      }
      left &= ~seen;
      ++components;
    }
    return edges == vertices - components;
  }
};

// a precedes b in the canonical order: the lowest vertex in exactly one of
// the two sets belongs to a.
bool mask_precedes(Mask a, Mask b) {
  Mask diff = a ^ b;
  return diff != 0 && (a & (diff & -diff)) != 0;
}

// Balls of radius k around every vertex (as masks), from BFS distances.
std::vector<Mask> balls(const Graph& g, int k) {
  std::vector<Mask> out(static_cast<std::size_t>(g.order()) + 1, 0);
  for (Vertex s = 1; s <= g.order(); ++s) {
    auto dist = bfs_distances(g, s);
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (dist[v - 1] && *dist[v - 1] <= k) out[s] |= bit(v);
    }
  }
  return out;
}

// Smallest-cardinality set satisfying `pred`, lexicographically smallest
// among those (combinations are generated in lexicographic order).
std::optional<Mask> min_cardinality(int n, Mask allowed, const std::function<bool(Mask)>& pred) {
  std::vector<Vertex> pool = mask_to_set(allowed);
  int m = static_cast<int>(pool.size());
  for (int size = 0; size <= m; ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Mask s = 0;
      for (int i : idx) s |= bit(pool[i]);
      if (pred(s)) return s;
      int i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  (void)n;
  return std::nullopt;
}

// Lexicographically smallest proper colouring with the fewest colours, in
// canonical form (vertex 1 gets colour 0, each new colour is the next index).
std::vector<Vertex> min_coloring(const DenseGraph& dg) {
  int n = dg.n;
  if (n == 0) return {};
  std::vector<int> color(n + 1, -1);
  for (int k = 1; k <= n; ++k) {
    std::function<bool(Vertex, int)> place = [&](Vertex v, int used) -> bool {
      if (v > n) return true;
      for (int c = 0; c < std::min(k, used + 1); ++c) {
        bool ok = true;
        for (Mask m = dg.adj[v]; m; m &= m - 1) {
          Vertex w = std::countr_zero(m) + 1;
          if (w < v && color[w] == c) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        color[v] = c;
        if (place(v + 1, std::max(used, c + 1))) return true;
      }
      color[v] = -1;
      return false;
    };
    if (place(1, 0)) return std::vector<Vertex>(color.begin() + 1, color.end());
  }
  return {};
}

BruteSolution set_solution(const Problem& p, Mask s, Rational value) {
  BruteSolution sol;
  sol.problem = p;
  sol.value = value;
  sol.witness_kind = WitnessKind::VertexSet;
  sol.witness = mask_to_set(s);
  return sol;
}

BruteSolution solve_min_set(const Graph& g, const Problem& p, Mask allowed,
                            const std::function<bool(Mask)>& pred) {
  auto found = min_cardinality(g.order(), allowed, pred);
  if (!found) {
    throw Error(Errc::Infeasible,
                std::string(problem_name(p.kind)) + " has no feasible solution on this graph");
  }
  return set_solution(p, *found, Rational(std::popcount(*found)));
}

BruteSolution next_to_shortest(const Graph& g, const Problem& p, const OracleLimits& limits) {
  require_size(g.order(), limits.max_path_vertices, "next-to-shortest");
  Vertex s = p.source, t = p.target;
  if (!g.contains(s) || !g.contains(t) || s == t) {
    throw Error(Errc::BadParams, "next-to-shortest needs two distinct vertices");
  }
  auto dist = bfs_distances(g, s);
  if (!dist[t - 1]) {
    throw Error(Errc::UndefinedForDisconnected, "target unreachable from source");
  }
  int shortest = *dist[t - 1];
  int best = -1;
  std::vector<Vertex> best_path;
  std::vector<Vertex> path{s};
  std::vector<bool> on_path(static_cast<std::size_t>(g.order()) + 1, false);
  on_path[s] = true;
  // Neighbours are visited in increasing order, so the first path found at a
  // given length is the lexicographically smallest one of that length.
  std::function<void()> dfs = [&]() {
    int len = static_cast<int>(path.size()) - 1;
    if (best >= 0 && len >= best) return;
    Vertex u = path.back();
    if (u == t) {
      if (len > shortest) {
        best = len;
        best_path = path;
      }
      return;
    }
    for (Vertex w : g.neighbors(u)) {
      if (on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      dfs();
      path.pop_back();
      on_path[w] = false;
    }
  };
  dfs();
  BruteSolution sol;
  sol.problem = p;
  sol.witness_kind = WitnessKind::Path;
  if (best < 0) {
    sol.infinite = true;
  } else {
    sol.value = best;
    sol.witness = best_path;
  }
  return sol;
}

}  // namespace

std::string_view problem_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::MaxIndependentSet: return "mis";
    case ProblemKind::MaxWeightIndependentSet: return "mwis";
    case ProblemKind::MaxClique: return "max-clique";
    case ProblemKind::ChromaticNumber: return "chromatic-number";
    case ProblemKind::MinCliqueCover: return "min-clique-cover";
    case ProblemKind::KNeighbourhoodCover: return "knc";
    case ProblemKind::KDominating: return "k-dominating";
    case ProblemKind::TotalKDominating: return "total-k-dominating";
    case ProblemKind::DistanceKDominating: return "distance-k-dominating";
    case ProblemKind::TwoTupleDominating: return "two-tuple-dominating";
    case ProblemKind::SteinerSet: return "steiner-set";
    case ProblemKind::FeedbackVertexSet: return "feedback-vertex-set";
    case ProblemKind::NextToShortest: return "next-to-shortest";
  }
  return "unknown";
}

std::optional<ProblemKind> parse_problem_kind(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(ProblemKind::NextToShortest); ++i) {
    auto kind = static_cast<ProblemKind>(i);
    if (problem_name(kind) == name) return kind;
  }
  return std::nullopt;
}

bool set_precedes(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::size_t i = 0;
  for (; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  // The longer set wins: its next element is finite, the other's is +inf.
  return a.size() > b.size();
}

BruteSolution brute_solve(const Graph& g, const Problem& p, const OracleLimits& limits) {
  if (p.kind == ProblemKind::NextToShortest) return next_to_shortest(g, p, limits);
  require_size(g.order(), std::min(limits.max_vertices, 63), "brute_solve");
  DenseGraph dg(g);
  const int n = g.order();
  const Mask all = dg.all();

  switch (p.kind) {
    case ProblemKind::MaxIndependentSet:
    case ProblemKind::MaxWeightIndependentSet:
    case ProblemKind::MaxClique: {
      bool weighted = p.kind == ProblemKind::MaxWeightIndependentSet;
      bool clique = p.kind == ProblemKind::MaxClique;
      Mask best = 0;
      Rational best_value = 0;
      for (Mask s = 1; s <= all && s != 0; ++s) {
        if (clique ? !dg.clique(s) : !dg.independent(s)) continue;
        Rational value = 0;
        if (weighted) {
          for (Mask m = s; m; m &= m - 1) value += g.weight(std::countr_zero(m) + 1);
        } else {
          value = std::popcount(s);
        }
        if (value > best_value || (value == best_value && mask_precedes(s, best))) {
          best = s;
          best_value = value;
        }
      }
      return set_solution(p, best, best_value);
    }
    case ProblemKind::ChromaticNumber:
    case ProblemKind::MinCliqueCover: {
      DenseGraph target = p.kind == ProblemKind::ChromaticNumber ? dg : DenseGraph(complement(g));
      BruteSolution sol;
      sol.problem = p;
      sol.witness_kind = WitnessKind::Coloring;
      sol.witness = min_coloring(target);
      int classes = sol.witness.empty()
                        ? 0
                        : *std::max_element(sol.witness.begin(), sol.witness.end()) + 1;
      sol.value = classes;
      return sol;
    }
    case ProblemKind::KNeighbourhoodCover: {
      auto ball = balls(g, p.k);
      return solve_min_set(g, p, all, [&](Mask c) {
        for (auto [x, y] : g.edges()) {
          if ((ball[x] & ball[y] & c) == 0) return false;
        }
        return true;
      });
    }
    case ProblemKind::KDominating: {
      auto ball = balls(g, p.k);
      return solve_min_set(g, p, all, [&](Mask d) {
        for (Vertex v = 1; v <= n; ++v) {
          if ((ball[v] & d) == 0) return false;
        }
        return true;
      });
    }
    case ProblemKind::TotalKDominating: {
      auto ball = balls(g, p.k);
      return solve_min_set(g, p, all, [&](Mask d) {
        for (Vertex v = 1; v <= n; ++v) {
          if ((ball[v] & d) == 0) return false;
        }
        for (Mask m = d; m; m &= m - 1) {
          Vertex u = std::countr_zero(m) + 1;
          if ((ball[u] & d & ~bit(u)) == 0) return false;
        }
        return true;
      });
    }
    case ProblemKind::DistanceKDominating: {
      auto ball = balls(g, p.k);
      return solve_min_set(g, p, all, [&](Mask d) {
        for (Vertex x = 1; x <= n; ++x) {
          if ((d & bit(x)) == 0 && (ball[x] & d) == 0) return false;
        }
        return true;
      });
    }
    case ProblemKind::TwoTupleDominating:
      return solve_min_set(g, p, all, [&](Mask d) {
        for (Vertex v = 1; v <= n; ++v) {
          if (std::popcount(dg.closed[v] & d) < 2) return false;
        }
        return true;
      });
    case ProblemKind::SteinerSet: {
      Mask targets = 0;
      for (Vertex t : p.targets) {
        if (!g.contains(t)) throw Error(Errc::BadParams, "Steiner target out of range");
        targets |= bit(t);
      }
      if (!dg.connected_within(targets | [&] {
            // every target must lie in one component of g
            Mask comp = 0;
            if (targets) {
              Vertex first = std::countr_zero(targets) + 1;
              auto dist = bfs_distances(g, first);
              for (Vertex v = 1; v <= n; ++v) {
                if (dist[v - 1]) comp |= bit(v);
              }
            }
            return comp;
          }())) {
        throw Error(Errc::UndefinedForDisconnected, "Steiner targets lie in different components");
      }
      return solve_min_set(g, p, all & ~targets,
                           [&](Mask s) { return dg.connected_within(s | targets); });
    }
    case ProblemKind::FeedbackVertexSet:
      return solve_min_set(g, p, all, [&](Mask s) { return dg.acyclic_within(all & ~s); });
    case ProblemKind::NextToShortest:
      break;
  }
  throw Error(Errc::BadParams, "unsupported problem");
}

std::vector<Vertex> hinge_vertices(const Graph& g) {
  if (!is_connected(g)) throw Error(Errc::DisconnectedGraph, "hinge vertices need a connected graph");
  DistanceMatrix base = bfs_apsp(g);
  std::vector<Vertex> hinges;
  for (Vertex u = 1; u <= g.order(); ++u) {
    std::vector<Vertex> keep;
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (v != u) keep.push_back(v);
    }
    DistanceMatrix reduced = bfs_apsp(induced_subgraph(g, keep));
    bool increases = false;
    for (std::size_t i = 0; i < keep.size() && !increases; ++i) {
      for (std::size_t j = i + 1; j < keep.size(); ++j) {
        auto after = reduced.at(static_cast<Vertex>(i) + 1, static_cast<Vertex>(j) + 1);
        if (!after || *after > *base.at(keep[i], keep[j])) {
          increases = true;
          break;
        }
      }
    }
    if (increases) hinges.push_back(u);
  }
  return hinges;
}

BlockDecomposition cut_vertices_and_blocks(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) {
    throw Error(Errc::DisconnectedGraph, "block decomposition needs a connected graph");
  }
  BlockDecomposition out;
  if (g.size() == 0) {
    out.blocks.push_back({1});
    return out;
  }
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                            boost::property<boost::edge_index_t, std::size_t>>;
  BoostGraph bg(static_cast<std::size_t>(g.order()));
  std::size_t index = 0;
  for (auto [u, v] : g.edges()) boost::add_edge(u - 1, v - 1, index++, bg);
  auto component = boost::get(boost::edge_index, bg);
  std::vector<std::size_t> component_of(g.size());
  auto component_map = boost::make_iterator_property_map(component_of.begin(), component);
  std::vector<std::size_t> articulation;
  auto [count, _] = boost::biconnected_components(bg, component_map, std::back_inserter(articulation));
  std::vector<std::set<Vertex>> blocks(count);
  for (auto e : boost::make_iterator_range(boost::edges(bg))) {
    auto& block = blocks[component_of[boost::get(component, e)]];
    block.insert(static_cast<Vertex>(boost::source(e, bg)) + 1);
    block.insert(static_cast<Vertex>(boost::target(e, bg)) + 1);
  }
  for (auto& b : blocks) out.blocks.emplace_back(b.begin(), b.end());
  std::sort(out.blocks.begin(), out.blocks.end());
  for (auto a : articulation) out.cut_vertices.push_back(static_cast<Vertex>(a) + 1);
  std::sort(out.cut_vertices.begin(), out.cut_vertices.end());
  return out;
}

bool is_tree_t_spanner(const Graph& g, const Graph& h, const Rational& t) {
  if (h.order() != g.order()) throw Error(Errc::NotSubgraph, "vertex sets differ");
  for (auto [u, v] : h.edges()) {
    if (!g.has_edge(u, v)) {
      throw Error(Errc::NotSubgraph,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") not in g");
    }
  }
  if (g.order() == 0) return true;
  if (static_cast<int>(h.size()) != g.order() - 1 || !is_connected(h)) return false;
  for (Vertex s = 1; s <= g.order(); ++s) {
    auto dh = bfs_distances(h, s);
    auto dg = bfs_distances(g, s);
    for (Vertex v = 1; v <= g.order(); ++v) {
      // h spans and connects, so dg is finite as well.
      if (Rational(*dh[v - 1]) > t * Rational(*dg[v - 1])) return false;
    }
  }
  return true;
}

bool is_at_free(const Graph& g, const OracleLimits& limits) {
  require_size(g.order(), limits.max_vertices, "is_at_free");
  const int n = g.order();
  // comp[z][v]: component id of v in g - N[z], or -1 when v is in N[z].
  std::vector<std::vector<int>> comp(n + 1, std::vector<int>(n + 1, -1));
  for (Vertex z = 1; z <= n; ++z) {
    std::vector<bool> blocked(n + 1, false);
    blocked[z] = true;
    for (Vertex w : g.neighbors(z)) blocked[w] = true;
    int id = 0;
    for (Vertex s = 1; s <= n; ++s) {
      if (blocked[s] || comp[z][s] >= 0) continue;
      std::vector<Vertex> queue{s};
      comp[z][s] = id;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Vertex w : g.neighbors(queue[head])) {
          if (!blocked[w] && comp[z][w] < 0) {
            comp[z][w] = id;
            queue.push_back(w);
          }
        }
      }
      ++id;
    }
  }
  auto joined_avoiding = [&](Vertex a, Vertex b, Vertex z) {
    return comp[z][a] >= 0 && comp[z][a] == comp[z][b];
  };
  for (Vertex x = 1; x <= n; ++x) {
    for (Vertex y = x + 1; y <= n; ++y) {
      for (Vertex z = y + 1; z <= n; ++z) {
        if (joined_avoiding(x, y, z) && joined_avoiding(x, z, y) && joined_avoiding(y, z, x)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_comparability_bruteforce(const Graph& g, const OracleLimits& limits) {
  require_size(static_cast<int>(g.size()), limits.max_comparability_edges, "is_comparability");
  const int n = g.order();
  const auto& edges = g.edges();
  std::vector<std::vector<int>> edge_id(n + 1, std::vector<int>(n + 1, -1));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edge_id[edges[i].first][edges[i].second] = static_cast<int>(i);
    edge_id[edges[i].second][edges[i].first] = static_cast<int>(i);
  }
  // orient[i]: 0 unassigned, +1 for first -> second, -1 for second -> first.
  std::vector<int> orient(edges.size(), 0);
  auto arc = [&](Vertex from, Vertex to) -> int {  // 1 assigned from->to, -1 reverse, 0 none
    int id = edge_id[from][to];
    if (id < 0 || orient[id] == 0) return 0;
    bool forward = edges[id].first == from;
    return (orient[id] == 1) == forward ? 1 : -1;
  };
  // Checks transitivity for every assigned pair involving the new arc a->b.
  auto consistent = [&](Vertex a, Vertex b) {
    for (Vertex c : g.neighbors(b)) {
      if (c == a || arc(b, c) != 1) continue;
      if (edge_id[a][c] < 0 || arc(a, c) == -1) return false;
    }
    for (Vertex c : g.neighbors(a)) {
      if (c == b || arc(c, a) != 1) continue;
      if (edge_id[c][b] < 0 || arc(c, b) == -1) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == edges.size()) return true;
    for (int dir : {1, -1}) {
      orient[i] = dir;
      auto [a, b] = edges[i];
      if (dir == -1) std::swap(a, b);
      if (consistent(a, b) && assign(i + 1)) return true;
    }
    orient[i] = 0;
    return false;
  };
  return assign(0);
}

bool is_interval_bruteforce(const Graph& g, const OracleLimits& limits) {
  require_size(g.order(), limits.max_interval_vertices, "is_interval");
  const int n = g.order();
  std::vector<Vertex> order;
  std::vector<bool> used(n + 1, false);
  // Appending w is legal iff the placed neighbours of w form a suffix of the
  // current order (that is the u < v < w, uw in E => vw in E rule).
  std::function<bool()> extend = [&]() -> bool {
    if (static_cast<int>(order.size()) == n) return true;
    for (Vertex w = 1; w <= n; ++w) {
      if (used[w]) continue;
      bool ok = true;
      bool seen_neighbor = false;
      for (Vertex u : order) {
        bool adj = g.has_edge(u, w);
        if (seen_neighbor && !adj) {
          ok = false;
          break;
        }
        seen_neighbor = seen_neighbor || adj;
      }
      if (!ok) continue;
      used[w] = true;
      order.push_back(w);
      if (extend()) return true;
      order.pop_back();
      used[w] = false;
    }
    return false;
  };
  return extend();
}

std::vector<std::vector<Vertex>> maximal_cliques_bruteforce(const Graph& g,
                                                            const OracleLimits& limits) {
  require_size(g.order(), limits.max_vertices, "maximal_cliques");
  DenseGraph dg(g);
  std::vector<std::vector<Vertex>> out;
  if (g.order() == 0) return out;
  for (Mask s = 1; s <= dg.all() && s != 0; ++s) {
    if (!dg.clique(s)) continue;
    bool maximal = true;
    for (Vertex v = 1; v <= g.order() && maximal; ++v) {
      if (!(s & bit(v)) && (dg.adj[v] & s) == s) maximal = false;
    }
    if (maximal) out.push_back(mask_to_set(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> maximal_independent_sets_bruteforce(const Graph& g,
                                                                     const OracleLimits& limits) {
  return maximal_cliques_bruteforce(complement(g), limits);
}

bool has_hole_bruteforce(const Graph& g, int min_length, const OracleLimits& limits) {
  require_size(g.order(), limits.max_hole_vertices, "has_hole");
  const int n = g.order();
  min_length = std::max(min_length, 4);
  std::vector<Vertex> path;
  // Induced paths starting at the cycle's smallest vertex s; a hole closes
  // when the newest vertex is adjacent to s and to nothing else on the path
  // but its predecessor.
  std::function<bool(Vertex)> grow = [&](Vertex s) -> bool {
    Vertex last = path.back();
    for (Vertex w : g.neighbors(last)) {
      if (w <= s || std::find(path.begin(), path.end(), w) != path.end()) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (g.has_edge(w, path[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (path.size() >= 2 && g.has_edge(w, s)) {
        if (static_cast<int>(path.size()) + 1 >= min_length) return true;
        continue;  // a chord to s would be a shortcut for longer cycles
      }
      path.push_back(w);
      if (grow(s)) return true;
      path.pop_back();
    }
    return false;
  };
  for (Vertex s = 1; s <= n; ++s) {
    path = {s};
    if (grow(s)) return true;
  }
  return false;
}

bool are_isomorphic_bruteforce(const Graph& a, const Graph& b, const OracleLimits& limits) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  require_size(a.order(), limits.max_isomorphism_vertices, "isomorphism");
  const int n = a.order();
  std::vector<int> da, db;
  for (Vertex v = 1; v <= n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<Vertex> map(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  std::function<bool(Vertex)> extend = [&](Vertex v) -> bool {
    if (v > n) return true;
    for (Vertex w = 1; w <= n; ++w) {
      if (used[w] || a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (Vertex u = 1; u < v && ok; ++u) {
        ok = a.has_edge(u, v) == b.has_edge(map[u], w);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(1);
}

}  // namespace isect
