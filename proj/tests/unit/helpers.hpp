#pragma once

#include "isect/graph.hpp"
#include "isect/model_io.hpp"

#include <random>
#include <vector>

namespace isect::test {

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(1, n);
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  }
  return Graph(n, e);
}

/// Hub 1 with leaves 2..leaves+1.
inline Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (Vertex v = 2; v <= leaves + 1; ++v) e.emplace_back(1, v);
  return Graph(leaves + 1, e);
}

inline Graph random_graph(int n, int percent, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (uniform_int(rng, 0, 99) < percent) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

/// Graph from an adjacency bitmask over the pairs (1,2), (1,3), ..., in
/// lexicographic order.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> e;
  int bit = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v, ++bit) {
      if (mask >> bit & 1) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

inline std::vector<Rational> ints(std::initializer_list<std::int64_t> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

}  // namespace isect::test
