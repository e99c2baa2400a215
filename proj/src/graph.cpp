#include "isect/graph.hpp"

#include "isect/error.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace isect {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
  if (n < 0) throw Error(Errc::MalformedModel, "negative vertex count");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
  for (auto& [u, v] : edges) {
    if (u == v) throw Error(Errc::MalformedModel, "self-loop at vertex " + std::to_string(u));
    if (u < 1 || u > n || v < 1 || v > n) {
      throw Error(Errc::MalformedModel,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(Errc::MalformedModel, "duplicate edge (" + std::to_string(dup->first) + "," +
                                          std::to_string(dup->second) + ")");
  }
  edges_ = std::move(edges);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<Rational> weights)
    : Graph(n, std::move(edges)) {
  *this = with_weights(std::move(weights));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& list = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(list.begin(), list.end(), other);
}

Rational Graph::weight(Vertex v) const {
  return weights_.empty() ? Rational(1) : weights_[static_cast<std::size_t>(v) - 1];
}

Graph Graph::with_weights(std::vector<Rational> weights) const {
  if (!weights.empty()) {
    if (static_cast<int>(weights.size()) != n_) {
      throw Error(Errc::MalformedModel, "expected " + std::to_string(n_) + " weights, got " +
                                            std::to_string(weights.size()));
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] < 0) {
        throw Error(Errc::MalformedModel, "negative weight at vertex " + std::to_string(i + 1));
      }
    }
  }
  Graph copy = *this;
  copy.weights_ = std::move(weights);
  return copy;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= g.order(); ++u) {
    auto nbrs = g.neighbors(u);
    auto it = std::upper_bound(nbrs.begin(), nbrs.end(), u);
    for (Vertex v = u + 1; v <= g.order(); ++v) {
      if (it != nbrs.end() && *it == v) {
        ++it;
        continue;
      }
      edges.emplace_back(u, v);
    }
  }
  return Graph(g.order(), std::move(edges), g.weights());
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i) + 1;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (index[u] && index[v]) edges.emplace_back(index[u], index[v]);
  }
  std::vector<Rational> weights;
  if (g.has_weights()) {
    for (Vertex v : keep) weights.push_back(g.weight(v));
  }
  return Graph(static_cast<int>(keep.size()), std::move(edges), std::move(weights));
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()) + 1, false);
  for (Vertex s = 1; s <= g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> component{s};
    seen[s] = true;
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (Vertex w : g.neighbors(component[head])) {
        if (!seen[w]) {
          seen[w] = true;
          component.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<std::optional<int>> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::optional<int>> dist(static_cast<std::size_t>(g.order()));
  std::vector<Vertex> queue{source};
  dist[source - 1] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (!dist[w - 1]) {
        dist[w - 1] = *dist[u - 1] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(int n)
    : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable) {
  for (Vertex v = 1; v <= n; ++v) set(v, v, 0);
}

std::optional<int> DistanceMatrix::at(Vertex u, Vertex v) const {
  std::int32_t d = cell(u, v);
  if (d < 0) return std::nullopt;
  return d;
}

DistanceMatrix bfs_apsp(const Graph& g) {
  DistanceMatrix dm(g.order());
  for (Vertex s = 1; s <= g.order(); ++s) {
    auto row = bfs_distances(g, s);
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (row[v - 1]) dm.set(s, v, *row[v - 1]);
    }
  }
  return dm;
}

Metrics metrics(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) {
    throw Error(Errc::DisconnectedGraph, "metrics require a connected, nonempty graph");
  }
  Metrics m;
  std::int64_t total = 0;
  for (Vertex s = 1; s <= g.order(); ++s) {
    int ecc = 0;
    for (const auto& d : bfs_distances(g, s)) {
      ecc = std::max(ecc, *d);
      total += *d;
    }
    m.eccentricity.push_back(ecc);
  }
  m.radius = *std::min_element(m.eccentricity.begin(), m.eccentricity.end());
  m.diameter = *std::max_element(m.eccentricity.begin(), m.eccentricity.end());
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (m.eccentricity[v - 1] == m.radius) m.center.push_back(v);
  }
  std::int64_t n = g.order();
  m.average_distance = n > 1 ? Rational(total, n * (n - 1)) : Rational(0);
  return m;
}

}  // namespace isect
