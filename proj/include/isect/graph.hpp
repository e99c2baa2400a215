#pragma once

#include "isect/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace isect {

/// Vertices are labelled 1..n throughout the library.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 1..n with optional nonnegative vertex
/// weights. Edges are stored once as (u, v) with u < v, sorted; adjacency
/// lists are sorted as well so `has_edge` is a binary search.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::vector<Edge> edges);
  Graph(int n, std::vector<Edge> edges, std::vector<Rational> weights);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }

  bool has_weights() const noexcept { return !weights_.empty(); }
  /// Weight of v; 1 when the graph carries no weights.
  Rational weight(Vertex v) const;
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  Graph with_weights(std::vector<Rational> weights) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.weights_ == b.weights_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_{1};
  std::vector<Rational> weights_;
};

Graph complement(const Graph& g);

/// Subgraph induced by `keep`; vertex i of the result is keep[i-1].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// BFS distances from `source`; entry v-1 is empty when v is unreachable.
std::vector<std::optional<int>> bfs_distances(const Graph& g, Vertex source);

/// Dense n x n shortest-path matrix. Unreachable pairs are a distinct state
/// reported as an empty optional, never as a large sentinel distance.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n);

  int order() const noexcept { return n_; }
  std::optional<int> at(Vertex u, Vertex v) const;
  bool reachable(Vertex u, Vertex v) const { return cell(u, v) >= 0; }
  void set(Vertex u, Vertex v, int d) { cell(u, v) = d; }
  void set_unreachable(Vertex u, Vertex v) { cell(u, v) = kUnreachable; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  static constexpr std::int32_t kUnreachable = -1;
  std::int32_t& cell(Vertex u, Vertex v) {
    return d_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
  }
  std::int32_t cell(Vertex u, Vertex v) const {
    return d_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
  }

  int n_ = 0;
  std::vector<std::int32_t> d_;
};

DistanceMatrix bfs_apsp(const Graph& g);

struct Metrics {
  std::vector<int> eccentricity;  // index v-1
  int radius = 0;
  int diameter = 0;
  std::vector<Vertex> center;
  Rational average_distance;  // 0 for a single vertex
};

/// Throws Error(Errc::DisconnectedGraph) unless g is connected.
Metrics metrics(const Graph& g);

}  // namespace isect
