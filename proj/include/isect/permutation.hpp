#pragma once

#include "isect/graph.hpp"

#include <span>
#include <vector>

namespace isect {

/// Permutation pi of 1..n. Vertex i sits at position inv(i); vertices i < j
/// are adjacent when their positions are inverted.
class Permutation {
 public:
  Permutation() = default;
  /// sequence[k-1] = pi(k). Throws NotAPermutation.
  explicit Permutation(std::vector<int> sequence);

  int size() const noexcept { return static_cast<int>(pi_.size()); }
  int pi(int position) const { return pi_[static_cast<std::size_t>(position) - 1]; }
  int inv(Vertex v) const { return inv_[static_cast<std::size_t>(v) - 1]; }
  const std::vector<int>& sequence() const noexcept { return pi_; }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.pi_ == b.pi_; }

 private:
  std::vector<int> pi_;
  std::vector<int> inv_;
};

Graph build_permutation_graph(const Permutation& p);

/// The reversed sequence; its graph is the complement.
Permutation complement_permutation(const Permutation& p);

/// Point of vertex i is (i, inv(i)); vertex 0 stands for the origin.
struct PointRelation {
  bool connected = false;
  bool directly_non_connected = false;
};
PointRelation point_relation(const Permutation& p, Vertex x, Vertex y);

/// Points directly above x in both coordinates with nothing in between, by
/// increasing first coordinate. x = 0 gives the minimal points.
std::vector<Vertex> upper_covers(const Permutation& p, Vertex x);

struct MISTree {
  struct Node {
    Vertex point = 0;  // 0 for the root
    int parent = -1;
    std::vector<int> children;
  };
  std::vector<Node> nodes;  // nodes[0] is the root

  std::size_t node_count() const noexcept { return nodes.size(); }
  /// Vertex sets along every root-to-leaf path, in depth-first order.
  std::vector<std::vector<Vertex>> paths() const;
};

/// Throws NodeBudgetExceeded once the tree would exceed `cap` nodes
/// (default 10 n^2).
MISTree build_mis_tree(const Permutation& p, std::size_t cap = 0);

/// All maximal independent sets, sorted and deduplicated.
std::vector<std::vector<Vertex>> enumerate_mis(const Permutation& p, std::size_t cap = 0);

/// Maximum-weight increasing subsequence, ties broken by set_precedes.
std::vector<Vertex> mwis_permutation(const Permutation& p, std::span<const Rational> weights = {});
/// Same optimum, taken over the root-to-leaf paths of the MIS tree.
std::vector<Vertex> mwis_permutation_tree(const Permutation& p,
                                          std::span<const Rational> weights = {},
                                          std::size_t cap = 0);

/// A longest decreasing subsequence of pi, as a sorted vertex set.
std::vector<Vertex> max_clique_permutation(const Permutation& p);

}  // namespace isect
