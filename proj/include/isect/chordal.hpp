#pragma once

#include "isect/graph.hpp"

#include <optional>
#include <vector>

namespace isect {

enum class OrderingKind { PerfectElimination, StrongElimination, MaximumNeighbourhood };

struct Ordering {
  std::vector<Vertex> order;
  OrderingKind kind = OrderingKind::PerfectElimination;
};

/// Lexicographic BFS from `start`; ties go to the smallest id, and further
/// components start at their smallest vertex.
std::vector<Vertex> lex_bfs(const Graph& g, Vertex start = 1);

/// Evaluates the kind's predicate on the suffix subgraphs G_i induced by
/// order[i..]. Throws NotAPermutation for an invalid order.
bool check_ordering(const Graph& g, const Ordering& o);

/// First passing order in lexicographic order of permutations; n <= 8.
std::optional<Ordering> find_ordering_bruteforce(const Graph& g, OrderingKind kind);

bool is_chordal(const Graph& g);

/// Perfect elimination ordering (reversed LexBFS); throws NotChordal.
std::vector<Vertex> perfect_elimination_ordering(const Graph& g);

/// Sorted list of sorted cliques; throws NotChordal.
std::vector<std::vector<Vertex>> maximal_cliques_chordal(const Graph& g);

struct CliqueGraph {
  struct Link {
    int x = 0;  // indices into `cliques`
    int y = 0;
    std::vector<Vertex> separator;
    int weight = 0;  // separator size
  };
  std::vector<std::vector<Vertex>> cliques;
  std::vector<Link> links;
};

/// Cliques joined when their (nonempty) intersection is a minimal
/// a,b-separator for every a, b from the two difference sets. Throws
/// NotChordal or InstanceTooLarge (n > 16).
CliqueGraph clique_graph(const Graph& g);

/// True iff S separates a from b and every vertex of S has neighbours in
/// both the component of a and the component of b in G - S.
bool is_minimal_separator(const Graph& g, const std::vector<Vertex>& s, Vertex a, Vertex b);

/// No hole of length >= 5 in g or its complement; n <= 10.
bool is_weakly_chordal_bruteforce(const Graph& g);

}  // namespace isect
