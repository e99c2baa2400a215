#pragma once

// Exhaustive, definition-level solvers. These are the ground truth every
// structured algorithm in the library is checked against, so each one
// evaluates its problem's defining predicate literally.

#include "isect/graph.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace isect {

/// Size caps for the exhaustive routines. Exceeding a cap throws
/// Error(Errc::InstanceTooLarge); nothing is ever silently truncated.
struct OracleLimits {
  int max_vertices = 16;
  int max_path_vertices = 12;  // simple-path enumeration (next-to-shortest)
  int max_comparability_edges = 24;
  int max_interval_vertices = 9;
  int max_hole_vertices = 12;
  int max_isomorphism_vertices = 10;
};

enum class ProblemKind {
  MaxIndependentSet,
  MaxWeightIndependentSet,
  MaxClique,
  ChromaticNumber,
  MinCliqueCover,
  KNeighbourhoodCover,
  KDominating,
  TotalKDominating,
  DistanceKDominating,
  TwoTupleDominating,
  SteinerSet,
  FeedbackVertexSet,
  NextToShortest,
};

std::string_view problem_name(ProblemKind kind);
std::optional<ProblemKind> parse_problem_kind(std::string_view name);

struct Problem {
  ProblemKind kind = ProblemKind::MaxIndependentSet;
  int k = 1;                     // distance parameter of the k-problems
  std::vector<Vertex> targets;   // SteinerSet
  Vertex source = 0;             // NextToShortest
  Vertex target = 0;
};

enum class WitnessKind { VertexSet, Coloring, Path };

struct BruteSolution {
  Problem problem;
  Rational value;
  bool infinite = false;  // NextToShortest with no strictly longer path
  WitnessKind witness_kind = WitnessKind::VertexSet;
  // VertexSet: sorted vertices. Coloring: class of vertex v at index v-1,
  // classes numbered from 0. Path: the vertex sequence.
  std::vector<Vertex> witness;
};

/// Canonical tie-break between two sorted vertex sets: compare
/// lexicographically, a sequence that runs out first being treated as
/// padded with +infinity. For equal-size sets this is plain lexicographic
/// order; it is also the order that additive "prefer small ids" tie-breaks
/// produce, which lets dynamic programs reproduce the oracle's witness.
bool set_precedes(std::span<const Vertex> a, std::span<const Vertex> b);

BruteSolution brute_solve(const Graph& g, const Problem& problem, const OracleLimits& limits = {});

/// Vertices whose removal strictly increases some remaining pairwise distance
/// (disconnection counts as an increase).
std::vector<Vertex> hinge_vertices(const Graph& g);

struct BlockDecomposition {
  std::vector<Vertex> cut_vertices;
  std::vector<std::vector<Vertex>> blocks;  // each sorted; list sorted
};
BlockDecomposition cut_vertices_and_blocks(const Graph& g);

/// True iff h is a spanning tree of g with d_h(u,v) <= t * d_g(u,v) for all
/// pairs. Throws NotSubgraph when h is not a subgraph of g on the same
/// vertex set.
bool is_tree_t_spanner(const Graph& g, const Graph& h, const Rational& t);

bool is_at_free(const Graph& g, const OracleLimits& limits = {});
bool is_comparability_bruteforce(const Graph& g, const OracleLimits& limits = {});

/// Searches for a vertex order with: u < v < w and uw in E imply vw in E.
bool is_interval_bruteforce(const Graph& g, const OracleLimits& limits = {});

std::vector<std::vector<Vertex>> maximal_cliques_bruteforce(const Graph& g,
                                                            const OracleLimits& limits = {});
std::vector<std::vector<Vertex>> maximal_independent_sets_bruteforce(
    const Graph& g, const OracleLimits& limits = {});

/// True iff g has an induced (chordless) cycle with at least `min_length`
/// vertices.
bool has_hole_bruteforce(const Graph& g, int min_length, const OracleLimits& limits = {});

bool are_isomorphic_bruteforce(const Graph& a, const Graph& b, const OracleLimits& limits = {});

}  // namespace isect
