#pragma once

#include "isect/circular_arc.hpp"
#include "isect/geom_models.hpp"
#include "isect/graph.hpp"
#include "isect/interval.hpp"
#include "isect/permutation.hpp"
#include "isect/trapezoid.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace isect {

enum class ModelKind { Interval, Arcs, Permutation, Trapezoid, Dotted, Tolerance, Chords, Disks, Boxes, Graph };

std::string_view kind_name(ModelKind kind);
std::optional<ModelKind> parse_kind(std::string_view name);

using AnyModel = std::variant<IntervalModel, ArcModel, Permutation, TrapezoidModel,
                              std::vector<DottedInterval>, ToleranceRep, ChordModel, DiskPoints,
                              KBoxModel, Graph>;

/// A parsed model file. Item ids are a permutation of 1..n and item v of
/// the model is the record with id v.
struct ModelFile {
  ModelKind kind = ModelKind::Graph;
  AnyModel model;
  std::vector<Rational> weights;  // empty: every weight is 1
};

/// Throws SchemaError (shape problems, message starts with the JSON path)
/// or ValidationError (model invariants).
ModelFile parse_model_file(std::string_view text);

/// Canonical JSON text: two-space indent, fixed key order, exact rationals
/// as integers or "p/q" strings.
std::string emit_model_file(const ModelFile& file);

int model_size(const ModelFile& file);

/// Intersection graph of the model, carrying the file's weights.
Graph model_graph(const ModelFile& file);

/// Uniform integer in [lo, hi] from the raw 64-bit output of mt19937_64,
/// rejecting draws below 2^64 mod (hi - lo + 1). Unlike the standard
/// distributions this is specified exactly, so streams match everywhere.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

struct GeneratorSpec {
  ModelKind kind = ModelKind::Interval;
  int n = 10;
  std::uint64_t seed = 1;
  int k = 0;             // arcs CI k / boxes dimension; 0 picks from the seed
  int max_len = 0;       // interval and arc span scale; 0 picks from the seed
  int jump = 2;          // dotted intervals
  Rational r{1};         // disks
};

/// Deterministic in (kind, n, seed, params). Interval models come out
/// connected and strict; arc models canonical. Throws BadParams.
ModelFile generate_model(const GeneratorSpec& spec);

}  // namespace isect
