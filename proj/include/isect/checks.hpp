#pragma once

#include "isect/model_io.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace isect {

/// A named invariant suite run over a seeded corpus of generated models.
struct SuiteInfo {
  std::string_view name;
  std::string_view summary;
  std::vector<ModelKind> kinds;  // first entry is the default
  int min_n = 1;
  int max_n = 10;
};

std::span<const SuiteInfo> check_suites();
const SuiteInfo* find_suite(std::string_view name);

struct CheckOptions {
  std::optional<ModelKind> kind;
  int count = 100;
  std::uint64_t seed = 1;
  int min_n = 0;  // 0 keeps the suite's default range
  int max_n = 0;
};

struct CheckResult {
  std::string suite;
  ModelKind kind = ModelKind::Interval;
  int instances = 0;
  std::int64_t assertions = 0;
  int violations = 0;
  std::vector<std::string> messages;  // the first few violations

  bool ok() const noexcept { return violations == 0; }
};

/// Instance i uses generator seed `seed + i`; its size is drawn uniformly
/// from the range by a separate stream seeded with `seed`. Throws
/// BadParams for an unknown suite, an unsupported kind or a bad range.
CheckResult run_check(std::string_view suite, const CheckOptions& options);

/// Fills in g along the elimination order 1..n (later neighbours of each
/// vertex become a clique), which always yields a chordal graph.
Graph elimination_fill(const Graph& g);

}  // namespace isect
