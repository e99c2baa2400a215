#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isect {

enum class Errc {
  DisconnectedGraph,
  InstanceTooLarge,
  MalformedModel,
  NotStrict,
  NotSubgraph,
  UndefinedForDisconnected,
  Infeasible,
  SharedEndpoint,
  BadParams,
  NodeBudgetExceeded,
  NotAPermutation,
  NotChordal,
  DimensionMismatch,
  EmptyGraph,
  SizeBudgetExceeded,
  SchemaError,
  ValidationError,
};

std::string_view to_string(Errc code);

/// The single exception type thrown by the library; `code()` tells callers
/// which domain condition was hit.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace isect
