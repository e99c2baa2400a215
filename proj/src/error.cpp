#include "isect/error.hpp"

namespace isect {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::MalformedModel: return "MalformedModel";
    case Errc::NotStrict: return "NotStrict";
    case Errc::NotSubgraph: return "NotSubgraph";
    case Errc::UndefinedForDisconnected: return "UndefinedForDisconnected";
    case Errc::Infeasible: return "Infeasible";
    case Errc::SharedEndpoint: return "SharedEndpoint";
    case Errc::BadParams: return "BadParams";
    case Errc::NodeBudgetExceeded: return "NodeBudgetExceeded";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::NotChordal: return "NotChordal";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case Errc::SchemaError: return "SchemaError";
    case Errc::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace isect
