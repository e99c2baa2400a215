#pragma once

#include "isect/model_io.hpp"
#include "isect/oracle.hpp"

#include <string>

namespace isect {

/// Solves `problem` with the structured algorithm for the file's model
/// kind. The result has the same shape as the exhaustive solver's so the
/// two can be compared directly; colourings are valid but need not be the
/// oracle's canonical one. Throws BadParams when the kind has no structured
/// algorithm for the problem.
BruteSolution structured_solve(const ModelFile& file, const Problem& problem);

/// True when structured_solve supports the combination.
bool has_structured_solver(ModelKind kind, ProblemKind problem);

/// Stable text block: "problem", "value" and "witness" lines.
std::string format_solution(const BruteSolution& s);

}  // namespace isect
