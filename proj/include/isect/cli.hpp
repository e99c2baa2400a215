#pragma once

#include <ostream>
#include <span>
#include <string>

namespace isect {

/// Runs `isect <build|solve|oracle|check|gen|bench> ...` with `args` being
/// the arguments after the program name. Returns 0 on success, 1 on a
/// domain error and 2 on a usage error.
int execute(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace isect
