#pragma once

#include <string>

#include "liesym/jet.hpp"

namespace liesym {

/// Problem files are ';'-separated statements, '#' starts a comment:
///   indep x t;
///   dep u(x,t);
///   param a nonzero;
///   eq: D[u,t] - D[u,x,x,t] + a*D[u,x]*(1 - D[u,t]) = 0;
///   lead D[u,x,x,t];      (optional, applies to the preceding eq)
/// Without `lead` the highest-order jet of the equation is used.
ProblemSpec parse_problem(const std::string& text);
ProblemSpec load_problem(const std::string& path);

/// Declarations and equations in canonical form, one statement per line.
std::string canonical_text(const ProblemSpec& spec);

}  // namespace liesym
