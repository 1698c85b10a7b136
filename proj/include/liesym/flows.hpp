#pragma once

#include <string>
#include <vector>

#include "liesym/vfield.hpp"

namespace liesym {

/// Closed-form flow of an affine vector field: new coordinates (independents,
/// then dependents) as expressions in the old ones and the group symbol.
struct OneParameterGroup {
  std::string s;
  std::vector<Expr> maps;
};

OneParameterGroup exponentiate(const VectorField& v, const SymbolTable& table, const std::string& s);

/// The group evaluated at another parameter value (a rational combination of
/// group symbols, e.g. -s or s1 + s2).
OneParameterGroup at(const OneParameterGroup& g, const Expr& value);

/// Composition: first `first`, then `second` (both in the same coordinates).
OneParameterGroup compose(const OneParameterGroup& first, const OneParameterGroup& second, const SymbolTable& table);

/// d/ds of every coordinate equals the generator at the image point, and the
/// map is the identity at s = 0.
bool verify_flow(const VectorField& v, const OneParameterGroup& g, const SymbolTable& table);

/// Image of the graph u = f(x, t) under the group (one dependent variable,
/// projectable action): the transformed function in the original coordinates.
Expr transform_solution(const OneParameterGroup& g, const Expr& f, const SymbolTable& table);

}  // namespace liesym
