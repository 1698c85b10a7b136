#pragma once

#include <string>
#include <vector>

#include "liesym/flows.hpp"
#include "liesym/jet.hpp"

namespace liesym {

/// Similarity variable y(x, t), invariant w(x, t, u) and u solved back in
/// terms of x, t and the atom w (jet "w" of order 0).
struct InvariantChart {
  Expr y;
  Expr w;
  Expr reconstruction;
  /// Slot of the independent variable used to eliminate the group parameter.
  int pivot = -1;
};

/// Symbols of the reduced equation: independent y, dependent w, and the
/// parameters of `base`.
SymbolTable reduced_table(const SymbolTable& base);

/// Invariants from the closed-form flow. Pivot order: t, then x.
InvariantChart invariants(const VectorField& v, const SymbolTable& table);

/// v annihilates both invariants.
bool chart_is_invariant(const VectorField& v, const InvariantChart& chart, const SymbolTable& table);

struct ReducedEquation {
  Expr ode;            // in y and jets of w (see reduced_table)
  Expr removed_factor; // the nonzero factor divided out
};

/// Chain rule through the chart, elimination of x (or t) by y, and removal of
/// a monomial factor. Throws ResidualExplicitVariables if x or t survive.
ReducedEquation reduce_pde(const ProblemSpec& spec, const InvariantChart& chart);

/// True when a and b differ by a nonzero factor from Q(params).
bool proportional(const Expr& a, const Expr& b);

/// u(x, t) from a solution w = g(y) of the reduced equation; checks that it
/// solves every equation of the spec (throws ResidualNonzero otherwise).
Expr back_substitute(const ProblemSpec& spec, const InvariantChart& chart, const Expr& ode_solution);

/// Pr^n v (I); zero means I is a differential invariant.
Expr invariant_residual(const VectorField& v, const Expr& inv, int n, const SymbolTable& table);
bool verify_differential_invariant(const VectorField& v, const Expr& inv, int n, const SymbolTable& table);

}  // namespace liesym
