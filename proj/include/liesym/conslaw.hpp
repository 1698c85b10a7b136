#pragma once

#include <string>
#include <vector>

#include "liesym/jet.hpp"
#include "liesym/linalg.hpp"

namespace liesym {

/// Variational derivative sum_J (-D)_J d f / d u_J, one entry per dependent.
std::vector<Expr> euler_apply(const Expr& f, const SymbolTable& table);

/// x^p t^q m with p + q <= xt_degree and m ranging over 1 and every jet of
/// order 1..jet_order of the first dependent.
std::vector<Expr> multiplier_ansatz(const SymbolTable& table, int jet_order, int xt_degree);

struct MultiplierSpace {
  std::vector<Expr> multipliers;       // reduced echelon form over the ansatz terms
  std::vector<CVector> coordinates;
  std::size_t equations = 0;
  std::vector<ParamPoly> assumptions;
};

/// Multipliers L in the span of `ansatz` with E[L * Delta] = 0 identically.
MultiplierSpace find_multipliers(const ProblemSpec& spec, const std::vector<Expr>& ansatz);

/// C(i1+i2, i1) C(k1+k2-i1-i2-1, k1-i1-1) / C(k1+k2, k1)
Rational homotopy_coefficient(int i1, int i2, int k1, int k2);

struct Integrands {
  Expr x;
  Expr t;
};
Integrands homotopy_integrands(const Expr& f, const SymbolTable& table);

struct FluxPair {
  Expr psi;  // t-component
  Expr phi;  // x-component
};

/// Fluxes with D_x phi + D_t psi = f. Throws NotADivergence or ZeroJetDegree.
FluxPair homotopy(const Expr& f, const SymbolTable& table);

Expr divergence(const FluxPair& fp, const SymbolTable& table);

/// Pairs whose difference has identically vanishing divergence.
bool equivalent_fluxes(const FluxPair& a, const FluxPair& b, const SymbolTable& table);

struct ConservationLaw {
  Expr multiplier;
  FluxPair flux;
};

/// Fluxes for multiplier * lhs of the (single) equation, identity checked.
ConservationLaw conservation_law(const ProblemSpec& spec, const Expr& multiplier);

}  // namespace liesym
