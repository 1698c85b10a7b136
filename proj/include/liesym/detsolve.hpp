#pragma once

#include <string>
#include <vector>

#include "liesym/jet.hpp"
#include "liesym/linalg.hpp"
#include "liesym/vfield.hpp"

namespace liesym {

/// One unknown constant per entry: the vector-field component it multiplies
/// (independents first, then dependents) and the basis monomial.
struct AnsatzEntry {
  std::size_t component;
  Expr monomial;
};

struct AnsatzSpec {
  std::vector<AnsatzEntry> entries;

  /// Every monomial of total degree <= degree in the independents and
  /// dependents, for every component.
  static AnsatzSpec polynomial(const SymbolTable& table, int degree);

  VectorField field(std::size_t k, const SymbolTable& table) const;
  VectorField field(const CVector& c, const SymbolTable& table) const;
};

/// Rows are coefficients of collected monomials of a residual that is linear
/// in the unknown constants.
struct LinearSystem {
  CMatrix rows;
  std::size_t unknowns = 0;
  std::vector<Monomial> labels;
};

/// Collects sum_k c_k r_k over all atom monomials.
LinearSystem collect_linear(const std::vector<Expr>& residuals);

struct SolutionSpace {
  std::vector<CVector> vectors;   // reduced echelon form over the constants
  std::vector<VectorField> basis;
  std::size_t rank = 0;
  std::size_t unknowns = 0;
  std::vector<ParamPoly> assumptions;  // parameter polynomials assumed nonzero
};

/// Pr v applied to each equation, reduced modulo the solved system.
std::vector<Expr> invariance_residuals(const ProblemSpec& spec, const VectorField& v);
Expr invariance_residual(const ProblemSpec& spec, const VectorField& v);

LinearSystem generate_determining(const ProblemSpec& spec, const AnsatzSpec& ansatz);

/// Nullspace basis in reduced echelon form, each vector with leading entry 1.
std::vector<CVector> solve_linear(const LinearSystem& sys, const std::set<std::string>& nonzero,
                                  std::vector<ParamPoly>* assumptions);

SolutionSpace solve_determining(const LinearSystem& sys, const AnsatzSpec& ansatz, const SymbolTable& table);

/// Coordinates of v in the span of `basis`, or nullopt.
std::optional<CVector> express(const VectorField& v, const std::vector<VectorField>& basis);

}  // namespace liesym
