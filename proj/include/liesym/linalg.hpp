#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liesym/coeff.hpp"
#include "liesym/expr.hpp"

namespace liesym {

using CMatrix = std::vector<std::vector<Coeff>>;
using CVector = std::vector<Coeff>;
using EMatrix = std::vector<std::vector<Expr>>;

CMatrix zero_matrix(std::size_t rows, std::size_t cols);
CMatrix identity_matrix(std::size_t n);
CMatrix multiply(const CMatrix& a, const CMatrix& b);
EMatrix multiply(const EMatrix& a, const EMatrix& b);
EMatrix to_expr_matrix(const CMatrix& m);

struct Rref {
  CMatrix matrix;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  /// Polynomials in the parameters that were assumed nonzero when used as pivots.
  std::vector<ParamPoly> assumptions;
};

/// Reduced row echelon form over Q(params). Pivots prefer rational entries,
/// then monomials in parameters declared nonzero; any other pivot is recorded
/// as an assumption.
Rref rref(CMatrix m, std::size_t cols, const std::set<std::string>& nonzero_params = {});

/// Basis of {c : m c = 0}: one vector per free column, with a 1 in that column.
std::vector<CVector> nullspace(const CMatrix& m, std::size_t cols, const std::set<std::string>& nonzero_params = {},
                               std::vector<ParamPoly>* assumptions = nullptr);

std::size_t rank(const CMatrix& m, std::size_t cols);

/// Some solution of a x = b, or nullopt when inconsistent.
std::optional<CVector> solve(const CMatrix& a, const CVector& b, std::size_t cols);

std::optional<CMatrix> inverse(const CMatrix& m);

/// Coefficients of det(lambda I - m), highest degree first (leading 1).
std::vector<Coeff> characteristic_polynomial(const CMatrix& m);

/// Rational roots with multiplicities of a polynomial with rational
/// coefficients (highest degree first). Throws IrrationalEigenvalue when the
/// polynomial does not split over Q.
std::vector<std::pair<Rational, int>> rational_roots(const std::vector<Rational>& poly);

/// exp(eps * m) for a matrix with rational eigenvalues, entries built from
/// powers of eps and atoms exp(q*eps). `eps` must be a group symbol.
EMatrix exp_matrix(const CMatrix& m, const std::string& eps);

}  // namespace liesym
