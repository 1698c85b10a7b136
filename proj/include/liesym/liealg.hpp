#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liesym/linalg.hpp"
#include "liesym/vfield.hpp"

namespace liesym {

/// [v, w] with coefficients v(w^k) - w(v^k).
VectorField bracket(const VectorField& v, const VectorField& w, const SymbolTable& table);

class LieAlgebra {
 public:
  /// Computes all structure constants; throws ClosureFailure when a bracket
  /// leaves the span of the basis.
  LieAlgebra(std::vector<VectorField> basis, const SymbolTable& table);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<VectorField>& basis() const { return basis_; }
  const SymbolTable& table() const { return table_; }
  /// Coordinates of [v_i, v_j].
  const CVector& structure(std::size_t i, std::size_t j) const { return c_[i][j]; }
  /// Matrix of ad(v_i): column j holds the coordinates of [v_i, v_j].
  CMatrix ad(std::size_t i) const;
  /// Bracket of two coordinate vectors.
  CVector bracket(const CVector& x, const CVector& y) const;
  VectorField field(const CVector& x) const;

  /// Dimensions g, [g,g], ... down to 0 or to a fixed point.
  std::vector<std::size_t> derived_series() const;
  bool is_solvable() const { return derived_series().back() == 0; }

  /// Matrix of Ad(exp(eps v_i)) acting on coordinate columns: exp(-eps ad(v_i)).
  EMatrix adjoint_exp(std::size_t i, const std::string& eps) const;
  /// Nilpotency index of ad(v_i) (the Lie series terminates after that many
  /// terms), or 0 if ad(v_i) is not nilpotent.
  std::size_t series_length(std::size_t i) const;
  /// Eigenvalues of ad(v_i) with multiplicities.
  std::vector<std::pair<Rational, int>> ad_eigenvalues(std::size_t i) const;

 private:
  std::vector<VectorField> basis_;
  SymbolTable table_;
  std::vector<std::vector<CVector>> c_;
};

struct ReductionStep {
  std::size_t generator;
  Coeff eps;
};

struct OrbitResult {
  CVector representative;
  std::vector<ReductionStep> word;
  Coeff scale = Coeff(1);
  bool progressed = false;
};

/// Greedy adjoint simplification: while some Ad(exp(eps v_i)) changes a
/// coefficient affinely in eps, pick eps to zero it if that increases the
/// number of zero coordinates. Finally the last nonzero coordinate is scaled to 1.
OrbitResult orbit_reduce(const LieAlgebra& g, const CVector& v);
/// Applies Ad(exp(eps v_i)) for each step in order and then the scale.
CVector replay(const LieAlgebra& g, const CVector& v, const std::vector<ReductionStep>& word, const Coeff& scale);

}  // namespace liesym
