#pragma once

#include <string>
#include <vector>

#include "liesym/jet.hpp"
#include "liesym/vfield.hpp"

namespace liesym {

enum class NcMode { Tau1, Tau0 };

std::string to_string(NcMode mode);

/// First-order-in-t system on (u, v) obtained by writing v = u_xx: every
/// u_{xxJ} of the scalar equation becomes v_J. Equation 0 is the rewritten
/// equation (leading: the image of the original leading jet), equation 1 is
/// u_xx - v (leading u_xx).
struct AugmentedSystem {
  ProblemSpec system;
  std::string base;  // u
  std::string aux;   // v
};

AugmentedSystem augment(const ProblemSpec& spec, const std::string& aux = "v");

/// Invariant surface conditions of v, after normalisation. Tau1 divides by
/// the d_t coefficient; Tau0 needs a zero d_t coefficient and divides by the
/// d_x one. Throws Unnormalizable.
VectorField normalize_field(const VectorField& v, NcMode mode);
std::vector<Equation> surface_conditions(const VectorField& v, NcMode mode, const SymbolTable& table);

/// Pr v applied to both equations, with the auxiliary time derivative
/// eliminated through equation 0 and all other jets left free.
std::vector<Expr> nonclassical_residuals(const AugmentedSystem& sys, const VectorField& v);

/// The determining residuals for generic coefficient functions
/// xi, phi, psi of (x, t, u, v).
struct NonclassicalSystem {
  SymbolTable table;
  VectorField field;
  std::vector<Expr> residuals;
};
NonclassicalSystem nonclassical_determining(const AugmentedSystem& sys, NcMode mode);

struct CandidateCheck {
  VectorField normalized;
  std::vector<Expr> residuals;
  bool symbolic_zero = false;
  bool oracle_zero = false;
};
CandidateCheck check_candidate(const AugmentedSystem& sys, const VectorField& v, NcMode mode);

/// Classical generator lifted to (u, v): psi is the prolongation coefficient
/// at u_xx with u_{xxJ} -> v_J.
VectorField lift_classical(const AugmentedSystem& sys, const VectorField& classical);

/// Polynomial ansatz of total degree <= degree in (x, t, u, v) for the free
/// coefficients. v_J -> u_{xxJ} (J nonempty) is applied before collecting.
/// Solutions form particular + span(homogeneous).
struct RestrictedSolution {
  bool consistent = false;
  VectorField particular;
  std::vector<VectorField> homogeneous;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
};
RestrictedSolution solve_restricted(const AugmentedSystem& sys, NcMode mode, int degree);

/// Whether every field of the solution lies in the span of the lifted
/// classical generators.
bool only_classical(const RestrictedSolution& sol, const std::vector<VectorField>& lifted);

}  // namespace liesym
