#pragma once

#include <map>
#include <vector>

#include "liesym/expr.hpp"
#include "liesym/symbols.hpp"

namespace liesym {

/// xi[k] d/dx_k + phi[alpha] d/du^alpha, indexed like the symbol table's
/// independents and dependents.
struct VectorField {
  std::vector<Expr> xi;
  std::vector<Expr> phi;

  static VectorField zero(const SymbolTable& table);
  /// From strings in the order of the independents, then dependents.
  static VectorField parse(const std::vector<std::string>& coeffs, const SymbolTable& table);

  bool is_zero() const;
  /// True when some coefficient depends on jet variables of order >= 1.
  bool depends_on_derivatives() const;

  VectorField operator+(const VectorField& o) const;
  VectorField operator-(const VectorField& o) const;
  friend VectorField operator*(const Expr& c, const VectorField& v);
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.xi == b.xi && a.phi == b.phi; }
};

std::string to_string(const VectorField& v, const SymbolTable& table, bool pretty = true);

struct ProlongedVectorField {
  VectorField base;
  int order = 0;
  /// phi^J for every dependent and every 0 <= #J <= order, keyed by jet variable.
  std::map<Var, Expr> coeffs;
};

/// Prolongation via phi^{J,i} = D_i phi^J - sum_k (D_i xi^k) u_{J,k}; mixed
/// indices are reached x-derivatives first, then t.
ProlongedVectorField prolong(const VectorField& v, int n, const SymbolTable& table);

/// Characteristic-form prolongation coefficient D_J(phi - xi^k u_k) + xi^k u_{J,k}.
Expr prolong_closed_form(const VectorField& v, const Var& jet, const SymbolTable& table);

/// Pr v applied to e.
Expr apply(const ProlongedVectorField& pv, const Expr& e, const SymbolTable& table);
/// v applied to a function of the base coordinates.
Expr apply(const VectorField& v, const Expr& e, const SymbolTable& table);

}  // namespace liesym
