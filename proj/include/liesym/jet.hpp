#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liesym/expr.hpp"
#include "liesym/symbols.hpp"

namespace liesym {

struct Equation {
  Expr lhs;      // the equation is lhs = 0
  Var leading;   // jet variable the equation is solved for
};

/// A PDE system: symbols in scope plus equations with their leading jets.
struct ProblemSpec {
  SymbolTable table;
  std::vector<Equation> equations;

  /// u_t - u_xxt + a*u_x*(1 - u_t) = 0 with leading u_xxt.
  static ProblemSpec hirota_ramani();
};

/// Total derivative in the independent direction `dir` (slot 0 or 1).
Expr total_derivative(const Expr& e, int dir, const SymbolTable& table);
/// Iterated total derivative D_x^k1 D_t^k2.
Expr total_derivative(const Expr& e, int k1, int k2, const SymbolTable& table);

/// The expression the leading jet equals on solutions of equation nu.
Expr solve_leading(const ProblemSpec& spec, std::size_t nu);
/// Same for an equation given directly.
Expr solve_leading(const Expr& lhs, const Var& leading);

/// Maximal x-order and t-order per dependent variable (only those present).
std::map<std::string, std::pair<int, int>> jet_orders(const Expr& e);
/// Highest total jet order present (0 when no jets occur).
int max_jet_order(const Expr& e);

/// Rewrites expressions modulo solved equations u_K = rhs and all their
/// differential consequences u_{K+L} = D_L rhs.
class Reducer {
 public:
  Reducer(const SymbolTable& table) : table_(&table) {}  // NOLINT
  explicit Reducer(const ProblemSpec& spec);

  void add_rule(const Var& leading, const Expr& rhs);
  Expr reduce(const Expr& e);
  /// The reduced value of a single jet variable, or nullopt if it is not reducible.
  std::optional<Expr> reduced_jet(const Var& jet);

 private:
  const SymbolTable* table_;
  std::vector<std::pair<Var, Expr>> rules_;
  std::map<Var, Expr> cache_;
};

/// Substitutes u_J -> d^J f for an explicit function f of the independent
/// variables (dependent variable `dep`).
Expr evaluate_on(const Expr& e, const std::string& dep, const Expr& f, const SymbolTable& table);

}  // namespace liesym
