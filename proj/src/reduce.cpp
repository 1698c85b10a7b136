#include "liesym/reduce.hpp"

#include "liesym/error.hpp"
#include "liesym/vfield.hpp"

namespace liesym {

namespace {

const Var kW = Var::jet("w");
const Var kY = Var::symbol("y", SymbolRole::Reduction);

// Drops additive terms of e free of `keep` that v annihilates on their own.
Expr drop_invariant_terms(const Expr& e, const Var& keep, const VectorField& v, const SymbolTable& table) {
  Expr out;
  bool dropped_all = true;
  for (const auto& t : e.terms()) {
    Expr term = Expr::term(t.mono, t.coeff);
    if (!t.mono.exponent_of(keep).is_zero() || !apply(v, term, table).is_zero()) {
      out += term;
      dropped_all = false;
    }
  }
  return dropped_all ? e : out;
}

}  // namespace

SymbolTable reduced_table(const SymbolTable& base) {
  SymbolTable t;
  t.add_independent("y");
  t.add_dependent("w");
  for (const auto& p : base.parameters()) t.add_parameter(p, base.is_nonzero(p));
  return t;
}

InvariantChart invariants(const VectorField& v, const SymbolTable& table) {
  if (table.independents().size() != 2 || table.dependents().size() != 1)
    throw Error(ErrorCode::Unsupported, "invariant charts need two independent and one dependent variable");
  std::string s = "#s";
  OneParameterGroup g = exponentiate(v, table, s);
  Var sv = Var::symbol(s, SymbolRole::Group);
  for (int pivot : {1, 0}) {
    const Expr& c = v.xi[static_cast<std::size_t>(pivot)];
    if (c.is_zero()) continue;
    Var p = table.independent_var(pivot);
    Expr pe = Expr::atom(p);
    std::map<Var, Expr> elim;
    if (c.is_constant()) {
      elim.emplace(sv, -(pe.divided_by(c)));
    } else if (c.is_single_term() && c.terms()[0].mono == Monomial(p)) {
      Rational lambda = c.terms()[0].coeff.is_rational() ? c.terms()[0].coeff.rational_value() : Rational(0);
      if (lambda == 0) continue;
      elim.emplace(Var::exp(s), pe.pow(Frac::from_rational(-1 / lambda)));
    } else {
      continue;
    }
    int other = 1 - pivot;
    InvariantChart chart;
    chart.pivot = pivot;
    chart.y = substitute(g.maps[static_cast<std::size_t>(other)], elim);
    chart.y -= Expr(chart.y.constant_term());
    Expr w = substitute(g.maps[2], elim);
    w = drop_invariant_terms(w, Var::jet(table.dependents()[0]), v, table);
    chart.w = w;
    // w = A u + B
    Var u = Var::jet(table.dependents()[0]);
    auto parts = collect(w, [&](const Var& x) { return x == u; });
    Expr a, b;
    for (const auto& [m, coef] : parts) {
      if (m.empty())
        b = coef;
      else if (m == Monomial(u))
        a = coef;
      else
        throw Error(ErrorCode::Unsupported, "invariant is not affine in the dependent variable");
    }
    if (a.is_zero() || !a.is_single_term()) throw Error(ErrorCode::NoPivot, "invariant cannot be solved for the dependent variable");
    chart.reconstruction = (Expr::atom(kW) - b).divided_by(a);
    if (!chart_is_invariant(v, chart, table))
      throw Error(ErrorCode::Verification, "constructed invariants are not annihilated by the generator");
    return chart;
  }
  throw Error(ErrorCode::NoPivot, "generator moves no independent variable; no similarity variable exists");
}

bool chart_is_invariant(const VectorField& v, const InvariantChart& chart, const SymbolTable& table) {
  return apply(v, chart.y, table).is_zero() && apply(v, chart.w, table).is_zero();
}

bool proportional(const Expr& a, const Expr& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.size() != b.size()) return false;
  Coeff ratio = a.terms()[0].coeff / b.terms()[0].coeff;
  return a == ratio * b;
}

ReducedEquation reduce_pde(const ProblemSpec& spec, const InvariantChart& chart) {
  const SymbolTable& table = spec.table;
  Var xs[2] = {table.independent_var(0), table.independent_var(1)};
  Expr ydiff[2] = {partial_deriv(chart.y, xs[0]), partial_deriv(chart.y, xs[1])};
  auto chain = [&](const Expr& f, int dir) {
    return derive(f, [&](const Var& v) -> Expr {
      if (v == xs[dir]) return Expr(1);
      if (v.is_jet() && v.name == "w") return ydiff[dir] * Expr::atom(v.shifted(0));
      return Expr();
    });
  };
  const std::string dep = table.dependents()[0];
  auto jet_value = [&](const Var& j) {
    Expr e = chart.reconstruction;
    for (int k = 0; k < j.orders[0]; ++k) e = chain(e, 0);
    for (int k = 0; k < j.orders[1]; ++k) e = chain(e, 1);
    return e;
  };
  // eliminate one independent variable through y: y = A*x_k + B with A one term
  int elim_slot = -1;
  Expr elim_value;
  for (int k : {0, 1}) {
    if (!chart.y.contains(xs[k]) || chart.y.degree_in(xs[k]) != Frac(1)) continue;
    auto parts = collect(chart.y, [&](const Var& v) { return v == xs[k]; });
    if (parts.size() > 2) continue;
    Expr a = parts.count(Monomial(xs[k])) ? parts[Monomial(xs[k])] : Expr();
    Expr b = parts.count(Monomial()) ? parts[Monomial()] : Expr();
    if (a.is_zero() || !a.is_single_term()) continue;
    elim_slot = k;
    elim_value = (Expr::atom(kY) - b).divided_by(a);
    break;
  }
  if (elim_slot < 0) throw Error(ErrorCode::Unsupported, "similarity variable cannot be solved for x or t");

  std::vector<Expr> reduced;
  for (const auto& eq : spec.equations) {
    std::map<Var, Expr> b;
    for (const auto& v : eq.lhs.atoms())
      if (v.is_jet() && v.name == dep) b.emplace(v, jet_value(v));
    Expr r = substitute(substitute(eq.lhs, b), {{xs[elim_slot], elim_value}});
    reduced.push_back(r);
  }
  Expr r = reduced.at(0);
  if (r.is_zero()) return {r, Expr(1)};
  // divide by the lowest power of each remaining independent variable
  Monomial factor;
  for (const auto& x : xs) {
    bool first = true;
    Frac lo;
    for (const auto& t : r.terms()) {
      Frac e = t.mono.exponent_of(x);
      if (first || e < lo) lo = e;
      first = false;
    }
    if (!lo.is_zero()) factor = factor * Monomial(x, lo);
  }
  Expr removed = Expr::term(factor, Coeff(1));
  r = r.divided_by(removed);
  if (r.contains(xs[0]) || r.contains(xs[1]))
    throw Error(ErrorCode::ResidualExplicitVariables,
                "reduced equation still depends on " + table.independents()[0] + " or " + table.independents()[1] + ": " +
                    to_string(r, {&table, true}));
  Content c = content(r);
  bool safe = c.poly.is_constant() || c.poly.is_monomial();
  if (safe)
    for (const auto& p : c.poly.variables())
      if (!table.is_nonzero(p)) safe = false;
  if (safe && !c.poly.is_constant()) {
    Coeff k(c.poly);
    r = k.inverse() * r;
    removed = k * removed;
  }
  // w, w_y, ... to the reduced table's naming
  std::map<Var, Expr> rename;
  for (const auto& v : r.atoms())
    if (v == kY) rename.emplace(v, Expr::atom(Var::symbol("y", SymbolRole::Independent)));
  r = substitute(r, rename);
  return {r, removed};
}

Expr back_substitute(const ProblemSpec& spec, const InvariantChart& chart, const Expr& ode_solution) {
  Expr g = substitute(ode_solution, {{Var::symbol("y", SymbolRole::Independent), chart.y}, {kY, chart.y}});
  Expr u = substitute(chart.reconstruction, {{kW, g}});
  const std::string& dep = spec.table.dependents()[0];
  for (const auto& eq : spec.equations) {
    Expr res = evaluate_on(eq.lhs, dep, u, spec.table);
    if (!res.is_zero())
      throw Error(ErrorCode::ResidualNonzero, "u = " + to_string(u, {&spec.table, true}) +
                                                  " leaves the residual " + to_string(res, {&spec.table, true}));
  }
  return u;
}

Expr invariant_residual(const VectorField& v, const Expr& inv, int n, const SymbolTable& table) {
  if (max_jet_order(inv) > n) throw Error(ErrorCode::OrderTooLow, "invariant has higher order than requested");
  return apply(prolong(v, n, table), inv, table);
}

bool verify_differential_invariant(const VectorField& v, const Expr& inv, int n, const SymbolTable& table) {
  return invariant_residual(v, inv, n, table).is_zero();
}

}  // namespace liesym
