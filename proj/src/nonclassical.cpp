#include "liesym/nonclassical.hpp"

#include "liesym/detsolve.hpp"
#include "liesym/error.hpp"
#include "liesym/oracle.hpp"

namespace liesym {

std::string to_string(NcMode mode) { return mode == NcMode::Tau1 ? "tau1" : "tau0"; }

namespace {

Expr to_aux(const Expr& e, const std::string& base, const std::string& aux) {
  std::map<Var, Expr> m;
  for (const auto& v : e.atoms())
    if (v.is_jet() && v.name == base && v.orders[0] >= 2) m[v] = Expr::atom(Var::jet(aux, v.orders[0] - 2, v.orders[1]));
  return m.empty() ? e : substitute(e, m);
}

// v_J -> u_{xxJ} for nonempty J
Expr from_aux(const Expr& e, const std::string& base, const std::string& aux) {
  std::map<Var, Expr> m;
  for (const auto& v : e.atoms())
    if (v.is_jet() && v.name == aux && v.order() > 0) m[v] = Expr::atom(Var::jet(base, v.orders[0] + 2, v.orders[1]));
  return m.empty() ? e : substitute(e, m);
}

Expr tag(const std::vector<Expr>& rs) {
  Expr out;
  for (std::size_t nu = 0; nu < rs.size(); ++nu)
    out += rs[nu] * Expr::atom(Var::symbol("#eq" + std::to_string(nu), SymbolRole::Unknown));
  return out;
}

std::set<std::string> nonzero_params(const SymbolTable& table) {
  std::set<std::string> out;
  for (const auto& p : table.parameters())
    if (table.is_nonzero(p)) out.insert(p);
  return out;
}

}  // namespace

AugmentedSystem augment(const ProblemSpec& spec, const std::string& aux) {
  if (spec.equations.size() != 1 || spec.table.dependents().size() != 1 || spec.table.independents().size() != 2)
    throw Error(ErrorCode::Unsupported, "augmentation needs one equation in one dependent and two independent variables");
  AugmentedSystem out;
  out.base = spec.table.dependents()[0];
  out.aux = aux;
  out.system.table = spec.table;
  out.system.table.add_dependent(aux);
  const Equation& eq = spec.equations[0];
  Expr lhs = to_aux(eq.lhs, out.base, aux);
  Var lead = eq.leading;
  if (lead.orders[0] >= 2) lead = Var::jet(aux, lead.orders[0] - 2, lead.orders[1]);
  if (!lhs.contains(lead)) throw Error(ErrorCode::Unsupported, "leading jet lost in augmentation");
  out.system.equations.push_back({lhs, lead});
  out.system.equations.push_back({Expr::atom(Var::jet(out.base, 2, 0)) - Expr::atom(Var::jet(aux)), Var::jet(out.base, 2, 0)});
  return out;
}

VectorField normalize_field(const VectorField& v, NcMode mode) {
  if (v.xi.size() != 2) throw Error(ErrorCode::Unsupported, "nonclassical modes need two independent variables");
  Expr lead = mode == NcMode::Tau1 ? v.xi[1] : v.xi[0];
  if (mode == NcMode::Tau0 && !v.xi[1].is_zero())
    throw Error(ErrorCode::Unnormalizable, "tau0 mode needs a vanishing d_t coefficient");
  if (lead.is_zero())
    throw Error(ErrorCode::Unnormalizable,
                std::string("the d_") + (mode == NcMode::Tau1 ? "t" : "x") + " coefficient vanishes identically");
  if (lead == Expr(1)) return v;
  VectorField out = v;
  try {
    for (auto* part : {&out.xi, &out.phi})
      for (auto& c : *part) c = c.divided_by(lead);
  } catch (const Error& e) {
    throw Error(ErrorCode::Unnormalizable, std::string("cannot divide by the normalising coefficient: ") + e.what());
  }
  return out;
}

std::vector<Equation> surface_conditions(const VectorField& v, NcMode mode, const SymbolTable& table) {
  VectorField n = normalize_field(v, mode);
  std::vector<Equation> out;
  for (std::size_t a = 0; a < n.phi.size(); ++a) {
    const std::string& dep = table.dependents().at(a);
    Expr q = n.xi[0] * Expr::atom(Var::jet(dep, 1, 0)) + n.xi[1] * Expr::atom(Var::jet(dep, 0, 1)) - n.phi[a];
    out.push_back({q, mode == NcMode::Tau1 ? Var::jet(dep, 0, 1) : Var::jet(dep, 1, 0)});
  }
  return out;
}

std::vector<Expr> nonclassical_residuals(const AugmentedSystem& sys, const VectorField& v) {
  const auto& spec = sys.system;
  int n = 0;
  for (const auto& eq : spec.equations) n = std::max(n, max_jet_order(eq.lhs));
  auto pv = prolong(v, n, spec.table);
  Reducer red(spec.table);
  red.add_rule(spec.equations[0].leading, solve_leading(spec, 0));
  std::vector<Expr> out;
  for (const auto& eq : spec.equations) out.push_back(red.reduce(apply(pv, eq.lhs, spec.table)));
  return out;
}

NonclassicalSystem nonclassical_determining(const AugmentedSystem& sys, NcMode mode) {
  NonclassicalSystem out;
  out.table = sys.system.table;
  std::vector<std::string> args = out.table.independents();
  args.push_back(sys.base);
  args.push_back(sys.aux);
  for (const char* f : {"xi", "phi", "psi"}) out.table.add_function(f, args);
  out.field = VectorField::zero(out.table);
  auto fn = [](const char* name) { return Expr::atom(Var::function(name)); };
  if (mode == NcMode::Tau1) {
    out.field.xi = {fn("xi"), Expr(1)};
  } else {
    out.field.xi = {Expr(1), Expr()};
  }
  out.field.phi = {fn("phi"), fn("psi")};
  AugmentedSystem local = sys;
  local.system.table = out.table;
  out.residuals = nonclassical_residuals(local, out.field);
  return out;
}

CandidateCheck check_candidate(const AugmentedSystem& sys, const VectorField& v, NcMode mode) {
  CandidateCheck out;
  out.normalized = normalize_field(v, mode);
  out.residuals = nonclassical_residuals(sys, out.normalized);
  out.symbolic_zero = true;
  out.oracle_zero = true;
  Oracle oracle;
  for (const auto& r : out.residuals) {
    if (!r.is_zero()) out.symbolic_zero = false;
    if (!oracle.vanishes(r)) out.oracle_zero = false;
  }
  return out;
}

VectorField lift_classical(const AugmentedSystem& sys, const VectorField& classical) {
  const SymbolTable& table = sys.system.table;
  if (classical.phi.size() != 1) throw Error(ErrorCode::Validation, "classical field must act on one dependent variable");
  VectorField scalar = classical;
  VectorField out = VectorField::zero(table);
  out.xi = classical.xi;
  out.phi[0] = classical.phi[0];
  scalar.phi = {classical.phi[0], Expr()};
  auto pv = prolong(scalar, 2, table);
  out.phi[1] = to_aux(pv.coeffs.at(Var::jet(sys.base, 2, 0)), sys.base, sys.aux);
  return out;
}

RestrictedSolution solve_restricted(const AugmentedSystem& sys, NcMode mode, int degree) {
  const SymbolTable& table = sys.system.table;
  AnsatzSpec all = AnsatzSpec::polynomial(table, degree);
  AnsatzSpec ansatz;
  for (const auto& e : all.entries) {
    bool fixed = mode == NcMode::Tau1 ? e.component == 1 : e.component <= 1;
    if (!fixed) ansatz.entries.push_back(e);
  }
  VectorField base = VectorField::zero(table);
  base.xi[mode == NcMode::Tau1 ? 1 : 0] = Expr(1);

  auto column = [&](const VectorField& f) {
    auto rs = nonclassical_residuals(sys, f);
    for (auto& r : rs) r = from_aux(r, sys.base, sys.aux);
    return tag(rs);
  };
  std::vector<Expr> cols;
  for (std::size_t k = 0; k < ansatz.entries.size(); ++k) cols.push_back(column(ansatz.field(k, table)));
  cols.push_back(column(base));
  LinearSystem ls = collect_linear(cols);

  RestrictedSolution out;
  out.unknowns = ansatz.entries.size();
  out.equations = ls.rows.size();
  CMatrix a;
  CVector rhs;
  for (auto& row : ls.rows) {
    rhs.push_back(-row.back());
    row.pop_back();
    a.push_back(row);
  }
  auto nz = nonzero_params(table);
  std::optional<CVector> part;
  if (a.empty())
    part = CVector(out.unknowns, Coeff(0));
  else
    part = solve(a, rhs, out.unknowns);
  if (!part) return out;
  out.consistent = true;
  out.particular = base + ansatz.field(*part, table);
  LinearSystem hom{a, out.unknowns, ls.labels};
  for (const auto& c : solve_linear(hom, nz, nullptr)) out.homogeneous.push_back(ansatz.field(c, table));
  return out;
}

bool only_classical(const RestrictedSolution& sol, const std::vector<VectorField>& lifted) {
  if (!sol.consistent) return true;
  if (!express(sol.particular, lifted)) return false;
  for (const auto& h : sol.homogeneous)
    if (!express(h, lifted)) return false;
  return true;
}

}  // namespace liesym
