#include "liesym/detsolve.hpp"

#include "liesym/error.hpp"

namespace liesym {

namespace {

void monomials_up_to(const std::vector<Var>& vars, std::size_t from, int degree, const Expr& prefix,
                     std::vector<Expr>& out) {
  out.push_back(prefix);
  if (degree == 0) return;
  for (std::size_t i = from; i < vars.size(); ++i) monomials_up_to(vars, i, degree - 1, prefix * Expr::atom(vars[i]), out);
}

}  // namespace

AnsatzSpec AnsatzSpec::polynomial(const SymbolTable& table, int degree) {
  std::vector<Var> vars;
  for (std::size_t i = 0; i < table.independents().size(); ++i) vars.push_back(table.independent_var(static_cast<int>(i)));
  for (const auto& d : table.dependents()) vars.push_back(Var::jet(d));
  std::vector<Expr> monos;
  monomials_up_to(vars, 0, degree, Expr(1), monos);
  std::stable_sort(monos.begin(), monos.end(), [](const Expr& a, const Expr& b) {
    return a.terms()[0].mono.degree() < b.terms()[0].mono.degree();
  });
  AnsatzSpec spec;
  std::size_t components = vars.size();
  for (std::size_t c = 0; c < components; ++c)
    for (const auto& m : monos) spec.entries.push_back({c, m});
  return spec;
}

VectorField AnsatzSpec::field(std::size_t k, const SymbolTable& table) const {
  VectorField v = VectorField::zero(table);
  const auto& e = entries.at(k);
  if (e.component < v.xi.size())
    v.xi[e.component] = e.monomial;
  else
    v.phi.at(e.component - v.xi.size()) = e.monomial;
  return v;
}

VectorField AnsatzSpec::field(const CVector& c, const SymbolTable& table) const {
  VectorField v = VectorField::zero(table);
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (!c[k].is_zero()) v = v + Expr(c[k]) * field(k, table);
  return v;
}

LinearSystem collect_linear(const std::vector<Expr>& residuals) {
  LinearSystem sys;
  sys.unknowns = residuals.size();
  std::map<Monomial, std::size_t> index;
  for (std::size_t k = 0; k < residuals.size(); ++k) {
    for (const auto& t : residuals[k].terms()) {
      auto [it, fresh] = index.try_emplace(t.mono, sys.rows.size());
      if (fresh) {
        sys.rows.emplace_back(residuals.size(), Coeff(0));
        sys.labels.push_back(t.mono);
      }
      sys.rows[it->second][k] = t.coeff;
    }
  }
  return sys;
}

std::vector<Expr> invariance_residuals(const ProblemSpec& spec, const VectorField& v) {
  int n = 0;
  for (const auto& eq : spec.equations) n = std::max(n, max_jet_order(eq.lhs));
  auto pv = prolong(v, n, spec.table);
  Reducer red(spec);
  std::vector<Expr> out;
  for (const auto& eq : spec.equations) out.push_back(red.reduce(apply(pv, eq.lhs, spec.table)));
  return out;
}

Expr invariance_residual(const ProblemSpec& spec, const VectorField& v) { return invariance_residuals(spec, v).at(0); }

LinearSystem generate_determining(const ProblemSpec& spec, const AnsatzSpec& ansatz) {
  // residuals of distinct equations must not mix: tag them by a marker atom
  std::vector<Expr> residuals;
  for (std::size_t k = 0; k < ansatz.entries.size(); ++k) {
    auto rs = invariance_residuals(spec, ansatz.field(k, spec.table));
    Expr tagged;
    for (std::size_t nu = 0; nu < rs.size(); ++nu)
      tagged += rs.size() == 1 ? rs[nu]
                               : rs[nu] * Expr::atom(Var::symbol("#eq" + std::to_string(nu), SymbolRole::Unknown));
    residuals.push_back(std::move(tagged));
  }
  return collect_linear(residuals);
}

std::vector<CVector> solve_linear(const LinearSystem& sys, const std::set<std::string>& nonzero,
                                  std::vector<ParamPoly>* assumptions) {
  auto ns = nullspace(sys.rows, sys.unknowns, nonzero, assumptions);
  if (ns.empty()) return ns;
  Rref canon = rref(ns, sys.unknowns, nonzero);
  return canon.matrix;
}

SolutionSpace solve_determining(const LinearSystem& sys, const AnsatzSpec& ansatz, const SymbolTable& table) {
  std::set<std::string> nonzero;
  for (const auto& p : table.parameters())
    if (table.is_nonzero(p)) nonzero.insert(p);
  SolutionSpace out;
  out.unknowns = sys.unknowns;
  out.vectors = solve_linear(sys, nonzero, &out.assumptions);
  out.rank = sys.unknowns - out.vectors.size();
  for (const auto& c : out.vectors) out.basis.push_back(ansatz.field(c, table));
  return out;
}

std::optional<CVector> express(const VectorField& v, const std::vector<VectorField>& basis) {
  // one marker atom per component keeps components apart
  auto flatten = [](const VectorField& f) {
    Expr e;
    std::size_t i = 0;
    for (const auto* part : {&f.xi, &f.phi})
      for (const auto& c : *part) e += c * Expr::atom(Var::symbol("#c" + std::to_string(i++), SymbolRole::Unknown));
    return e;
  };
  std::vector<Expr> cols;
  for (const auto& b : basis) cols.push_back(flatten(b));
  cols.push_back(flatten(v));
  LinearSystem sys = collect_linear(cols);
  CMatrix a;
  CVector rhs;
  for (auto& row : sys.rows) {
    rhs.push_back(row.back());
    row.pop_back();
    a.push_back(row);
  }
  if (a.empty()) return CVector(basis.size(), Coeff(0));
  auto x = solve(a, rhs, basis.size());
  return x;
}

}  // namespace liesym
