#include "liesym/conslaw.hpp"

#include "liesym/detsolve.hpp"
#include "liesym/error.hpp"

namespace liesym {

namespace {

Expr minus_d(const Expr& e, int kx, int kt, const SymbolTable& table) {
  Expr d = total_derivative(e, kx, kt, table);
  return (kx + kt) % 2 ? -d : d;
}

// total degree in jet atoms of a monomial
Frac jet_degree(const Monomial& m) {
  Frac d(0);
  for (const auto& f : m.factors())
    if (f.var.is_jet()) d = d + f.exp;
  return d;
}

}  // namespace

std::vector<Expr> euler_apply(const Expr& f, const SymbolTable& table) {
  auto orders = jet_orders(f);
  std::vector<Expr> out;
  for (const auto& dep : table.dependents()) {
    Expr acc;
    auto it = orders.find(dep);
    if (it != orders.end()) {
      auto [m1, m2] = it->second;
      for (int k1 = 0; k1 <= m1; ++k1)
        for (int k2 = 0; k2 <= m2; ++k2) {
          Expr p = partial_deriv(f, Var::jet(dep, k1, k2));
          if (!p.is_zero()) acc += minus_d(p, k1, k2, table);
        }
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<Expr> multiplier_ansatz(const SymbolTable& table, int jet_order, int xt_degree) {
  const std::string& dep = table.dependents().at(0);
  std::vector<Expr> ms{Expr(1)};
  for (int n = 1; n <= jet_order; ++n)
    for (int k2 = 0; k2 <= n; ++k2) ms.push_back(Expr::atom(Var::jet(dep, n - k2, k2)));
  Expr x = Expr::atom(table.independent_var(0)), t = Expr::atom(table.independent_var(1));
  std::vector<Expr> out;
  for (int deg = 0; deg <= xt_degree; ++deg)
    for (int q = 0; q <= deg; ++q)
      for (const auto& m : ms) out.push_back(x.pow(deg - q) * t.pow(q) * m);
  return out;
}

MultiplierSpace find_multipliers(const ProblemSpec& spec, const std::vector<Expr>& ansatz) {
  if (spec.equations.size() != 1) throw Error(ErrorCode::Unsupported, "multipliers are computed for a single equation");
  MultiplierSpace out;
  if (ansatz.empty()) return out;
  const Expr& lhs = spec.equations[0].lhs;
  std::vector<Expr> cols;
  for (const auto& m : ansatz) {
    auto e = euler_apply(m * lhs, spec.table);
    Expr tagged;
    for (std::size_t j = 0; j < e.size(); ++j)
      tagged += e.size() == 1 ? e[j] : e[j] * Expr::atom(Var::symbol("#dep" + std::to_string(j), SymbolRole::Unknown));
    cols.push_back(tagged);
  }
  LinearSystem sys = collect_linear(cols);
  out.equations = sys.rows.size();
  std::set<std::string> nz;
  for (const auto& p : spec.table.parameters())
    if (spec.table.is_nonzero(p)) nz.insert(p);
  out.coordinates = solve_linear(sys, nz, &out.assumptions);
  for (const auto& c : out.coordinates) {
    Expr m;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero()) m += Expr(c[k]) * ansatz[k];
    // leading printed term gets coefficient 1
    if (!m.is_zero()) m = m * Expr(m.terms()[0].coeff.inverse());
    out.multipliers.push_back(m);
  }
  return out;
}

Rational homotopy_coefficient(int i1, int i2, int k1, int k2) {
  return Rational(binomial(i1 + i2, i1) * binomial(k1 + k2 - i1 - i2 - 1, k1 - i1 - 1)) /
         Rational(binomial(k1 + k2, k1));
}

Integrands homotopy_integrands(const Expr& f, const SymbolTable& table) {
  Integrands out;
  auto orders = jet_orders(f);
  for (const auto& [dep, mo] : orders) {
    auto [m1, m2] = mo;
    for (int k1 = 0; k1 <= m1; ++k1)
      for (int k2 = 0; k2 <= m2; ++k2) {
        Expr p = partial_deriv(f, Var::jet(dep, k1, k2));
        if (p.is_zero()) continue;
        for (int i1 = 0; i1 < k1; ++i1)
          for (int i2 = 0; i2 <= k2; ++i2)
            out.x += Expr(homotopy_coefficient(i1, i2, k1, k2)) * Expr::atom(Var::jet(dep, i1, i2)) *
                     minus_d(p, k1 - i1 - 1, k2 - i2, table);
        for (int i1 = 0; i1 <= k1; ++i1)
          for (int i2 = 0; i2 < k2; ++i2)
            out.t += Expr(homotopy_coefficient(i2, i1, k2, k1)) * Expr::atom(Var::jet(dep, i1, i2)) *
                     minus_d(p, k1 - i1, k2 - i2 - 1, table);
      }
  }
  return out;
}

FluxPair homotopy(const Expr& f, const SymbolTable& table) {
  for (const auto& t : f.terms())
    if (jet_degree(t.mono).num == 0)
      throw Error(ErrorCode::ZeroJetDegree, "term without jet variables: " + to_string(Expr::term(t.mono, t.coeff), {&table, true}));
  auto e = euler_apply(f, table);
  for (const auto& r : e)
    if (!r.is_zero())
      throw Error(ErrorCode::NotADivergence, "Euler operator does not vanish: " + to_string(r, {&table, true}));
  auto in = homotopy_integrands(f, table);
  auto scale = [](const Expr& integrand) {
    Expr out;
    for (const auto& t : integrand.terms()) {
      Frac d = jet_degree(t.mono);
      out += Expr::term(t.mono, t.coeff * Coeff(Rational(1) / d.to_rational()));
    }
    return out;
  };
  return {scale(in.t), scale(in.x)};
}

Expr divergence(const FluxPair& fp, const SymbolTable& table) {
  return total_derivative(fp.phi, 0, table) + total_derivative(fp.psi, 1, table);
}

bool equivalent_fluxes(const FluxPair& a, const FluxPair& b, const SymbolTable& table) {
  return divergence({a.psi - b.psi, a.phi - b.phi}, table).is_zero();
}

ConservationLaw conservation_law(const ProblemSpec& spec, const Expr& multiplier) {
  if (spec.equations.size() != 1) throw Error(ErrorCode::Unsupported, "conservation laws are computed for a single equation");
  Expr f = multiplier * spec.equations[0].lhs;
  ConservationLaw law{multiplier, homotopy(f, spec.table)};
  if (!(divergence(law.flux, spec.table) - f).is_zero())
    throw Error(ErrorCode::Verification, "divergence identity failed");
  return law;
}

}  // namespace liesym
