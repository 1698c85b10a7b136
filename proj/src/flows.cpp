#include "liesym/flows.hpp"

#include "liesym/error.hpp"
#include "liesym/linalg.hpp"

namespace liesym {

namespace {

std::vector<Var> coordinates(const SymbolTable& table) {
  std::vector<Var> z;
  for (std::size_t i = 0; i < table.independents().size(); ++i) z.push_back(table.independent_var(static_cast<int>(i)));
  for (const auto& d : table.dependents()) z.push_back(Var::jet(d));
  return z;
}

std::vector<Expr> components(const VectorField& v) {
  std::vector<Expr> c = v.xi;
  c.insert(c.end(), v.phi.begin(), v.phi.end());
  return c;
}

std::map<Var, Expr> bind_coords(const std::vector<Var>& z, const std::vector<Expr>& values) {
  std::map<Var, Expr> b;
  for (std::size_t i = 0; i < z.size(); ++i) b.emplace(z[i], values[i]);
  return b;
}

}  // namespace

OneParameterGroup exponentiate(const VectorField& v, const SymbolTable& table, const std::string& s) {
  auto z = coordinates(table);
  auto comp = components(v);
  std::size_t n = z.size();
  CMatrix h = zero_matrix(n + 1, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& t : comp[r].terms()) {
      const auto& fs = t.mono.factors();
      if (fs.empty()) {
        h[r][n] = t.coeff;
        continue;
      }
      std::size_t c = n;
      if (fs.size() == 1 && fs[0].exp == Frac(1))
        for (std::size_t k = 0; k < n; ++k)
          if (z[k] == fs[0].var) c = k;
      if (c == n) throw Error(ErrorCode::NotAffine, "generator coefficient " + to_string(comp[r], {&table, true}) + " is not affine");
      h[r][c] = t.coeff;
    }
  }
  EMatrix e = exp_matrix(h, s);
  OneParameterGroup g{s, {}};
  for (std::size_t r = 0; r < n; ++r) {
    Expr m = e[r][n];
    for (std::size_t c = 0; c < n; ++c) m += e[r][c] * Expr::atom(z[c]);
    g.maps.push_back(m);
  }
  return g;
}

OneParameterGroup at(const OneParameterGroup& g, const Expr& value) {
  OneParameterGroup out = g;
  Var s = Var::symbol(g.s, SymbolRole::Group);
  for (auto& m : out.maps) m = substitute(m, {{s, value}});
  return out;
}

OneParameterGroup compose(const OneParameterGroup& first, const OneParameterGroup& second, const SymbolTable& table) {
  auto z = coordinates(table);
  auto b = bind_coords(z, first.maps);
  OneParameterGroup out{second.s, {}};
  for (const auto& m : second.maps) out.maps.push_back(substitute(m, b));
  return out;
}

bool verify_flow(const VectorField& v, const OneParameterGroup& g, const SymbolTable& table) {
  auto z = coordinates(table);
  auto comp = components(v);
  if (g.maps.size() != z.size()) return false;
  Var s = Var::symbol(g.s, SymbolRole::Group);
  auto image = bind_coords(z, g.maps);
  for (std::size_t r = 0; r < z.size(); ++r) {
    if (partial_deriv(g.maps[r], s) != substitute(comp[r], image)) return false;
    if (substitute(g.maps[r], {{s, Expr(0)}}) != Expr::atom(z[r])) return false;
  }
  return true;
}

Expr transform_solution(const OneParameterGroup& g, const Expr& f, const SymbolTable& table) {
  auto z = coordinates(table);
  std::size_t p = table.independents().size();
  if (z.size() != p + 1) throw Error(ErrorCode::Unsupported, "solution transport needs exactly one dependent variable");
  for (std::size_t i = 0; i < p; ++i)
    if (g.maps[i].contains(z[p]))
      throw Error(ErrorCode::Unsupported, "group action on the independent variables depends on the dependent variable");
  OneParameterGroup inv = at(g, -Expr::atom(Var::symbol(g.s, SymbolRole::Group)));
  std::map<Var, Expr> back;
  for (std::size_t i = 0; i < p; ++i) back.emplace(z[i], inv.maps[i]);
  Expr f_back = substitute(f, back);
  back.emplace(z[p], f_back);
  return substitute(g.maps[p], back);
}

}  // namespace liesym
