#include "liesym/vfield.hpp"

#include "liesym/error.hpp"
#include "liesym/jet.hpp"
#include "liesym/parser.hpp"

namespace liesym {

VectorField VectorField::zero(const SymbolTable& table) {
  VectorField v;
  v.xi.assign(table.independents().size(), Expr());
  v.phi.assign(table.dependents().size(), Expr());
  return v;
}

VectorField VectorField::parse(const std::vector<std::string>& coeffs, const SymbolTable& table) {
  VectorField v = zero(table);
  if (coeffs.size() != v.xi.size() + v.phi.size())
    throw Error(ErrorCode::Validation, "vector field needs one coefficient per coordinate");
  for (std::size_t i = 0; i < v.xi.size(); ++i) v.xi[i] = parse_expr(coeffs[i], table);
  for (std::size_t i = 0; i < v.phi.size(); ++i) v.phi[i] = parse_expr(coeffs[v.xi.size() + i], table);
  return v;
}

bool VectorField::is_zero() const {
  for (const auto& c : xi)
    if (!c.is_zero()) return false;
  for (const auto& c : phi)
    if (!c.is_zero()) return false;
  return true;
}

bool VectorField::depends_on_derivatives() const {
  auto has = [](const Expr& e) { return e.contains_if([](const Var& v) { return v.is_jet() && v.order() > 0; }); };
  for (const auto& c : xi)
    if (has(c)) return true;
  for (const auto& c : phi)
    if (has(c)) return true;
  return false;
}

VectorField VectorField::operator+(const VectorField& o) const {
  VectorField r = *this;
  for (std::size_t i = 0; i < xi.size(); ++i) r.xi[i] += o.xi[i];
  for (std::size_t i = 0; i < phi.size(); ++i) r.phi[i] += o.phi[i];
  return r;
}

VectorField VectorField::operator-(const VectorField& o) const { return *this + Expr(-1) * o; }

VectorField operator*(const Expr& c, const VectorField& v) {
  VectorField r = v;
  for (auto& e : r.xi) e = c * e;
  for (auto& e : r.phi) e = c * e;
  return r;
}

std::string to_string(const VectorField& v, const SymbolTable& table, bool pretty) {
  PrintOptions opts{&table, pretty};
  std::string out;
  auto add = [&](const Expr& c, const std::string& coord) {
    if (c.is_zero()) return;
    std::string cs = to_string(c, opts);
    std::string piece;
    if (c == Expr(1))
      piece = "d_" + coord;
    else if (c == Expr(-1))
      piece = "-d_" + coord;
    else if (c.size() > 1)
      piece = "(" + cs + ")*d_" + coord;
    else
      piece = cs + "*d_" + coord;
    if (out.empty())
      out = piece;
    else if (piece[0] == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  };
  for (std::size_t i = 0; i < v.xi.size(); ++i) add(v.xi[i], table.independents()[i]);
  for (std::size_t i = 0; i < v.phi.size(); ++i) add(v.phi[i], table.dependents()[i]);
  return out.empty() ? "0" : out;
}

ProlongedVectorField prolong(const VectorField& v, int n, const SymbolTable& table) {
  if (n < 0) throw Error(ErrorCode::Validation, "prolongation order must be nonnegative");
  ProlongedVectorField pv{v, n, {}};
  std::vector<std::vector<Expr>> dxi(2);
  for (int dir = 0; dir < 2; ++dir)
    for (const auto& c : v.xi) dxi[dir].push_back(total_derivative(c, dir, table));
  const auto& deps = table.dependents();
  for (std::size_t alpha = 0; alpha < deps.size(); ++alpha) {
    const std::string& dep = deps[alpha];
    pv.coeffs[Var::jet(dep)] = v.phi[alpha];
    for (int total = 1; total <= n; ++total) {
      for (int k2 = 0; k2 <= total; ++k2) {
        int k1 = total - k2;
        int dir = k2 > 0 ? 1 : 0;
        Var here = Var::jet(dep, k1, k2);
        Var prev = here.shifted(dir, -1);
        Expr c = total_derivative(pv.coeffs.at(prev), dir, table);
        for (std::size_t k = 0; k < v.xi.size(); ++k)
          if (!dxi[dir][k].is_zero()) c -= dxi[dir][k] * Expr::atom(prev.shifted(static_cast<int>(k)));
        pv.coeffs[here] = c;
      }
    }
  }
  return pv;
}

Expr prolong_closed_form(const VectorField& v, const Var& jet, const SymbolTable& table) {
  const auto& deps = table.dependents();
  std::size_t alpha = 0;
  while (alpha < deps.size() && deps[alpha] != jet.name) ++alpha;
  if (alpha == deps.size()) throw Error(ErrorCode::UnknownSymbol, "unknown dependent '" + jet.name + "'");
  Expr q = v.phi[alpha];
  Expr tail;
  for (std::size_t k = 0; k < v.xi.size(); ++k) {
    q -= v.xi[k] * Expr::atom(Var::jet(jet.name).shifted(static_cast<int>(k)));
    tail += v.xi[k] * Expr::atom(jet.shifted(static_cast<int>(k)));
  }
  return total_derivative(q, jet.orders[0], jet.orders[1], table) + tail;
}

Expr apply(const ProlongedVectorField& pv, const Expr& e, const SymbolTable& table) {
  Expr out;
  for (std::size_t k = 0; k < pv.base.xi.size(); ++k)
    if (!pv.base.xi[k].is_zero()) out += pv.base.xi[k] * partial_deriv(e, table.independent_var(static_cast<int>(k)));
  for (const auto& v : e.atoms()) {
    if (!v.is_jet()) continue;
    auto it = pv.coeffs.find(v);
    if (it == pv.coeffs.end())
      throw Error(ErrorCode::OrderTooLow, "prolongation of order " + std::to_string(pv.order) + " cannot act on " +
                                              to_string(v, {&table, true}));
    if (!it->second.is_zero()) out += it->second * partial_deriv(e, v);
  }
  return out;
}

Expr apply(const VectorField& v, const Expr& e, const SymbolTable& table) {
  return apply(prolong(v, 0, table), e, table);
}

}  // namespace liesym
