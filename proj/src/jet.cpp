#include "liesym/jet.hpp"

#include <algorithm>

#include "liesym/error.hpp"
#include "liesym/parser.hpp"

namespace liesym {

ProblemSpec ProblemSpec::hirota_ramani() {
  ProblemSpec spec;
  spec.table = SymbolTable::hirota_ramani();
  spec.equations.push_back({parse_expr("u_t - u_xxt + a*u_x*(1 - u_t)", spec.table), Var::jet("u", 2, 1)});
  return spec;
}

Expr total_derivative(const Expr& e, int dir, const SymbolTable& table) {
  const std::string& xname = table.independents().at(static_cast<std::size_t>(dir));
  return derive(e, [&](const Var& v) -> Expr {
    switch (v.kind) {
      case AtomKind::Jet:
        return Expr::atom(v.shifted(dir));
      case AtomKind::Symbol:
        return v.role == SymbolRole::Independent && v.name == xname ? Expr(1) : Expr();
      case AtomKind::Function: {
        const FunctionSig* sig = table.function(v.name);
        if (!sig) throw Error(ErrorCode::UnknownSymbol, "undeclared function '" + v.name + "'");
        Expr out;
        for (std::size_t i = 0; i < sig->args.size(); ++i) {
          Var d = v;
          ++d.orders[i];
          const Var& arg = sig->args[i];
          if (arg.is_jet())
            out += Expr::atom(arg.shifted(dir)) * Expr::atom(d);
          else if (arg.name == xname)
            out += Expr::atom(d);
        }
        return out;
      }
      case AtomKind::Exp:
        return Expr();
    }
    return Expr();
  });
}

Expr total_derivative(const Expr& e, int k1, int k2, const SymbolTable& table) {
  Expr out = e;
  for (int i = 0; i < k1; ++i) out = total_derivative(out, 0, table);
  for (int i = 0; i < k2; ++i) out = total_derivative(out, 1, table);
  return out;
}

Expr solve_leading(const Expr& lhs, const Var& leading) {
  auto parts = collect(lhs, [&](const Var& v) { return v == leading; });
  Expr a, b;
  for (const auto& [m, c] : parts) {
    Frac k = m.exponent_of(leading);
    if (m.empty())
      b = c;
    else if (k == Frac(1))
      a = c;
    else
      throw Error(ErrorCode::NonlinearLeading, "equation is not affine in " + to_string(leading));
  }
  if (a.is_zero()) throw Error(ErrorCode::ZeroCoefficient, "leading derivative " + to_string(leading) + " does not occur");
  if (!a.is_constant())
    throw Error(ErrorCode::NonlinearLeading, "coefficient of " + to_string(leading) + " is not a parameter expression");
  return (-b).divided_by(a);
}

Expr solve_leading(const ProblemSpec& spec, std::size_t nu) {
  const Equation& eq = spec.equations.at(nu);
  return solve_leading(eq.lhs, eq.leading);
}

std::map<std::string, std::pair<int, int>> jet_orders(const Expr& e) {
  std::map<std::string, std::pair<int, int>> out;
  for (const auto& v : e.atoms()) {
    if (!v.is_jet()) continue;
    auto [it, fresh] = out.try_emplace(v.name, v.orders[0], v.orders[1]);
    if (!fresh) {
      it->second.first = std::max<int>(it->second.first, v.orders[0]);
      it->second.second = std::max<int>(it->second.second, v.orders[1]);
    }
  }
  return out;
}

int max_jet_order(const Expr& e) {
  int n = 0;
  for (const auto& v : e.atoms())
    if (v.is_jet()) n = std::max(n, v.order());
  return n;
}

Reducer::Reducer(const ProblemSpec& spec) : table_(&spec.table) {
  for (std::size_t i = 0; i < spec.equations.size(); ++i) add_rule(spec.equations[i].leading, solve_leading(spec, i));
}

void Reducer::add_rule(const Var& leading, const Expr& rhs) {
  rules_.emplace_back(leading, rhs);
  cache_.clear();
}

std::optional<Expr> Reducer::reduced_jet(const Var& jet) {
  if (!jet.is_jet()) return std::nullopt;
  auto hit = cache_.find(jet);
  if (hit != cache_.end()) return hit->second;
  for (const auto& [lead, rhs] : rules_) {
    if (lead.name != jet.name || jet.orders[0] < lead.orders[0] || jet.orders[1] < lead.orders[1]) continue;
    Expr value;
    if (jet == lead) {
      value = reduce(rhs);
    } else {
      int dir = jet.orders[1] > lead.orders[1] ? 1 : 0;
      Var prev = jet.shifted(dir, -1);
      value = reduce(total_derivative(*reduced_jet(prev), dir, *table_));
    }
    cache_.emplace(jet, value);
    return value;
  }
  return std::nullopt;
}

Expr Reducer::reduce(const Expr& e) {
  std::map<Var, Expr> bindings;
  for (const auto& v : e.atoms()) {
    if (auto r = reduced_jet(v)) bindings.emplace(v, *r);
  }
  if (bindings.empty()) return e;
  return substitute(e, bindings);
}

Expr evaluate_on(const Expr& e, const std::string& dep, const Expr& f, const SymbolTable& table) {
  std::map<Var, Expr> bindings;
  for (const auto& v : e.atoms()) {
    if (!v.is_jet() || v.name != dep) continue;
    Expr d = f;
    for (int i = 0; i < v.orders[0]; ++i) d = partial_deriv(d, table.independent_var(0));
    for (int i = 0; i < v.orders[1]; ++i) d = partial_deriv(d, table.independent_var(1));
    bindings.emplace(v, d);
  }
  return substitute(e, bindings);
}

}  // namespace liesym
