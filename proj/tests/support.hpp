#pragma once

#include <random>
#include <string>

#include "liesym/jet.hpp"
#include "liesym/oracle.hpp"
#include "liesym/parser.hpp"

namespace testing_support {

using namespace liesym;

inline const SymbolTable& hr_table() {
  static const SymbolTable t = [] {
    SymbolTable s = SymbolTable::hirota_ramani();
    s.add_symbol("s", SymbolRole::Group);
    s.add_symbol("eps", SymbolRole::Group);
    s.add_symbol("c", SymbolRole::Constant);
    return s;
  }();
  return t;
}

inline Expr P(const std::string& text) { return parse_expr(text, hr_table()); }
inline std::string S(const Expr& e) { return to_string(e, {&hr_table(), true}); }

/// Random polynomial in x, t, a and jets of u up to the given order.
inline Expr random_jet_poly(Oracle& o, std::mt19937_64& rng, int order, int terms) {
  std::vector<Expr> atoms{P("x"), P("t"), P("a")};
  for (int k = 0; k <= order; ++k)
    for (int k2 = 0; k2 <= k; ++k2) atoms.push_back(Expr::atom(Var::jet("u", k - k2, k2)));
  std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
  std::uniform_int_distribution<int> len(0, 3);
  Expr e;
  for (int i = 0; i < terms; ++i) {
    Expr m(o.sample());
    int n = len(rng);
    for (int j = 0; j < n; ++j) m = m * atoms[pick(rng)];
    e += m;
  }
  return e;
}

}  // namespace testing_support
