#include <catch_amalgamated.hpp>

#include "liesym/error.hpp"
#include "liesym/vfield.hpp"
#include "support.hpp"

using namespace liesym;
using namespace testing_support;

TEST_CASE("total derivatives") {
  const auto& T = hr_table();
  CHECK(total_derivative(P("u"), 0, T) == P("u_x"));
  CHECK(total_derivative(P("u*u_x"), 1, T) == P("u_t*u_x + u*u_xt"));
  CHECK(total_derivative(P("u_x^2"), 0, T) == P("2*u_x*u_xx"));
  CHECK(total_derivative(P("x^2*t + a"), 0, T) == P("2*x*t"));
  CHECK(total_derivative(P("exp(s)*t"), 1, T) == P("exp(s)"));
}

TEST_CASE("total derivatives on unknown functions") {
  SymbolTable T = SymbolTable::hirota_ramani();
  T.add_function("F", {"x", "t", "u"});
  Expr f = Expr::atom(Var::function("F"));
  Expr d = total_derivative(f, 0, T);
  CHECK(d == Expr::atom(Var::function("F", {1, 0, 0})) + P("u_x") * Expr::atom(Var::function("F", {0, 0, 1})));
  CHECK(total_derivative(total_derivative(f, 0, T), 1, T) == total_derivative(total_derivative(f, 1, T), 0, T));
}

TEST_CASE("total derivatives commute and obey Leibniz") {
  Oracle o(21);
  std::mt19937_64 rng(21);
  const auto& T = hr_table();
  for (int i = 0; i < 100; ++i) {
    Expr e = random_jet_poly(o, rng, 2, 4);
    Expr xt = total_derivative(total_derivative(e, 0, T), 1, T);
    Expr tx = total_derivative(total_derivative(e, 1, T), 0, T);
    CHECK(xt == tx);
    if (i < 20) {
      Expr f = random_jet_poly(o, rng, 2, 3);
      CHECK(total_derivative(e * f, 0, T) == total_derivative(e, 0, T) * f + e * total_derivative(f, 0, T));
    }
  }
}

TEST_CASE("solve_leading") {
  ProblemSpec hr = ProblemSpec::hirota_ramani();
  CHECK(solve_leading(hr, 0) == P("u_t + a*u_x - a*u_x*u_t"));
  CHECK(solve_leading(P("u_t - u_xx"), Var::jet("u", 2, 0)) == P("u_t"));
  try {
    solve_leading(P("u_xxt^2 + u"), Var::jet("u", 2, 1));
    FAIL("expected nonlinear-in-leading");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonlinearLeading);
  }
  try {
    solve_leading(P("u_t + u"), Var::jet("u", 2, 1));
    FAIL("expected zero coefficient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroCoefficient);
  }
  // the solved form annihilates the equation
  Expr lhs = hr.equations[0].lhs;
  CHECK(substitute(lhs, {{Var::jet("u", 2, 1), solve_leading(hr, 0)}}).is_zero());
}

TEST_CASE("jet_orders") {
  auto o = jet_orders(P("u_tt*(u_t - u_xxt)"));
  REQUIRE(o.count("u"));
  CHECK(o["u"] == std::pair<int, int>(2, 2));
  CHECK(jet_orders(P("u"))["u"] == std::pair<int, int>(0, 0));
  CHECK(jet_orders(P("a")).empty());
}

TEST_CASE("reducer substitutes differential consequences") {
  ProblemSpec hr = ProblemSpec::hirota_ramani();
  Reducer red(hr);
  const auto& T = hr.table;
  Expr rhs = solve_leading(hr, 0);
  CHECK(red.reduce(P("u_xxt")) == rhs);
  Expr uxxxt = red.reduce(P("u_xxxt"));
  CHECK(uxxxt == total_derivative(rhs, 0, T));
  Expr uxxtt = red.reduce(P("u_xxtt"));
  CHECK(uxxtt == total_derivative(rhs, 1, T));
  Expr x4t = red.reduce(P("u_xxxxt"));
  CHECK(x4t == red.reduce(total_derivative(total_derivative(rhs, 0, T), 0, T)));
  CHECK_FALSE(x4t.contains(Var::jet("u", 2, 1)));
  CHECK(red.reduce(P("u_xx + u_t")) == P("u_xx + u_t"));
}

TEST_CASE("evaluate_on explicit functions") {
  ProblemSpec hr = ProblemSpec::hirota_ramani();
  Expr sol = P("x/(a*(1-a)) + t/a + c");
  CHECK(evaluate_on(hr.equations[0].lhs, "u", sol, hr.table).is_zero());
  CHECK_FALSE(evaluate_on(hr.equations[0].lhs, "u", P("x*t"), hr.table).is_zero());
}
