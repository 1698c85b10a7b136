#include <catch_amalgamated.hpp>

#include "liesym/error.hpp"
#include "liesym/linalg.hpp"
#include "support.hpp"

using namespace liesym;
using namespace testing_support;

namespace {
Coeff C(const std::string& s) { return P(s).constant_value(); }
}  // namespace

TEST_CASE("rref and nullspace over Q(a)") {
  CMatrix m{{C("1"), C("a"), C("0")}, {C("a"), C("a^2"), C("1")}};
  auto ns = nullspace(m, 3, {"a"});
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] == C("-a"));
  CHECK(ns[0][1] == C("1"));
  CHECK(ns[0][2] == C("0"));
  CHECK(rank(m, 3) == 2);
  CHECK(nullspace(zero_matrix(2, 3), 3).size() == 3);
}

TEST_CASE("non-monomial pivots are recorded") {
  CMatrix m{{C("a - 1")}};
  std::vector<ParamPoly> assumed;
  auto ns = nullspace(m, 1, {"a"}, &assumed);
  CHECK(ns.empty());
  REQUIRE(assumed.size() == 1);
  CHECK(assumed[0] == P("a - 1").constant_value().numerator());
}

TEST_CASE("solve and inverse") {
  CMatrix a{{C("2"), C("1")}, {C("1"), C("a")}};
  auto x = solve(a, {C("1"), C("0")}, 2);
  REQUIRE(x);
  CHECK((*x)[0] * C("2") + (*x)[1] == C("1"));
  CHECK((*x)[0] + (*x)[1] * C("a") == C("0"));
  CHECK_FALSE(solve(CMatrix{{C("1")}, {C("1")}}, {C("1"), C("2")}, 1));
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(multiply(a, *inv) == identity_matrix(2));
  CHECK_FALSE(inverse(CMatrix{{C("1"), C("2")}, {C("2"), C("4")}}));
}

TEST_CASE("characteristic polynomial and rational roots") {
  CMatrix m{{C("3"), C("0")}, {C("a"), C("-1")}};
  auto p = characteristic_polynomial(m);
  CHECK(p == std::vector<Coeff>{C("1"), C("-2"), C("-3")});
  auto roots = rational_roots({Rational(1), Rational(-2), Rational(-3)});
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == std::pair<Rational, int>(Rational(-1), 1));
  CHECK(roots[1] == std::pair<Rational, int>(Rational(3), 1));
  auto r2 = rational_roots({Rational(4), Rational(-4), Rational(1), Rational(0)});
  CHECK(r2 == std::vector<std::pair<Rational, int>>{{Rational(0), 1}, {Rational(1, 2), 2}});
  CHECK_THROWS_AS(rational_roots({Rational(1), Rational(0), Rational(-2)}), Error);
}

TEST_CASE("matrix exponential") {
  // nilpotent
  CMatrix n{{C("0"), C("1")}, {C("0"), C("0")}};
  auto en = exp_matrix(n, "eps");
  CHECK(en[0][0] == Expr(1));
  CHECK(en[0][1] == P("eps"));
  // diagonalizable with a parameter off the diagonal
  CMatrix m{{C("1"), C("0")}, {C("a"), C("-1")}};
  auto em = exp_matrix(m, "eps");
  CHECK(em[0][0] == P("exp(eps)"));
  CHECK(em[1][1] == P("exp(-eps)"));
  CHECK(em[1][0] == P("a/2*exp(eps) - a/2*exp(-eps)"));
  // Jordan block with eigenvalue 2
  CMatrix j{{C("2"), C("1")}, {C("0"), C("2")}};
  auto ej = exp_matrix(j, "eps");
  CHECK(ej[0][1] == P("eps*exp(2*eps)"));
  // derivative at zero is the matrix itself
  Var e = Var::symbol("eps", SymbolRole::Group);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      Expr d = partial_deriv(em[r][c], e);
      Expr at0 = substitute(d, {{Var::exp("eps"), Expr(1)}, {e, Expr(0)}});
      CHECK(at0 == Expr(m[r][c]));
    }
}
