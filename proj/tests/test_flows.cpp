#include <catch_amalgamated.hpp>

#include "liesym/error.hpp"
#include "liesym/flows.hpp"
#include "support.hpp"

using namespace liesym;
using namespace testing_support;

namespace {

const SymbolTable& T() {
  static const SymbolTable t = [] {
    SymbolTable s = hr_table();
    s.add_symbol("s1", SymbolRole::Group);
    s.add_symbol("s2", SymbolRole::Group);
    return s;
  }();
  return t;
}

Expr Q(const std::string& text) { return parse_expr(text, T()); }

VectorField V(const std::string& xi, const std::string& eta, const std::string& phi) {
  return VectorField::parse({xi, eta, phi}, T());
}

std::vector<VectorField> hr_basis() {
  return {V("1", "0", "0"), V("0", "1", "0"), V("0", "0", "1/a"), V("-x", "3*t", "2*t + u - 2*x/a")};
}

}  // namespace

TEST_CASE("exponentiated generators") {
  auto b = hr_basis();
  auto g1 = exponentiate(b[0], T(), "s");
  CHECK(g1.maps == std::vector<Expr>{Q("x + s"), Q("t"), Q("u")});
  auto g2 = exponentiate(b[1], T(), "s");
  CHECK(g2.maps == std::vector<Expr>{Q("x"), Q("t + s"), Q("u")});
  auto g3 = exponentiate(b[2], T(), "s");
  CHECK(g3.maps == std::vector<Expr>{Q("x"), Q("t"), Q("u + s/a")});
  auto g4 = exponentiate(b[3], T(), "s");
  CHECK(g4.maps ==
        std::vector<Expr>{Q("x*exp(-s)"), Q("t*exp(3*s)"), Q("t*exp(3*s) + x/a*exp(-s) + (u - t - x/a)*exp(s)")});
  for (const auto& g : {g1, g2, g3, g4}) {
    auto id = at(g, Expr(0));
    CHECK(id.maps == std::vector<Expr>{Q("x"), Q("t"), Q("u")});
  }
  CHECK_THROWS_AS(exponentiate(V("x^2", "0", "0"), T(), "s"), Error);
}

TEST_CASE("flow verification") {
  auto b = hr_basis();
  for (const auto& v : b) CHECK(verify_flow(v, exponentiate(v, T(), "s"), T()));
  CHECK_FALSE(verify_flow(b[0], exponentiate(b[1], T(), "s"), T()));
}

TEST_CASE("group law of flows") {
  Expr s1 = Q("s1"), s2 = Q("s2");
  for (const auto& v : hr_basis()) {
    auto g = exponentiate(v, T(), "s");
    CHECK(compose(at(g, s1), at(g, s2), T()).maps == at(g, s1 + s2).maps);
  }
}

TEST_CASE("transformed solutions") {
  auto b = hr_basis();
  Expr f = Q("x^2*t + 3*x - t^2/a");
  CHECK(transform_solution(exponentiate(b[0], T(), "s"), f, T()) == Q("(x-s)^2*t + 3*(x-s) - t^2/a"));
  CHECK(transform_solution(exponentiate(b[1], T(), "s"), f, T()) == Q("x^2*(t-s) + 3*x - (t-s)^2/a"));
  CHECK(transform_solution(exponentiate(b[2], T(), "s"), f, T()) == f + Q("s/a"));
  Expr f_scaled = substitute(f, {{Var::symbol("x"), Q("x*exp(s)")}, {Var::symbol("t"), Q("t*exp(-3*s)")}});
  CHECK(transform_solution(exponentiate(b[3], T(), "s"), f, T()) ==
        Q("exp(s)") * f_scaled + Q("x/a*(1 - exp(2*s)) + t*(1 - exp(-2*s))"));
  CHECK(transform_solution(at(exponentiate(b[3], T(), "s"), Expr(0)), f, T()) == f);
}

TEST_CASE("transported solutions still solve the equation") {
  ProblemSpec hr = ProblemSpec::hirota_ramani();
  Expr sol = Q("x/(a*(1-a)) + t/a + c");
  for (const auto& v : hr_basis()) {
    Expr moved = transform_solution(exponentiate(v, T(), "s"), sol, T());
    CHECK(evaluate_on(hr.equations[0].lhs, "u", moved, T()).is_zero());
  }
}
