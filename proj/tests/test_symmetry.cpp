#include <catch_amalgamated.hpp>

#include "liesym/detsolve.hpp"
#include "liesym/error.hpp"
#include "liesym/liealg.hpp"
#include "support.hpp"

using namespace liesym;
using namespace testing_support;

namespace {

VectorField V(const std::string& xi, const std::string& eta, const std::string& phi) {
  return VectorField::parse({xi, eta, phi}, hr_table());
}

std::vector<VectorField> hr_basis() {
  return {V("1", "0", "0"), V("0", "1", "0"), V("0", "0", "1/a"), V("-x", "3*t", "2*t + u - 2*x/a")};
}

CVector coords(std::initializer_list<const char*> cs) {
  CVector v;
  for (const char* c : cs) v.push_back(P(c).is_zero() ? Coeff(0) : P(c).constant_value());
  return v;
}

}  // namespace

TEST_CASE("invariance residuals") {
  ProblemSpec hr = ProblemSpec::hirota_ramani();
  for (const auto& v : hr_basis()) CHECK(invariance_residual(hr, v).is_zero());
  CHECK(invariance_residual(hr, V("0", "0", "1")).is_zero());
  Expr r = invariance_residual(hr, V("0", "0", "u"));
  CHECK(r == P("-a*u_x*u_t"));
  Oracle o(2);
  CHECK(o.agrees(r, P("-a*u_x*u_t"), 5));
}

TEST_CASE("classical symmetries of the equation") {
  ProblemSpec hr = ProblemSpec::hirota_ramani();
  for (int degree : {1, 2}) {
    AnsatzSpec an = AnsatzSpec::polynomial(hr.table, degree);
    auto sol = solve_determining(generate_determining(hr, an), an, hr.table);
    CHECK(sol.basis.size() == 4);
    CHECK(sol.rank + sol.basis.size() == sol.unknowns);
    CHECK(sol.assumptions.empty());
    for (const auto& b : sol.basis) CHECK(invariance_residual(hr, b).is_zero());
    for (const auto& v : hr_basis()) CHECK(express(v, sol.basis).has_value());
  }
  AnsatzSpec an0 = AnsatzSpec::polynomial(hr.table, 0);
  auto sol0 = solve_determining(generate_determining(hr, an0), an0, hr.table);
  CHECK(sol0.basis.size() == 3);
  CHECK(solve_determining(generate_determining(hr, AnsatzSpec{}), AnsatzSpec{}, hr.table).basis.empty());
}

TEST_CASE("heat-type equation admits all translations") {
  ProblemSpec heat;
  heat.table = SymbolTable::hirota_ramani();
  heat.equations.push_back({P("u_t - u_xx"), Var::jet("u", 2, 0)});
  AnsatzSpec an = AnsatzSpec::polynomial(heat.table, 0);
  auto sys = generate_determining(heat, an);
  CHECK(sys.rows.empty());
  CHECK(solve_determining(sys, an, heat.table).basis.size() == 3);
}

TEST_CASE("commutator table") {
  LieAlgebra g(hr_basis(), hr_table());
  CHECK(g.structure(0, 3) == coords({"-1", "0", "-2", "0"}));
  CHECK(g.structure(1, 3) == coords({"0", "3", "2*a", "0"}));
  CHECK(g.structure(2, 3) == coords({"0", "0", "1", "0"}));
  CHECK(g.structure(3, 0) == coords({"1", "0", "2", "0"}));
  CHECK(g.structure(3, 1) == coords({"0", "-3", "-2*a", "0"}));
  CHECK(g.structure(3, 2) == coords({"0", "0", "-1", "0"}));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(g.structure(i, j) == coords({"0", "0", "0", "0"}));
  for (std::size_t i = 0; i < 4; ++i) CHECK(bracket(hr_basis()[i], hr_basis()[i], hr_table()).is_zero());
}

TEST_CASE("closure failure") {
  try {
    LieAlgebra g({hr_basis()[0], hr_basis()[3]}, hr_table());
    FAIL("expected closure failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ClosureFailure);
  }
  LieAlgebra ab({V("1", "0", "0"), V("0", "1", "0")}, hr_table());
  CHECK(ab.structure(0, 1) == coords({"0", "0"}));
  CHECK(ab.derived_series() == std::vector<std::size_t>{2, 0});
}

TEST_CASE("Jacobi identity and antisymmetry") {
  LieAlgebra g(hr_basis(), hr_table());
  std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CVector ei(n, Coeff(0)), ej(n, Coeff(0));
      ei[i] = ej[j] = Coeff(1);
      CVector s = g.bracket(ei, ej), t = g.bracket(ej, ei);
      for (std::size_t k = 0; k < n; ++k) CHECK((s[k] + t[k]).is_zero());
      for (std::size_t k = 0; k < n; ++k) {
        CVector ek(n, Coeff(0));
        ek[k] = Coeff(1);
        CVector sum(n, Coeff(0));
        for (const auto& term : {g.bracket(ei, g.bracket(ej, ek)), g.bracket(ej, g.bracket(ek, ei)),
                                 g.bracket(ek, g.bracket(ei, ej))})
          for (std::size_t l = 0; l < n; ++l) sum[l] = sum[l] + term[l];
        for (const auto& c : sum) CHECK(c.is_zero());
      }
    }
}

TEST_CASE("derived series") {
  LieAlgebra g(hr_basis(), hr_table());
  CHECK(g.derived_series() == std::vector<std::size_t>{4, 3, 0});
  CHECK(g.is_solvable());
  LieAlgebra h({hr_basis()[0], hr_basis()[1], hr_basis()[2]}, hr_table());
  CHECK(h.derived_series() == std::vector<std::size_t>{3, 0});
}

TEST_CASE("adjoint representation") {
  LieAlgebra g(hr_basis(), hr_table());
  auto m4 = g.adjoint_exp(3, "eps");
  CHECK(m4[0][0] == P("exp(-eps)"));
  CHECK(m4[2][0] == P("exp(-eps) - exp(eps)"));
  auto m3 = g.adjoint_exp(2, "eps");
  CHECK(m3[2][3] == P("-eps"));
  CHECK(m3[3][3] == Expr(1));
  for (std::size_t i = 0; i < 3; ++i) CHECK(g.series_length(i) == 2);
  CHECK(g.series_length(3) == 0);
  auto eig = g.ad_eigenvalues(3);
  CHECK(eig == std::vector<std::pair<Rational, int>>{{Rational(-3), 1}, {Rational(-1), 1}, {Rational(0), 1}, {Rational(1), 1}});
}

TEST_CASE("adjoint group law and derivative at zero") {
  SymbolTable T = hr_table();
  T.add_symbol("e1", SymbolRole::Group);
  T.add_symbol("e2", SymbolRole::Group);
  LieAlgebra g(hr_basis(), T);
  Var eps = Var::symbol("eps", SymbolRole::Group);
  Expr e1 = Expr::atom(Var::symbol("e1", SymbolRole::Group)), e2 = Expr::atom(Var::symbol("e2", SymbolRole::Group));
  for (std::size_t i = 0; i < 4; ++i) {
    auto m = g.adjoint_exp(i, "eps");
    auto at = [&](const Expr& val) {
      EMatrix out = m;
      for (auto& row : out)
        for (auto& c : row) c = substitute(c, {{eps, val}});
      return out;
    };
    CHECK(multiply(at(e1), at(e2)) == at(e1 + e2));
    CMatrix ad = g.ad(i);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        Expr d0 = substitute(partial_deriv(m[r][c], eps), {{eps, Expr(0)}});
        CHECK(d0 == Expr(-ad[r][c]));
        CHECK(substitute(m[r][c], {{eps, Expr(0)}}) == Expr(r == c ? 1 : 0));
      }
  }
}

TEST_CASE("orbit reduction") {
  LieAlgebra g(hr_basis(), hr_table());
  Oracle o(13);
  for (int trial = 0; trial < 10; ++trial) {
    CVector v{Coeff(o.sample()), Coeff(o.sample()), Coeff(o.sample()), Coeff(o.sample())};
    auto res = orbit_reduce(g, v);
    CHECK(res.representative == coords({"0", "0", "0", "1"}));
    CHECK(replay(g, v, res.word, res.scale) == res.representative);
  }
  CVector c2 = coords({"2/3", "-5", "1", "0"});
  CHECK(orbit_reduce(g, c2).representative == c2);
  CVector c3 = coords({"7", "1", "0", "0"});
  CHECK(orbit_reduce(g, c3).representative == c3);
  CVector c4 = coords({"1", "0", "0", "0"});
  CHECK(orbit_reduce(g, c4).representative == c4);
}
