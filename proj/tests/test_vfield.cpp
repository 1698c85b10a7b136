#include <catch_amalgamated.hpp>

#include "liesym/error.hpp"
#include "liesym/vfield.hpp"
#include "support.hpp"

using namespace liesym;
using namespace testing_support;

namespace {
VectorField V(const std::string& xi, const std::string& eta, const std::string& phi) {
  return VectorField::parse({xi, eta, phi}, hr_table());
}
}  // namespace

TEST_CASE("prolongation of the scaling generator") {
  const auto& T = hr_table();
  VectorField v4 = V("-x", "3*t", "2*t + u - 2*x/a");
  auto pv = prolong(v4, 3, T);
  CHECK(pv.coeffs.at(Var::jet("u", 0, 1)) == P("2 - 2*u_t"));
  CHECK(pv.coeffs.at(Var::jet("u", 0, 2)) == P("-5*u_tt"));
  CHECK(pv.coeffs.at(Var::jet("u", 1, 1)) == P("-u_xt"));
  Expr phix = pv.coeffs.at(Var::jet("u", 1, 0));
  CHECK(phix == P("2*u_x - 2/a"));
  Oracle o(4);
  CHECK(o.agrees(phix, P("2*u_x - 2/a"), 5));
}

TEST_CASE("prolongation of translations vanishes") {
  auto pv = prolong(V("1", "0", "0"), 3, hr_table());
  for (const auto& [j, c] : pv.coeffs)
    if (j.order() > 0) CHECK(c.is_zero());
}

TEST_CASE("recursion agrees with the closed form") {
  const auto& T = hr_table();
  Oracle o(9);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> small(-3, 3);
  auto rnd_affine = [&] {
    return Expr(small(rng)) + Expr(small(rng)) * P("x") + Expr(small(rng)) * P("t") + Expr(small(rng)) * P("u");
  };
  for (int trial = 0; trial < 5; ++trial) {
    VectorField v = VectorField::zero(T);
    v.xi[0] = rnd_affine();
    v.xi[1] = rnd_affine();
    v.phi[0] = rnd_affine();
    auto pv = prolong(v, 3, T);
    for (const auto& [jet, c] : pv.coeffs) {
      CHECK(c == prolong_closed_form(v, jet, T));
      CHECK(max_jet_order(c) <= jet.order());
    }
  }
}

TEST_CASE("prolongation path does not matter") {
  const auto& T = hr_table();
  VectorField v = V("x*u + t", "t^2 - u", "u^2 + x");
  auto pv = prolong(v, 2, T);
  // phi^{xt} reached through t first
  auto dxi = [&](int dir, int k) { return total_derivative(v.xi[static_cast<std::size_t>(k)], dir, T); };
  Expr phi_t = pv.coeffs.at(Var::jet("u", 0, 1));
  Expr via_t = total_derivative(phi_t, 0, T) - dxi(0, 0) * P("u_xt") - dxi(0, 1) * P("u_tt");
  CHECK(via_t == pv.coeffs.at(Var::jet("u", 1, 1)));
}

TEST_CASE("prolongation is linear") {
  const auto& T = hr_table();
  VectorField v = V("x", "t^2", "u + x");
  VectorField w = V("u", "1", "x*t");
  auto a = prolong(v, 2, T), b = prolong(w, 2, T), c = prolong(Expr(2) * v + Expr(-3) * w, 2, T);
  for (const auto& [j, e] : c.coeffs) CHECK(e == Expr(2) * a.coeffs.at(j) + Expr(-3) * b.coeffs.at(j));
}

TEST_CASE("apply prolonged fields") {
  const auto& T = hr_table();
  Expr delta = ProblemSpec::hirota_ramani().equations[0].lhs;
  CHECK(apply(prolong(V("1", "0", "0"), 3, T), delta, T).is_zero());
  CHECK(apply(prolong(V("-x", "3*t", "u"), 3, T), Expr(5), T).is_zero());
  CHECK(apply(prolong(V("-x", "3*t", "2*t + u - 2*x/a"), 1, T), P("t*x^3"), T).is_zero());
  try {
    apply(prolong(V("1", "0", "0"), 1, T), delta, T);
    FAIL("expected order-too-low");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderTooLow);
  }
}
