#include <catch_amalgamated.hpp>

#include "liesym/conslaw.hpp"
#include "liesym/detsolve.hpp"
#include "liesym/error.hpp"
#include "support.hpp"

using namespace liesym;
using namespace testing_support;

namespace {

const ProblemSpec& HR() {
  static const ProblemSpec s = ProblemSpec::hirota_ramani();
  return s;
}
const SymbolTable& T() { return HR().table; }
Expr Q(const std::string& s) { return parse_expr(s, T()); }
Expr delta() { return HR().equations[0].lhs; }

Expr jets_only(const Expr& e) {
  Expr out;
  for (const auto& t : e.terms())
    for (const auto& f : t.mono.factors())
      if (f.var.is_jet()) {
        out += Expr::term(t.mono, t.coeff);
        break;
      }
  return out;
}

bool same_span(const std::vector<Expr>& a, const std::vector<Expr>& b) {
  // rank of a, b and a+b agree
  auto r = [](const std::vector<Expr>& v) {
    if (v.empty()) return std::size_t(0);
    auto sys = collect_linear(v);
    return rank(sys.rows, v.size());
  };
  std::vector<Expr> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return r(a) == r(b) && r(a) == r(both);
}

}  // namespace

TEST_CASE("euler operator") {
  CHECK(euler_apply(Q("2*u*u_x"), T())[0].is_zero());
  CHECK(euler_apply(Q("u_x^2"), T())[0] == Q("-2*u_xx"));
  CHECK(euler_apply(delta(), T())[0] == Q("2*a*u_xt"));
  CHECK(euler_apply(Q("u_xx") * delta(), T())[0].is_zero());
  CHECK(euler_apply(Q("x*u"), T())[0] == Q("x"));
}

TEST_CASE("multiplier search") {
  auto ansatz = multiplier_ansatz(T(), 2, 1);
  CHECK(ansatz.size() == 18);
  auto ms = find_multipliers(HR(), ansatz);
  REQUIRE(ms.multipliers.size() == 3);
  CHECK(same_span(ms.multipliers, {Q("u_xx"), Q("u_tt"), Q("t*u_tt + u_t/2 - 1/2")}));
  for (const auto& m : ms.multipliers) CHECK(euler_apply(m * delta(), T())[0].is_zero());

  CHECK(find_multipliers(HR(), {Expr(1)}).multipliers.empty());
  CHECK(find_multipliers(HR(), {}).multipliers.empty());
}

TEST_CASE("homotopy coefficients") {
  CHECK(homotopy_coefficient(1, 0, 2, 1) == Rational(1, 3));
  CHECK(homotopy_coefficient(0, 0, 1, 0) == Rational(1));
  CHECK(homotopy_coefficient(0, 1, 1, 2) == Rational(1, 3));
}

TEST_CASE("homotopy integrands and fluxes for the u_tt multiplier") {
  Expr f = Q("u_tt") * delta();
  auto in = homotopy_integrands(f, T());
  CHECK(in.x == Q("a*u*u_tt - a*u*u_t*u_tt - 2/3*u*u_xttt + 1/3*u_t*u_xtt + 1/3*u_x*u_ttt - 2/3*u_xt*u_tt"));
  CHECK(in.t == Q("u_t^2 - u_t*u_xxt + a*u_x*u_t - a*u_x*u_t^2 + 2/3*u*u_xxtt - a*u*u_xt + a*u*u_xt*u_t"
                  " + 1/3*u_x*u_xtt - 1/3*u_xx*u_tt"));
  auto h = homotopy(f, T());
  CHECK(h.phi == Q("1/2*a*u*u_tt - 1/3*a*u*u_t*u_tt - 1/3*u*u_xttt + 1/6*u_t*u_xtt + 1/6*u_x*u_ttt - 1/3*u_xt*u_tt"));
  CHECK(h.psi == Q("1/2*u_t^2 - 1/2*u_t*u_xxt + 1/2*a*u_x*u_t - 1/3*a*u_x*u_t^2 + 1/3*u*u_xxtt - 1/2*a*u*u_xt"
                   " + 1/3*a*u*u_xt*u_t + 1/6*u_x*u_xtt - 1/6*u_xx*u_tt"));
}

TEST_CASE("homotopy edge cases") {
  CHECK(homotopy_integrands(Q("u_t^2*u"), T()).x.is_zero());
  auto h = homotopy(Q("2*u*u_x"), T());
  CHECK(h.phi == Q("u^2"));
  CHECK(h.psi.is_zero());
  try {
    homotopy(Expr(1), T());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroJetDegree);
  }
  try {
    homotopy(Q("u_x^2"), T());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotADivergence);
  }
}

TEST_CASE("conservation laws for the three multipliers") {
  for (const char* m : {"u_tt", "u_xx", "t*u_tt + u_t/2 - 1/2"}) {
    auto law = conservation_law(HR(), Q(m));
    CHECK((divergence(law.flux, T()) - Q(m) * delta()).is_zero());
    CHECK(Oracle().vanishes(divergence(law.flux, T()) - Q(m) * delta()));
  }
  auto third = conservation_law(HR(), Q("t*u_tt + u_t/2 - 1/2"));
  FluxPair printed{
      Q("-1/2*u + 1/6*u*u_xxt + 1/3*t*u*u_xxtt + 1/6*t*u_x*u_xtt + 1/12*u_x*u_xt + 1/6*u_xx - 1/12*u_xx*u_t"
        " - 1/2*a*t*u*u_xt + 1/3*a*t*u*u_t*u_xt + 1/2*t*u_t^2 - 1/2*t*u_t*u_xxt - 1/6*t*u_xx*u_tt"
        " + 1/2*a*t*u_x*u_t - 1/3*a*t*u_x*u_t^2"),
      Q("-1/2*a*u + 1/2*a*u*u_t + 1/2*a*t*u*u_tt - 1/3*a*t*u*u_t*u_tt - 1/6*a*u*u_t^2 - 1/2*u*u_xtt"
        " - 1/3*t*u*u_xttt + 1/6*t*u_t*u_xtt - 1/12*u_t*u_xt + 1/4*u_x*u_tt + 1/6*t*u_x*u_ttt + 1/3*u_xt"
        " - 1/3*t*u_xt*u_tt")};
  CHECK(equivalent_fluxes(third.flux, printed, T()));
}

TEST_CASE("u_xx fluxes up to trivial pairs") {
  auto law = conservation_law(HR(), Q("u_xx"));
  Expr phi = Q("1/2*u_x*u_t + 1/2*a*u_x^2 - 1/3*a*u_x^2*u_t - 1/2*u*u_xt + 1/3*a*u*u_x*u_xt");
  FluxPair corrected{Q("1/2*u*u_xx - 1/3*a*u*u_x*u_xx - 1/2*u_xx^2"), phi};
  FluxPair as_printed{Q("1/2*u*u_xx - 1/3*a*u*u_x*u_tt - 1/2*u_xx"), phi};
  CHECK(equivalent_fluxes(law.flux, corrected, T()));
  CHECK_FALSE(equivalent_fluxes(law.flux, as_printed, T()));
}

TEST_CASE("random divergences") {
  Oracle o(7);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    FluxPair fp{jets_only(random_jet_poly(o, rng, 2, 4)), jets_only(random_jet_poly(o, rng, 2, 4))};
    Expr f = divergence(fp, T());
    for (const auto& e : euler_apply(f, T())) CHECK(e.is_zero());
    if (f.is_zero()) continue;
    auto h = homotopy(f, T());
    CHECK(divergence(h, T()) == f);
    CHECK(equivalent_fluxes(h, fp, T()));
  }
}
