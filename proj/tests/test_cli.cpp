#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include "liesym/error.hpp"
#include "liesym/parser.hpp"
#include "liesym/problem.hpp"
#include "liesym/report.hpp"

using namespace liesym;

namespace {

const std::string kData = LIESYM_DATA_DIR;
const std::string kCli = LIESYM_CLI;

ErrorCode code_of(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Validation;
}

int run_cli(const std::string& args) {
  int status = std::system((kCli + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = std::string(LIESYM_BINARY_DIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("bundled problem file") {
  auto spec = load_problem(kData + "/hirota_ramani.pde");
  auto ref = ProblemSpec::hirota_ramani();
  REQUIRE(spec.equations.size() == 1);
  CHECK(spec.equations[0].lhs == ref.equations[0].lhs);
  CHECK(spec.equations[0].leading == ref.equations[0].leading);
  CHECK(spec.table.is_nonzero("a"));
  auto again = parse_problem(canonical_text(spec));
  CHECK(again.equations[0].lhs == spec.equations[0].lhs);
}

TEST_CASE("problem file notation variants") {
  auto spec = parse_problem("indep x t; dep u(x,t);\nparam a nonzero;\neq: u_t = u_{x,x,t} - a*u_x*(1 - u_t);");
  CHECK(spec.equations[0].lhs == ProblemSpec::hirota_ramani().equations[0].lhs);
  auto lead = parse_problem("indep x t; dep u(t,x); eq: u_t - u_xx; lead u_t;");
  CHECK(lead.equations[0].leading == Var::jet("u", 0, 1));
  CHECK(parse_problem("indep x t; dep u(x,t); eq: u_t - u_xx;").equations[0].leading == Var::jet("u", 2, 0));
}

TEST_CASE("problem file errors") {
  CHECK(code_of("") == ErrorCode::Syntax);
  CHECK(code_of("  # only a comment\n") == ErrorCode::Syntax);
  CHECK(code_of("indep x t; dep u(x,t); eq: u_t - b*u_xx = 0;") == ErrorCode::Validation);
  CHECK(code_of("indep x t; dep u(x,t); eq: u_t - u_xx") == ErrorCode::Syntax);
  CHECK(code_of("indep x t; dep u(x); eq: u_t;") == ErrorCode::Validation);
  CHECK(code_of("indep x t; dep u(x,t);") == ErrorCode::Validation);
  CHECK(code_of("indep x t; dep u(x,t); eq: u_t*u_t - u_x*u_x;") == ErrorCode::Validation);
  CHECK(code_of("indep x t; dep u(x,t); frobnicate;") == ErrorCode::Syntax);
  CHECK(code_of("indep x t; dep u(x,t); eq: u_t + * u_x;") == ErrorCode::Syntax);
  try {
    parse_problem("indep x t;\ndep u(x,t);\neq: u_t - q;");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(e.offset() == 33);
    CHECK(std::string(e.what()).find("column 11") != std::string::npos);
  }
}

TEST_CASE("reports are deterministic and round-trip") {
  auto spec = load_problem(kData + "/hirota_ramani.pde");
  RunConfig cfg;
  cfg.samples = 3;
  cfg.candidates = {"1, 0, 1, 0"};
  for (const auto& cmd : commands()) {
    auto r1 = run(cmd, spec, cfg);
    auto r2 = run(cmd, spec, cfg);
    CHECK(r1.to_text() == r2.to_text());
    CHECK(r1.to_json() == r2.to_json());
    CHECK_FALSE(r1.verification_failed);
    CHECK_FALSE(r1.payloads.empty());
    for (const auto& p : r1.payloads) CHECK(parse_expr(p.canonical, r1.tables[p.table]) == p.value);
  }
}

TEST_CASE("report contents") {
  auto spec = load_problem(kData + "/hirota_ramani.pde");
  RunConfig cfg;
  cfg.degree = 1;
  auto sym = run("symmetries", spec, cfg);
  CHECK(sym.results["dimension"] == 4);
  auto alg = run("algebra", spec, cfg);
  CHECK(alg.results["derived_series"] == nlohmann::ordered_json({4, 3, 0}));
  CHECK(alg.results["solvable"] == true);
  auto cl = run("conslaws", spec, cfg);
  CHECK(cl.results["dimension"] == 3);
  for (const auto& law : cl.results["laws"]) CHECK(law["verified"] == true);
  cfg.mode = NcMode::Tau0;
  auto nc = run("nonclassical", spec, cfg);
  CHECK(nc.results["restricted_solution"]["only_classical"] == true);
  CHECK_THROWS_AS(run("frobnicate", spec, cfg), Error);
}

TEST_CASE("exit codes") {
  CHECK(exit_code(Error(ErrorCode::Verification, "")) == 3);
  CHECK(exit_code(Error(ErrorCode::ResidualNonzero, "")) == 3);
  CHECK(exit_code(Error(ErrorCode::UnknownSymbol, "")) == 2);
  CHECK(run_cli("symmetries " + kData + "/hirota_ramani.pde --degree 1") == 0);
  CHECK(run_cli("symmetries " + write_temp("bad.pde", "indep x t; dep u(x,t); eq: u_t - b*u_x;")) == 2);
  CHECK(run_cli("symmetries " + write_temp("empty.pde", "")) == 2);
  CHECK(run_cli("symmetries /nonexistent/file.pde") == 2);
  // a failing --check is reported, not an error
  CHECK(run_cli("invariants " + kData + "/hirota_ramani.pde --generator \"1, 0, 0\" --check u_x") == 0);
}

TEST_CASE("report written to a file") {
  std::string out = std::string(LIESYM_BINARY_DIR) + "/report.json";
  std::remove(out.c_str());
  REQUIRE(run_cli("algebra " + kData + "/hirota_ramani.pde --json --out " + out) == 0);
  std::ifstream in(out);
  auto j = nlohmann::json::parse(in);
  CHECK(j["command"] == "algebra");
  CHECK(j["results"]["commutators"].size() == 4);
}
