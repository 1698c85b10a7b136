#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "liesym/problem.hpp"
#include "liesym/report.hpp"

using namespace liesym;

int main(int argc, char** argv) {
  CLI::App app{"Lie symmetry analysis of polynomial PDEs in two independent variables"};
  std::string command, problem, out_path, mode = "tau1";
  bool as_json = false;
  RunConfig cfg;
  std::string cmd_list;
  for (const auto& c : commands()) cmd_list += (cmd_list.empty() ? "" : ", ") + c;
  app.add_option("command", command, "one of: " + cmd_list)->required()->check(CLI::IsMember(commands()));
  app.add_option("problem", problem, "problem file (.pde)")->required();
  app.add_option("--degree", cfg.degree, "degree of the polynomial infinitesimal ansatz")->capture_default_str();
  app.add_option("--jet-order", cfg.jet_order, "highest jet order in the multiplier ansatz")->capture_default_str();
  app.add_option("--xt-degree", cfg.xt_degree, "degree in x, t of the multiplier ansatz")->capture_default_str();
  app.add_option("--order", cfg.order, "prolongation order for differential invariants")->capture_default_str();
  app.add_option("--mode", mode, "nonclassical normalisation")->check(CLI::IsMember({"tau0", "tau1"}))->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for random sample points")->capture_default_str();
  app.add_option("--samples", cfg.samples, "random vectors for `optimal`")->capture_default_str();
  app.add_option("--generator", cfg.generators, "vector field \"xi, eta, phi\" (repeatable)");
  app.add_option("--check", cfg.checks, "expression tested for invariance by invariants and reduce (repeatable)");
  app.add_option("--candidate", cfg.candidates, "nonclassical candidate \"xi, eta, phi, psi\" (repeatable)");
  app.add_flag("--json", as_json, "structured output");
  app.add_option("--out", out_path, "write the report to a file");
  CLI11_PARSE(app, argc, argv);
  cfg.mode = mode == "tau0" ? NcMode::Tau0 : NcMode::Tau1;

  try {
    ProblemSpec spec = load_problem(problem);
    Report rep = run(command, spec, cfg);
    std::string text = as_json ? rep.to_json() : rep.to_text();
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return 2;
      }
      f << text;
    }
    return rep.verification_failed ? 3 : 0;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code(e);
  }
}
