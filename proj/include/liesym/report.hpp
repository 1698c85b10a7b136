#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "liesym/detsolve.hpp"
#include "liesym/error.hpp"
#include "liesym/jet.hpp"
#include "liesym/nonclassical.hpp"

namespace liesym {

struct RunConfig {
  int degree = 2;      // infinitesimal ansatz
  int jet_order = 2;   // multiplier ansatz
  int xt_degree = 1;
  int order = 2;       // prolongation / invariant order
  NcMode mode = NcMode::Tau1;
  std::uint64_t seed = 20240601;
  int samples = 10;    // random vectors for `optimal`
  std::vector<std::string> generators;  // "xi, eta, phi" strings
  std::vector<std::string> checks;      // expressions for `invariants`
  std::vector<std::string> candidates;  // "xi, eta, phi, psi" for `nonclassical`
};

/// An expression as it appears in a report, with the symbols it was printed
/// against so that the canonical string can be parsed back.
struct ExprPayload {
  std::string canonical;
  std::size_t table = 0;
  Expr value;
};

struct Report {
  std::string command;
  std::string digest;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<std::string> lines;
  std::vector<std::string> diagnostics;
  bool verification_failed = false;

  std::vector<SymbolTable> tables;
  std::vector<ExprPayload> payloads;

  std::string to_text() const;
  std::string to_json() const;
};

const std::vector<std::string>& commands();

/// Throws Error(Validation) for an unknown command.
Report run(const std::string& command, const ProblemSpec& spec, const RunConfig& cfg);

/// Exit status for an error escaping `run`: 3 for verification failures,
/// 2 otherwise.
int exit_code(const Error& e);

/// Classical symmetries on the polynomial ansatz of the given degree.
SolutionSpace classical_symmetries(const ProblemSpec& spec, int degree);

/// Splits "a, b, c" at top-level commas.
std::vector<std::string> split_components(const std::string& s);

}  // namespace liesym
