#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liesym/expr.hpp"

namespace liesym {

enum class SymbolKind {
  Independent,
  Dependent,
  Parameter,
  Group,
  Reduction,
  Constant,
  Unknown,
  Function,
};

struct FunctionSig {
  std::string name;
  /// Argument atoms: independent symbols or dependent variables (jet (0,0)).
  std::vector<Var> args;
};

/// Names in scope for a problem: used by the parser to resolve identifiers and
/// by the printer to spell jet and function derivatives.
class SymbolTable {
 public:
  /// x, t independent; u dependent; a a nonzero parameter.
  static SymbolTable hirota_ramani();

  void add_independent(const std::string& name);
  void add_dependent(const std::string& name);
  void add_parameter(const std::string& name, bool nonzero = false);
  void add_symbol(const std::string& name, SymbolRole role);
  void add_function(const std::string& name, const std::vector<std::string>& args);

  std::optional<SymbolKind> kind(const std::string& name) const;
  const std::vector<std::string>& independents() const { return independents_; }
  const std::vector<std::string>& dependents() const { return dependents_; }
  const std::vector<std::string>& parameters() const { return parameters_; }
  bool is_nonzero(const std::string& param) const;
  const FunctionSig* function(const std::string& name) const;
  const std::vector<FunctionSig>& functions() const { return functions_; }
  /// Slot (0 or 1) of an independent variable, or -1.
  int independent_slot(const std::string& name) const;
  /// Atom for a plain symbol (independent, group, reduction, constant, unknown).
  Var symbol_var(const std::string& name) const;
  Var independent_var(int slot) const;

 private:
  void check_fresh(const std::string& name) const;
  std::vector<std::string> independents_;
  std::vector<std::string> dependents_;
  std::vector<std::string> parameters_;
  std::vector<std::string> nonzero_;
  std::vector<std::pair<std::string, SymbolRole>> symbols_;
  std::vector<FunctionSig> functions_;
};

}  // namespace liesym
