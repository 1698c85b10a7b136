#include "liesym/symbols.hpp"

#include <algorithm>

#include "liesym/error.hpp"

namespace liesym {

SymbolTable SymbolTable::hirota_ramani() {
  SymbolTable t;
  t.add_independent("x");
  t.add_independent("t");
  t.add_dependent("u");
  t.add_parameter("a", true);
  return t;
}

void SymbolTable::check_fresh(const std::string& name) const {
  if (name.empty()) throw Error(ErrorCode::Validation, "empty symbol name");
  if (kind(name)) throw Error(ErrorCode::Validation, "symbol '" + name + "' declared twice");
  if (name == "D" || name == "exp") throw Error(ErrorCode::Validation, "'" + name + "' is reserved");
}

void SymbolTable::add_independent(const std::string& name) {
  check_fresh(name);
  if (independents_.size() == 2)
    throw Error(ErrorCode::Validation, "at most two independent variables are supported");
  independents_.push_back(name);
}

void SymbolTable::add_dependent(const std::string& name) {
  check_fresh(name);
  dependents_.push_back(name);
}

void SymbolTable::add_parameter(const std::string& name, bool nonzero) {
  check_fresh(name);
  parameters_.push_back(name);
  if (nonzero) nonzero_.push_back(name);
}

void SymbolTable::add_symbol(const std::string& name, SymbolRole role) {
  check_fresh(name);
  if (role == SymbolRole::Independent) {
    add_independent(name);
    return;
  }
  symbols_.emplace_back(name, role);
}

void SymbolTable::add_function(const std::string& name, const std::vector<std::string>& args) {
  check_fresh(name);
  if (args.size() > Var::kMaxArgs)
    throw Error(ErrorCode::Validation, "function '" + name + "' has more than 4 arguments");
  FunctionSig sig{name, {}};
  for (const auto& a : args) {
    auto k = kind(a);
    if (k == SymbolKind::Dependent)
      sig.args.push_back(Var::jet(a));
    else if (k == SymbolKind::Independent)
      sig.args.push_back(Var::symbol(a, SymbolRole::Independent));
    else
      throw Error(ErrorCode::Validation, "argument '" + a + "' of function '" + name + "' must be an independent or dependent variable");
  }
  functions_.push_back(std::move(sig));
}

std::optional<SymbolKind> SymbolTable::kind(const std::string& name) const {
  auto has = [&](const std::vector<std::string>& v) {
    return std::find(v.begin(), v.end(), name) != v.end();
  };
  if (has(independents_)) return SymbolKind::Independent;
  if (has(dependents_)) return SymbolKind::Dependent;
  if (has(parameters_)) return SymbolKind::Parameter;
  for (const auto& [n, role] : symbols_) {
    if (n != name) continue;
    switch (role) {
      case SymbolRole::Group: return SymbolKind::Group;
      case SymbolRole::Reduction: return SymbolKind::Reduction;
      case SymbolRole::Constant: return SymbolKind::Constant;
      case SymbolRole::Unknown: return SymbolKind::Unknown;
      case SymbolRole::Independent: return SymbolKind::Independent;
    }
  }
  for (const auto& f : functions_)
    if (f.name == name) return SymbolKind::Function;
  return std::nullopt;
}

bool SymbolTable::is_nonzero(const std::string& param) const {
  return std::find(nonzero_.begin(), nonzero_.end(), param) != nonzero_.end();
}

const FunctionSig* SymbolTable::function(const std::string& name) const {
  for (const auto& f : functions_)
    if (f.name == name) return &f;
  return nullptr;
}

int SymbolTable::independent_slot(const std::string& name) const {
  for (std::size_t i = 0; i < independents_.size(); ++i)
    if (independents_[i] == name) return static_cast<int>(i);
  return -1;
}

Var SymbolTable::symbol_var(const std::string& name) const {
  if (independent_slot(name) >= 0) return Var::symbol(name, SymbolRole::Independent);
  for (const auto& [n, role] : symbols_)
    if (n == name) return Var::symbol(name, role);
  throw Error(ErrorCode::UnknownSymbol, "'" + name + "' is not a plain symbol");
}

Var SymbolTable::independent_var(int slot) const {
  if (slot < 0 || static_cast<std::size_t>(slot) >= independents_.size())
    throw Error(ErrorCode::Validation, "no independent variable in slot " + std::to_string(slot));
  return Var::symbol(independents_[static_cast<std::size_t>(slot)], SymbolRole::Independent);
}

}  // namespace liesym
