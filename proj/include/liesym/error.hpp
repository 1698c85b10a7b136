#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liesym {

enum class ErrorCode {
  Syntax,
  UnknownSymbol,
  Unbound,
  DivisionByZero,
  Unsupported,
  NonlinearLeading,
  ZeroCoefficient,
  OrderTooLow,
  ClosureFailure,
  NotAffine,
  IrrationalEigenvalue,
  NoPivot,
  ResidualExplicitVariables,
  ResidualNonzero,
  NotADivergence,
  ZeroJetDegree,
  Unnormalizable,
  Validation,
  Verification,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the engine. The code lets callers (and the CLI
/// exit-status mapping) distinguish validation from verification failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t offset, const std::string& what)
      : Error(code, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace liesym
