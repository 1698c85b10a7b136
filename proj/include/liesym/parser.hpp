#pragma once

#include <memory>
#include <string>
#include <vector>

#include "liesym/expr.hpp"
#include "liesym/symbols.hpp"

namespace liesym {

/// Syntax tree produced by the parser, before normalization.
struct ExprTree {
  enum class Kind { Number, Parameter, Atom, Sum, Product, Negate, Quotient, Power, Exp };

  Kind kind = Kind::Number;
  Rational number;           // Number; exponent of Power
  std::string parameter;     // Parameter
  Var atom;                  // Atom
  std::vector<ExprTree> children;

  std::size_t offset = 0;    // source position, for diagnostics
};

/// Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' (integer | '(' expr ')' | '-' integer))?
///   primary := number | '(' expr ')' | 'exp' '(' expr ')'
///            | 'D' '[' name (',' dir)* ']' | name ('_' subscript)?
///   subscript := '{' dir (',' dir)* '}' | run of single-letter directions
/// Jet variables: u, u_x, u_xxt, u_{x,x,t}, D[u,x,x,t]. Function derivatives
/// use the same notation with the function's argument names.
ExprTree parse(const std::string& text, const SymbolTable& table);

/// Canonical normal form of a syntax tree.
Expr normalize(const ExprTree& tree);

/// parse followed by normalize.
Expr parse_expr(const std::string& text, const SymbolTable& table);

}  // namespace liesym
