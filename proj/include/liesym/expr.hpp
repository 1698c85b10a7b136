#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "liesym/coeff.hpp"
#include "liesym/rational.hpp"

namespace liesym {

class SymbolTable;

enum class AtomKind : std::uint8_t { Jet = 0, Function = 1, Symbol = 2, Exp = 3 };

/// Role of a plain symbol. Parameters never become atoms: they live in the
/// coefficient field.
enum class SymbolRole : std::uint8_t {
  Independent = 0,
  Reduction = 1,
  Constant = 2,
  Unknown = 3,
  Group = 4,
};

/// An irreducible factor of a monomial.
///  - Jet: u^alpha_{x^k1 t^k2}; orders = (k1, k2). (0,0) is the dependent variable.
///  - Function: derivative of an unknown function (xi, phi, ...) with one
///    derivative count per declared argument.
///  - Symbol: x, t, s, y, ...
///  - Exp: the atom exp(s) of a group parameter; exp(q*s) is this atom to the power q.
struct Var {
  static constexpr std::size_t kMaxArgs = 4;

  AtomKind kind = AtomKind::Symbol;
  SymbolRole role = SymbolRole::Independent;
  std::string name;
  std::array<std::uint8_t, kMaxArgs> orders{};

  static Var jet(const std::string& dep, int k1 = 0, int k2 = 0);
  static Var symbol(const std::string& name, SymbolRole role = SymbolRole::Independent);
  static Var function(const std::string& name, std::array<std::uint8_t, kMaxArgs> orders = {});
  static Var exp(const std::string& group_symbol);

  int order() const;
  bool is_jet() const { return kind == AtomKind::Jet; }
  bool is_symbol() const { return kind == AtomKind::Symbol; }
  bool is_function() const { return kind == AtomKind::Function; }
  bool is_exp() const { return kind == AtomKind::Exp; }
  /// Jet variable shifted by one derivative in slot `dir` (0 = x, 1 = t).
  Var shifted(int dir, int by = 1) const;

  friend bool operator==(const Var& a, const Var& b) {
    return a.kind == b.kind && a.role == b.role && a.name == b.name && a.orders == b.orders;
  }
  /// Canonical atom order: jets (higher total order first), functions,
  /// independent symbols, other symbols, exponential atoms.
  friend bool operator<(const Var& a, const Var& b);
};

struct Factor {
  Var var;
  Frac exp;
  friend bool operator==(const Factor& a, const Factor& b) = default;
};

/// Product of atom powers, sorted by the canonical atom order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const Var& v, Frac e = Frac(1));

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  Frac degree() const;
  Frac exponent_of(const Var& v) const;
  /// Sum of exponents of jet atoms (the homotopy lambda-degree).
  Frac jet_degree() const;
  Monomial without(const Var& v) const;
  Monomial with(const Var& v, Frac e) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial inverse() const;
  Monomial pow(Frac e) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  /// Graded lexicographic order; `a < b` means a sorts after b in printed output.
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
};

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// An expression in canonical normal form: a finite sum of coefficient *
/// monomial, monomials strictly decreasing in graded lex order, no zero
/// coefficients. Zero is the empty sum. Values are immutable.
class Expr {
 public:
  Expr() = default;
  Expr(const Coeff& c);  // NOLINT
  Expr(int c) : Expr(Coeff(c)) {}  // NOLINT
  Expr(const Rational& c) : Expr(Coeff(c)) {}  // NOLINT

  static Expr atom(const Var& v, Frac e = Frac(1));
  static Expr parameter(const std::string& name) { return Expr(Coeff::parameter(name)); }
  static Expr from_terms(std::vector<Term> terms);
  static Expr term(const Monomial& m, const Coeff& c);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// True when the expression has no atoms (it is an element of Q(params)).
  bool is_constant() const;
  Coeff constant_value() const;
  /// Coefficient of the empty monomial.
  Coeff constant_term() const;
  bool is_single_term() const { return terms_.size() == 1; }

  std::set<Var> atoms() const;
  bool contains(const Var& v) const;
  bool contains_if(const std::function<bool(const Var&)>& pred) const;
  /// Largest exponent with which v occurs (0 if absent).
  Frac degree_in(const Var& v) const;

  Expr operator-() const;
  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  Expr& operator*=(const Expr& o);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator*(const Coeff& c, const Expr& e);
  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

  /// Division by a single-term expression (a monomial times a coefficient).
  Expr divided_by(const Expr& d) const;
  Expr pow(long n) const;
  /// Rational power; only defined for single-term expressions.
  Expr pow(Frac e) const;

 private:
  std::vector<Term> terms_;
};

Expr operator/(const Expr& a, const Expr& b);

/// Applies a derivation defined by its values on atoms (Leibniz and power rule).
/// For an exponential atom the callback must return d exp(s), i.e. exp(s)*ds.
Expr derive(const Expr& e, const std::function<Expr(const Var&)>& on_atom);

/// Formal partial derivative; all other atoms are independent. Differentiating
/// by a group symbol s also acts on exp(q*s) atoms.
Expr partial_deriv(const Expr& e, const Var& v);
/// Partial derivative with respect to a parameter of the coefficient field.
Expr partial_deriv_param(const Expr& e, const std::string& param);

/// Simultaneous substitution of atoms. A binding for a group symbol s must be a
/// rational linear combination of group symbols when exp(q*s) atoms occur; the
/// atom exp(s) itself may be bound directly.
Expr substitute(const Expr& e, const std::map<Var, Expr>& bindings);
/// Substitution of parameters by elements of Q(params).
Expr substitute_params(const Expr& e, const std::map<std::string, Coeff>& values);

/// A point for the exact numeric oracle: atom values and parameter values.
/// Exponential atoms are bound through Var::exp(s) (the value of exp(s)).
struct SamplePoint {
  std::map<Var, Rational> atoms;
  std::map<std::string, Rational> params;
};

Rational eval_at(const Expr& e, const SamplePoint& point);

/// Splits e = sum_m m * c_m where m ranges over monomials in the atoms
/// selected by `pred` and c_m contains no selected atom.
std::map<Monomial, Expr> collect(const Expr& e, const std::function<bool(const Var&)>& pred);

/// Polynomial content: gcd over Q[params] of the numerators together with the
/// monomial gcd of the terms (only nonnegative integral exponents are taken).
struct Content {
  Monomial mono;
  ParamPoly poly = ParamPoly(1);
};
Content content(const Expr& e);

/// Options for printing. The canonical form re-parses to the same normal form;
/// the pretty form writes jets compactly (u_xxt).
struct PrintOptions {
  const SymbolTable* table = nullptr;
  bool pretty = false;
};

std::string to_string(const Expr& e, const PrintOptions& opts = {});
std::string to_string(const Var& v, const PrintOptions& opts = {});
std::string to_string(const Monomial& m, const PrintOptions& opts = {});

}  // namespace liesym
