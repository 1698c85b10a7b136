#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "liesym/rational.hpp"

namespace liesym {

/// Multivariate polynomial over Q in the problem parameters (a, c, ...).
/// Terms are kept in a map keyed by exponent vectors sorted by parameter name.
class ParamPoly {
 public:
  using Mono = std::vector<std::pair<std::string, int>>;

  /// Graded lexicographic, larger first.
  struct MonoOrder {
    bool operator()(const Mono& a, const Mono& b) const;
  };
  using TermMap = std::map<Mono, Rational, MonoOrder>;

  ParamPoly() = default;
  ParamPoly(const Rational& c);  // NOLINT: implicit constants are convenient
  ParamPoly(int c) : ParamPoly(Rational(c)) {}

  static ParamPoly variable(const std::string& name, int power = 1);
  static ParamPoly monomial(const Mono& m, const Rational& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_value() const;
  /// Leading coefficient in the graded lex order.
  Rational leading_coefficient() const;
  const Mono& leading_monomial() const;

  std::set<std::string> variables() const;
  bool has_variable(const std::string& v) const;
  int degree(const std::string& v) const;
  int total_degree() const;
  /// Coefficients with respect to one variable.
  std::map<int, ParamPoly> coefficients_in(const std::string& v) const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const ParamPoly& a, const ParamPoly& b);

  ParamPoly scaled(const Rational& c) const;
  ParamPoly pow(unsigned n) const;

  /// Exact quotient, or nothing when the division is not exact.
  std::optional<ParamPoly> divide_exact(const ParamPoly& d) const;

  /// Value at a rational point; every variable must be bound.
  Rational evaluate(const std::map<std::string, Rational>& point) const;
  ParamPoly substitute(const std::map<std::string, ParamPoly>& values) const;

  /// Divides by the leading coefficient.
  ParamPoly monic() const;

  std::string to_string() const;

 private:
  void add_term(const Mono& m, const Rational& c);
  TermMap terms_;
};

/// Greatest common divisor, monic (leading coefficient 1); gcd(0, 0) = 0.
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

}  // namespace liesym
