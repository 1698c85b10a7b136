#pragma once

#include <map>
#include <set>
#include <string>

#include "liesym/param_poly.hpp"

namespace liesym {

/// Element of the field Q(params): a reduced fraction num/den with a monic
/// denominator. Parameters are treated as transcendental, so two Coeffs are
/// equal exactly when their reduced forms coincide.
class Coeff {
 public:
  Coeff() = default;
  Coeff(const Rational& c) : num_(c) {}  // NOLINT
  Coeff(int c) : num_(Rational(c)) {}     // NOLINT
  Coeff(ParamPoly num) : num_(std::move(num)) {}  // NOLINT
  Coeff(ParamPoly num, ParamPoly den);

  static Coeff parameter(const std::string& name) { return Coeff(ParamPoly::variable(name)); }

  const ParamPoly& numerator() const { return num_; }
  const ParamPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_ == ParamPoly(1); }
  /// True when the value is a plain rational number.
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  Rational rational_value() const;
  bool is_polynomial() const { return den_.is_constant(); }
  std::set<std::string> parameters() const;

  Coeff operator-() const;
  Coeff inverse() const;
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  Coeff& operator/=(const Coeff& o) { return *this *= o.inverse(); }
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }
  friend bool operator==(const Coeff& a, const Coeff& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  /// Arbitrary but deterministic total order.
  friend bool operator<(const Coeff& a, const Coeff& b);

  /// Sign of the leading numeric coefficient of the numerator.
  bool looks_negative() const { return !num_.is_zero() && num_.leading_coefficient() < 0; }

  Rational evaluate(const std::map<std::string, Rational>& point) const;
  Coeff substitute(const std::map<std::string, Coeff>& values) const;

  std::string to_string() const;

 private:
  void reduce();
  ParamPoly num_;
  ParamPoly den_ = ParamPoly(1);
};

Coeff pow(const Coeff& c, long n);

}  // namespace liesym
