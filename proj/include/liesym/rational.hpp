#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace liesym {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q" or a finite decimal "1.25" exactly.
std::optional<Rational> parse_rational(const std::string& text);

Rational pow(const Rational& base, long exponent);

/// Exact d-th root of q when q is a perfect d-th power of a rational.
std::optional<Rational> exact_root(const Rational& q, unsigned long d);

Integer binomial(long n, long k);

/// Small exact fraction used for atom exponents (t^(1/3), exp(-2 s)).
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Frac() = default;
  Frac(std::int64_t n, std::int64_t d = 1);

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }
  Rational to_rational() const { return Rational(num, den); }
  static Frac from_rational(const Rational& q);

  friend Frac operator+(Frac a, Frac b);
  friend Frac operator-(Frac a, Frac b);
  friend Frac operator*(Frac a, Frac b);
  friend Frac operator-(Frac a) { return Frac(-a.num, a.den); }
  friend bool operator==(const Frac& a, const Frac& b) = default;
  friend bool operator<(const Frac& a, const Frac& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
};

std::string to_string(const Frac& f);

}  // namespace liesym
