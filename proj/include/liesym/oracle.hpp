#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "liesym/expr.hpp"

namespace liesym {

/// Random exact-rational sample points for numeric checks of symbolic zeros.
class Oracle {
 public:
  explicit Oracle(std::uint64_t seed = 20240601) : rng_(seed) {}

  /// Nonzero rational with small numerator and denominator.
  Rational sample();
  /// Binds every atom of the given expressions and every parameter they use.
  /// Atoms carrying fractional exponents get perfect-power values.
  SamplePoint point(const std::vector<Expr>& exprs);

  /// True when e evaluates to zero at n random points. Points where a
  /// coefficient denominator vanishes are resampled.
  bool vanishes(const Expr& e, int n = 20);
  /// a and b agree at n random points.
  bool agrees(const Expr& a, const Expr& b, int n = 20) { return vanishes(a - b, n); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace liesym
