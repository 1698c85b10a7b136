#include "liesym/coeff.hpp"

#include "liesym/error.hpp"

namespace liesym {

Coeff::Coeff(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  reduce();
}

void Coeff::reduce() {
  if (num_.is_zero()) {
    den_ = ParamPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    ParamPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
  }
  Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    num_ = num_.scaled(Rational(1) / lc);
    den_ = den_.scaled(Rational(1) / lc);
  }
}

Rational Coeff::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::Unsupported, "coefficient " + to_string() + " is not a rational number");
  return num_.constant_value() / den_.constant_value();
}

std::set<std::string> Coeff::parameters() const {
  auto out = num_.variables();
  auto d = den_.variables();
  out.insert(d.begin(), d.end());
  return out;
}

Coeff Coeff::operator-() const {
  Coeff out = *this;
  out.num_ = -out.num_;
  return out;
}

Coeff Coeff::inverse() const {
  if (num_.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero coefficient");
  return Coeff(den_, num_);
}

Coeff& Coeff::operator+=(const Coeff& o) {
  if (o.num_.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) reduce();
    else if (num_.is_zero()) den_ = ParamPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) { return *this += -o; }

Coeff& Coeff::operator*=(const Coeff& o) {
  if (num_.is_zero()) return *this;
  if (o.num_.is_zero()) {
    *this = Coeff();
    return *this;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

bool operator<(const Coeff& a, const Coeff& b) {
  if (!(a.num_ == b.num_)) return a.num_ < b.num_;
  return a.den_ < b.den_;
}

Rational Coeff::evaluate(const std::map<std::string, Rational>& point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "denominator " + den_.to_string() + " vanishes at the sample point");
  return num_.evaluate(point) / d;
}

namespace {

Coeff substitute_poly(const ParamPoly& p, const std::map<std::string, Coeff>& values) {
  Coeff out;
  for (const auto& [m, c] : p.terms()) {
    Coeff term(c);
    ParamPoly::Mono kept;
    for (const auto& [v, e] : m) {
      auto it = values.find(v);
      if (it == values.end())
        kept.emplace_back(v, e);
      else
        term *= pow(it->second, e);
    }
    term *= Coeff(ParamPoly::monomial(kept, 1));
    out += term;
  }
  return out;
}

}  // namespace

Coeff Coeff::substitute(const std::map<std::string, Coeff>& values) const {
  return substitute_poly(num_, values) / substitute_poly(den_, values);
}

std::string Coeff::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Coeff pow(const Coeff& c, long n) {
  if (n < 0) return pow(c.inverse(), -n);
  Coeff out(1);
  Coeff base = c;
  while (n > 0) {
    if (n & 1) out *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return out;
}

}  // namespace liesym
