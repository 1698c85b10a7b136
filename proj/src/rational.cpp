#include "liesym/rational.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "liesym/error.hpp"

namespace liesym {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "syntax error";
    case ErrorCode::UnknownSymbol: return "unknown symbol";
    case ErrorCode::Unbound: return "unbound symbol";
    case ErrorCode::DivisionByZero: return "division by zero";
    case ErrorCode::Unsupported: return "unsupported operation";
    case ErrorCode::NonlinearLeading: return "nonlinear in leading derivative";
    case ErrorCode::ZeroCoefficient: return "zero leading coefficient";
    case ErrorCode::OrderTooLow: return "prolongation order too low";
    case ErrorCode::ClosureFailure: return "closure failure";
    case ErrorCode::NotAffine: return "non-affine generator";
    case ErrorCode::IrrationalEigenvalue: return "irrational eigenvalue";
    case ErrorCode::NoPivot: return "no invertible pivot";
    case ErrorCode::ResidualExplicitVariables: return "residual explicit variables";
    case ErrorCode::ResidualNonzero: return "residual nonzero";
    case ErrorCode::NotADivergence: return "not a divergence";
    case ErrorCode::ZeroJetDegree: return "zero jet degree";
    case ErrorCode::Unnormalizable: return "unnormalizable coefficient";
    case ErrorCode::Validation: return "validation error";
    case ErrorCode::Verification: return "verification failure";
  }
  return "error";
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  std::string body = text.substr(pos);
  if (body.empty()) return std::nullopt;
  Rational value;
  auto dot = body.find('.');
  auto slash = body.find('/');
  auto all_digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return std::isdigit(c) != 0;
    });
  };
  if (dot != std::string::npos) {
    std::string whole = body.substr(0, dot);
    std::string frac = body.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac))) return std::nullopt;
    Integer den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    value = Rational(Integer(whole + frac), den);
  } else if (slash != std::string::npos) {
    std::string n = body.substr(0, slash);
    std::string d = body.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) return std::nullopt;
    Integer dd(d);
    if (dd == 0) return std::nullopt;
    value = Rational(Integer(n), dd);
  } else {
    if (!all_digits(body)) return std::nullopt;
    value = Rational(Integer(body));
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorCode::DivisionByZero, "0 raised to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::optional<Rational> exact_root(const Rational& q, unsigned long d) {
  if (d == 1) return q;
  if (q < 0 && d % 2 == 0) return std::nullopt;
  Integer n = abs(q.get_num());
  Integer den = q.get_den();
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), d) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), d) == 0) return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  if (q < 0) r = -r;
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Frac::Frac(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero exponent denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  auto g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
}

Frac Frac::from_rational(const Rational& q) {
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
    throw Error(ErrorCode::Unsupported, "exponent too large: " + q.get_str());
  return Frac(q.get_num().get_si(), q.get_den().get_si());
}

Frac operator+(Frac a, Frac b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
Frac operator-(Frac a, Frac b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
Frac operator*(Frac a, Frac b) { return Frac(a.num * b.num, a.den * b.den); }

std::string to_string(const Frac& f) {
  if (f.den == 1) return std::to_string(f.num);
  return std::to_string(f.num) + "/" + std::to_string(f.den);
}

}  // namespace liesym
