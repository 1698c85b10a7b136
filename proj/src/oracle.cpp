#include "liesym/oracle.hpp"

#include <numeric>

#include "liesym/error.hpp"

namespace liesym {

Rational Oracle::sample() {
  std::uniform_int_distribution<long> num(-12, 12), den(1, 7);
  long n = 0;
  while (n == 0) n = num(rng_);
  Rational q(n, den(rng_));
  q.canonicalize();
  return q;
}

SamplePoint Oracle::point(const std::vector<Expr>& exprs) {
  std::map<Var, std::int64_t> root_degree;
  std::set<std::string> params;
  for (const auto& e : exprs) {
    for (const auto& t : e.terms()) {
      for (const auto& f : t.mono.factors()) {
        auto& d = root_degree[f.var];
        d = std::lcm(d == 0 ? 1 : d, f.exp.den);
      }
      for (const auto& p : t.coeff.parameters()) params.insert(p);
    }
  }
  SamplePoint pt;
  for (const auto& [v, d] : root_degree) {
    Rational r = sample();
    if (d > 1) r = pow(abs(r), static_cast<long>(d));
    pt.atoms[v] = r;
  }
  for (const auto& p : params) pt.params[p] = sample();
  return pt;
}

bool Oracle::vanishes(const Expr& e, int n) {
  int done = 0, attempts = 0;
  while (done < n) {
    if (++attempts > 50 * n) throw Error(ErrorCode::DivisionByZero, "oracle could not find admissible sample points");
    SamplePoint pt = point({e});
    try {
      if (eval_at(e, pt) != 0) return false;
    } catch (const Error& err) {
      if (err.code() == ErrorCode::DivisionByZero) continue;
      throw;
    }
    ++done;
  }
  return true;
}

}  // namespace liesym
