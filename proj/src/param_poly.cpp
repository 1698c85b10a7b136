#include "liesym/param_poly.hpp"

#include <algorithm>

#include "liesym/error.hpp"

namespace liesym {

namespace {

int mono_degree(const ParamPoly::Mono& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

ParamPoly::Mono mono_mul(const ParamPoly::Mono& a, const ParamPoly::Mono& b) {
  ParamPoly::Mono out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

// a / b when b divides a.
std::optional<ParamPoly::Mono> mono_div(const ParamPoly::Mono& a, const ParamPoly::Mono& b) {
  ParamPoly::Mono out;
  std::size_t i = 0;
  for (const auto& [v, e] : b) {
    while (i < a.size() && a[i].first < v) out.push_back(a[i++]);
    if (i == a.size() || a[i].first != v || a[i].second < e) return std::nullopt;
    if (a[i].second > e) out.emplace_back(v, a[i].second - e);
    ++i;
  }
  while (i < a.size()) out.push_back(a[i++]);
  return out;
}

int exponent_of(const ParamPoly::Mono& m, const std::string& v) {
  for (const auto& [name, e] : m)
    if (name == v) return e;
  return 0;
}

ParamPoly::Mono without(const ParamPoly::Mono& m, const std::string& v) {
  ParamPoly::Mono out;
  for (const auto& p : m)
    if (p.first != v) out.push_back(p);
  return out;
}

ParamPoly from_coefficients(const std::map<int, ParamPoly>& coeffs, const std::string& v) {
  ParamPoly out;
  for (const auto& [k, c] : coeffs) out += c * ParamPoly::variable(v, k);
  return out;
}

}  // namespace

bool ParamPoly::MonoOrder::operator()(const Mono& a, const Mono& b) const {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db;
  // Lexicographic: the monomial with the larger power of the earliest variable wins.
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first;
    if (a[i].second != b[i].second) return a[i].second > b[i].second;
  }
  return a.size() > b.size();
}

ParamPoly::ParamPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Mono{}, c);
}

ParamPoly ParamPoly::variable(const std::string& name, int power) {
  ParamPoly p;
  if (power == 0)
    p.terms_.emplace(Mono{}, Rational(1));
  else
    p.terms_.emplace(Mono{{name, power}}, Rational(1));
  return p;
}

ParamPoly ParamPoly::monomial(const Mono& m, const Rational& c) {
  ParamPoly p;
  p.add_term(m, c);
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ParamPoly::constant_value() const {
  auto it = terms_.find(Mono{});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ParamPoly::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

const ParamPoly::Mono& ParamPoly::leading_monomial() const {
  static const Mono empty;
  return terms_.empty() ? empty : terms_.begin()->first;
}

std::set<std::string> ParamPoly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) out.insert(v);
  return out;
}

bool ParamPoly::has_variable(const std::string& v) const {
  for (const auto& [m, c] : terms_)
    if (exponent_of(m, v) != 0) return true;
  return false;
}

int ParamPoly::degree(const std::string& v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, exponent_of(m, v));
  return d;
}

int ParamPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

std::map<int, ParamPoly> ParamPoly::coefficients_in(const std::string& v) const {
  std::map<int, ParamPoly> out;
  for (const auto& [m, c] : terms_) out[exponent_of(m, v)].add_term(without(m, v), c);
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

void ParamPoly::add_term(const Mono& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
  return out;
}

bool operator<(const ParamPoly& a, const ParamPoly& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  ParamPoly::MonoOrder order;
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return order(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  ParamPoly out = *this;
  for (auto& [m, v] : out.terms_) v *= c;
  return out;
}

ParamPoly ParamPoly::pow(unsigned n) const {
  ParamPoly out(1);
  for (unsigned i = 0; i < n; ++i) out = out * *this;
  return out;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (d.is_constant()) return scaled(Rational(1) / d.constant_value());
  ParamPoly rem = *this;
  ParamPoly quotient;
  const Mono& lm = d.leading_monomial();
  const Rational lc = d.leading_coefficient();
  while (!rem.is_zero()) {
    auto q = mono_div(rem.leading_monomial(), lm);
    if (!q) return std::nullopt;
    ParamPoly t = monomial(*q, rem.leading_coefficient() / lc);
    quotient += t;
    rem -= t * d;
  }
  return quotient;
}

Rational ParamPoly::evaluate(const std::map<std::string, Rational>& point) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [v, e] : m) {
      auto it = point.find(v);
      if (it == point.end()) throw Error(ErrorCode::Unbound, "parameter '" + v + "' is not bound");
      term *= liesym::pow(it->second, e);
    }
    sum += term;
  }
  return sum;
}

ParamPoly ParamPoly::substitute(const std::map<std::string, ParamPoly>& values) const {
  ParamPoly out;
  for (const auto& [m, c] : terms_) {
    ParamPoly term(c);
    Mono kept;
    for (const auto& [v, e] : m) {
      auto it = values.find(v);
      if (it == values.end())
        kept.emplace_back(v, e);
      else
        term = term * it->second.pow(static_cast<unsigned>(e));
    }
    out += term * monomial(kept, 1);
  }
  return out;
}

ParamPoly ParamPoly::monic() const {
  if (is_zero()) return {};
  return scaled(Rational(1) / leading_coefficient());
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string factors;
    for (const auto& [v, e] : m) {
      if (!factors.empty()) factors += "*";
      factors += v;
      if (e != 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += factors;
    else
      out += mag.get_str() + "*" + factors;
  }
  return out;
}

namespace {

std::string first_variable(const ParamPoly& a, const ParamPoly& b) {
  auto va = a.variables();
  auto vb = b.variables();
  va.insert(vb.begin(), vb.end());
  return *va.begin();
}

ParamPoly content_in(const ParamPoly& p, const std::string& v) {
  ParamPoly g;
  for (const auto& [k, c] : p.coefficients_in(v)) {
    g = gcd(g, c);
    if (g.is_constant()) return ParamPoly(1);
  }
  return g;
}

ParamPoly primitive_part(const ParamPoly& p, const std::string& v) {
  if (p.is_zero()) return p;
  ParamPoly c = content_in(p, v);
  return *p.divide_exact(c);
}

// Pseudo-remainder of a by b with respect to v.
ParamPoly pseudo_remainder(ParamPoly a, const ParamPoly& b, const std::string& v) {
  const int n = b.degree(v);
  ParamPoly lcb = b.coefficients_in(v).rbegin()->second;
  while (!a.is_zero() && a.degree(v) >= n) {
    int m = a.degree(v);
    ParamPoly lca = a.coefficients_in(v).rbegin()->second;
    a = lcb * a - lca * ParamPoly::variable(v, m - n) * b;
  }
  return a;
}

ParamPoly monomial_gcd(const ParamPoly& mono, const ParamPoly& p) {
  // gcd of a single term with an arbitrary polynomial is a monomial.
  ParamPoly::Mono g = mono.leading_monomial();
  for (const auto& [m, c] : p.terms()) {
    ParamPoly::Mono next;
    for (const auto& [v, e] : g) {
      int f = exponent_of(m, v);
      if (f > 0) next.emplace_back(v, std::min(e, f));
    }
    g = std::move(next);
    if (g.empty()) break;
  }
  return ParamPoly::monomial(g, 1);
}

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return ParamPoly(1);
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  if (a.monic() == b.monic()) return a.monic();
  const std::string v = first_variable(a, b);
  if (!a.has_variable(v)) return gcd(a, content_in(b, v));
  if (!b.has_variable(v)) return gcd(content_in(a, v), b);
  ParamPoly ca = content_in(a, v);
  ParamPoly cb = content_in(b, v);
  ParamPoly g = gcd(ca, cb);
  ParamPoly pa = *a.divide_exact(ca);
  ParamPoly pb = *b.divide_exact(cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (true) {
    ParamPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (!r.has_variable(v)) {
      pb = ParamPoly(1);
      break;
    }
    pa = pb;
    pb = primitive_part(r, v);
  }
  return (primitive_part(pb, v) * g).monic();
}

}  // namespace liesym
