#include "liesym/expr.hpp"

#include <algorithm>

#include "liesym/error.hpp"
#include "liesym/symbols.hpp"

namespace liesym {

// ---------------------------------------------------------------- Var

Var Var::jet(const std::string& dep, int k1, int k2) {
  Var v;
  v.kind = AtomKind::Jet;
  v.name = dep;
  v.orders[0] = static_cast<std::uint8_t>(k1);
  v.orders[1] = static_cast<std::uint8_t>(k2);
  return v;
}

Var Var::symbol(const std::string& name, SymbolRole role) {
  Var v;
  v.kind = AtomKind::Symbol;
  v.role = role;
  v.name = name;
  return v;
}

Var Var::function(const std::string& name, std::array<std::uint8_t, kMaxArgs> orders) {
  Var v;
  v.kind = AtomKind::Function;
  v.name = name;
  v.orders = orders;
  return v;
}

Var Var::exp(const std::string& group_symbol) {
  Var v;
  v.kind = AtomKind::Exp;
  v.role = SymbolRole::Group;
  v.name = group_symbol;
  return v;
}

int Var::order() const {
  int s = 0;
  for (auto o : orders) s += o;
  return s;
}

Var Var::shifted(int dir, int by) const {
  Var v = *this;
  v.orders[static_cast<std::size_t>(dir)] = static_cast<std::uint8_t>(v.orders[static_cast<std::size_t>(dir)] + by);
  return v;
}

bool operator<(const Var& a, const Var& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  switch (a.kind) {
    case AtomKind::Jet: {
      int oa = a.order(), ob = b.order();
      if (oa != ob) return oa > ob;
      if (a.name != b.name) return a.name < b.name;
      return a.orders > b.orders;
    }
    case AtomKind::Function: {
      if (a.name != b.name) return a.name < b.name;
      int oa = a.order(), ob = b.order();
      if (oa != ob) return oa > ob;
      return a.orders > b.orders;
    }
    case AtomKind::Symbol:
      if (a.role != b.role) return a.role < b.role;
      return a.name < b.name;
    case AtomKind::Exp:
      return a.name < b.name;
  }
  return false;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(const Var& v, Frac e) {
  if (!e.is_zero()) factors_.push_back({v, e});
}

Frac Monomial::degree() const {
  Frac d(0);
  for (const auto& f : factors_) d = d + f.exp;
  return d;
}

Frac Monomial::exponent_of(const Var& v) const {
  for (const auto& f : factors_)
    if (f.var == v) return f.exp;
  return Frac(0);
}

Frac Monomial::jet_degree() const {
  Frac d(0);
  for (const auto& f : factors_)
    if (f.var.is_jet()) d = d + f.exp;
  return d;
}

Monomial Monomial::without(const Var& v) const {
  Monomial m;
  for (const auto& f : factors_)
    if (!(f.var == v)) m.factors_.push_back(f);
  return m;
}

Monomial Monomial::with(const Var& v, Frac e) const {
  Monomial m;
  bool placed = false;
  for (const auto& f : factors_) {
    if (!placed && !(f.var < v)) {
      placed = true;
      if (f.var == v) {
        if (!e.is_zero()) m.factors_.push_back({v, e});
        continue;
      }
      if (!e.is_zero()) m.factors_.push_back({v, e});
    }
    m.factors_.push_back(f);
  }
  if (!placed && !e.is_zero()) m.factors_.push_back({v, e});
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size() || (i < a.factors_.size() && a.factors_[i].var < b.factors_[j].var)) {
      out.factors_.push_back(a.factors_[i++]);
    } else if (i == a.factors_.size() || b.factors_[j].var < a.factors_[i].var) {
      out.factors_.push_back(b.factors_[j++]);
    } else {
      Frac e = a.factors_[i].exp + b.factors_[j].exp;
      if (!e.is_zero()) out.factors_.push_back({a.factors_[i].var, e});
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (auto& f : out.factors_) f.exp = -f.exp;
  return out;
}

Monomial Monomial::pow(Frac e) const {
  if (e.is_zero()) return {};
  Monomial out = *this;
  for (auto& f : out.factors_) f.exp = f.exp * e;
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
  Frac da = a.degree(), db = b.degree();
  if (!(da == db)) return da < db;
  std::size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& fa = a.factors_[i];
    const auto& fb = b.factors_[i];
    if (!(fa.var == fb.var)) return fb.var < fa.var;
    if (!(fa.exp == fb.exp)) return fa.exp < fb.exp;
  }
  return a.factors_.size() < b.factors_.size();
}

// ---------------------------------------------------------------- Expr

Expr::Expr(const Coeff& c) {
  if (!c.is_zero()) terms_.push_back({Monomial(), c});
}

Expr Expr::atom(const Var& v, Frac e) {
  Expr out;
  out.terms_.push_back({Monomial(v, e), Coeff(1)});
  return out;
}

Expr Expr::term(const Monomial& m, const Coeff& c) {
  Expr out;
  if (!c.is_zero()) out.terms_.push_back({m, c});
  return out;
}

Expr Expr::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return y.mono < x.mono; });
  Expr out;
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
  return out;
}

bool Expr::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty());
}

Coeff Expr::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::Unsupported, "expression is not a constant");
  return terms_.empty() ? Coeff() : terms_[0].coeff;
}

Coeff Expr::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.empty()) return terms_.back().coeff;
  return Coeff();
}

std::set<Var> Expr::atoms() const {
  std::set<Var> out;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) out.insert(f.var);
  return out;
}

bool Expr::contains(const Var& v) const {
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors())
      if (f.var == v) return true;
  return false;
}

bool Expr::contains_if(const std::function<bool(const Var&)>& pred) const {
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors())
      if (pred(f.var)) return true;
  return false;
}

Frac Expr::degree_in(const Var& v) const {
  Frac d(0);
  for (const auto& t : terms_) {
    Frac e = t.mono.exponent_of(v);
    if (d < e) d = e;
  }
  return d;
}

Expr Expr::operator-() const {
  Expr out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Expr& Expr::operator+=(const Expr& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  // Merge of two sorted sequences.
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && o.terms_[j].mono < terms_[i].mono)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || terms_[i].mono < o.terms_[j].mono) {
      merged.push_back(o.terms_[j++]);
    } else {
      Coeff c = terms_[i].coeff + o.terms_[j].coeff;
      if (!c.is_zero()) merged.push_back({std::move(terms_[i].mono), std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Expr& Expr::operator-=(const Expr& o) { return *this += -o; }

Expr& Expr::operator*=(const Expr& o) { return *this = *this * o; }

Expr operator*(const Expr& a, const Expr& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (b.is_constant()) return b.terms_[0].coeff * a;
  if (a.is_constant()) return a.terms_[0].coeff * b;
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) terms.push_back({x.mono * y.mono, x.coeff * y.coeff});
  return Expr::from_terms(std::move(terms));
}

Expr operator*(const Coeff& c, const Expr& e) {
  if (c.is_zero()) return {};
  if (c.is_one()) return e;
  Expr out = e;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

Expr Expr::divided_by(const Expr& d) const {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero expression");
  if (!d.is_single_term())
    throw Error(ErrorCode::Unsupported, "division by a non-monomial expression: " + to_string(d));
  const Term& t = d.terms_[0];
  return *this * Expr::term(t.mono.inverse(), t.coeff.inverse());
}

Expr operator/(const Expr& a, const Expr& b) { return a.divided_by(b); }

Expr Expr::pow(long n) const {
  if (n < 0) return Expr(1).divided_by(pow(-n));
  Expr out(1);
  Expr base = *this;
  while (n > 0) {
    if (n & 1) out = out * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return out;
}

Expr Expr::pow(Frac e) const {
  if (e.is_integer()) return pow(static_cast<long>(e.num));
  if (is_zero()) {
    if (e.num > 0) return {};
    throw Error(ErrorCode::DivisionByZero, "zero raised to a negative power");
  }
  if (!is_single_term())
    throw Error(ErrorCode::Unsupported, "fractional power of a sum: " + to_string(*this));
  const Term& t = terms_[0];
  for (const auto& f : t.mono.factors()) {
    bool ok = f.var.is_exp() || (f.var.is_symbol() && (f.var.role == SymbolRole::Independent ||
                                                       f.var.role == SymbolRole::Reduction));
    if (!ok)
      throw Error(ErrorCode::Unsupported, "fractional powers are only defined on independent or reduction symbols");
  }
  Coeff c = t.coeff;
  if (!c.is_one()) {
    if (!c.is_rational()) throw Error(ErrorCode::Unsupported, "fractional power of a parametric coefficient");
    auto root = exact_root(c.rational_value(), static_cast<unsigned long>(e.den));
    if (!root) throw Error(ErrorCode::Unsupported, "coefficient is not a perfect power");
    c = Coeff(liesym::pow(*root, static_cast<long>(e.num)));
  }
  return Expr::term(t.mono.pow(e), c);
}

// ---------------------------------------------------------------- calculus

Expr derive(const Expr& e, const std::function<Expr(const Var&)>& on_atom) {
  std::vector<Term> out;
  std::map<Var, Expr> cache;
  for (const auto& t : e.terms()) {
    for (const auto& f : t.mono.factors()) {
      auto it = cache.find(f.var);
      if (it == cache.end()) it = cache.emplace(f.var, on_atom(f.var)).first;
      const Expr& d = it->second;
      if (d.is_zero()) continue;
      Monomial rest = t.mono.with(f.var, f.exp - Frac(1));
      Coeff c = t.coeff * Coeff(f.exp.to_rational());
      for (const auto& dt : d.terms()) out.push_back({rest * dt.mono, c * dt.coeff});
    }
  }
  return Expr::from_terms(std::move(out));
}

Expr partial_deriv(const Expr& e, const Var& v) {
  return derive(e, [&](const Var& a) -> Expr {
    if (a == v) return Expr(1);
    if (a.is_exp() && v.is_symbol() && v.role == SymbolRole::Group && a.name == v.name) return Expr::atom(a);
    return Expr();
  });
}

Expr partial_deriv_param(const Expr& e, const std::string& param) {
  std::vector<Term> out;
  for (const auto& t : e.terms()) {
    const ParamPoly& n = t.coeff.numerator();
    const ParamPoly& d = t.coeff.denominator();
    auto dp = [&](const ParamPoly& p) {
      ParamPoly r;
      for (const auto& [k, c] : p.coefficients_in(param))
        if (k > 0) r += c.scaled(Rational(k)) * ParamPoly::variable(param, k - 1);
      return r;
    };
    // (n/d)' = (n' d - n d') / d^2
    Coeff c(dp(n) * d - n * dp(d), d * d);
    if (!c.is_zero()) out.push_back({t.mono, c});
  }
  return Expr::from_terms(std::move(out));
}

// ---------------------------------------------------------------- substitution

namespace {

// exp(q*s) under s -> L where L = sum r_j s_j is a combination of group symbols.
Expr exp_of_linear(const Var& exp_atom, Frac q, const Expr& value) {
  Monomial m;
  for (const auto& t : value.terms()) {
    const auto& fs = t.mono.factors();
    bool linear_group = fs.size() == 1 && fs[0].var.is_symbol() && fs[0].var.role == SymbolRole::Group &&
                        fs[0].exp == Frac(1) && t.coeff.is_rational();
    if (!linear_group)
      throw Error(ErrorCode::Unsupported,
                  "cannot substitute into exp(" + exp_atom.name + "): binding must be a rational combination of group parameters");
    Frac r = Frac::from_rational(t.coeff.rational_value());
    m = m * Monomial(Var::exp(fs[0].var.name), q * r);
  }
  return Expr::term(m, Coeff(1));
}

}  // namespace

Expr substitute(const Expr& e, const std::map<Var, Expr>& bindings) {
  if (bindings.empty()) return e;
  std::map<std::pair<Var, std::pair<std::int64_t, std::int64_t>>, Expr> powers;
  auto power_of = [&](const Var& v, const Expr& value, Frac p) -> const Expr& {
    auto key = std::make_pair(v, std::make_pair(p.num, p.den));
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, value.pow(p)).first;
    return it->second;
  };
  Expr result;
  std::vector<Term> plain;
  for (const auto& t : e.terms()) {
    Expr acc = Expr::term(Monomial(), t.coeff);
    Monomial kept;
    bool touched = false;
    for (const auto& f : t.mono.factors()) {
      auto it = bindings.find(f.var);
      if (it != bindings.end()) {
        acc = acc * power_of(f.var, it->second, f.exp);
        touched = true;
        continue;
      }
      if (f.var.is_exp()) {
        auto sit = bindings.find(Var::symbol(f.var.name, SymbolRole::Group));
        if (sit != bindings.end()) {
          acc = acc * exp_of_linear(f.var, f.exp, sit->second);
          touched = true;
          continue;
        }
      }
      kept = kept * Monomial(f.var, f.exp);
    }
    if (!touched) {
      plain.push_back(t);
      continue;
    }
    result += acc * Expr::term(kept, Coeff(1));
  }
  result += Expr::from_terms(std::move(plain));
  return result;
}

Expr substitute_params(const Expr& e, const std::map<std::string, Coeff>& values) {
  std::vector<Term> out;
  for (const auto& t : e.terms()) out.push_back({t.mono, t.coeff.substitute(values)});
  return Expr::from_terms(std::move(out));
}

Rational eval_at(const Expr& e, const SamplePoint& point) {
  Rational sum = 0;
  for (const auto& t : e.terms()) {
    Rational value = t.coeff.evaluate(point.params);
    for (const auto& f : t.mono.factors()) {
      auto it = point.atoms.find(f.var);
      if (it == point.atoms.end())
        throw Error(ErrorCode::Unbound, "atom '" + to_string(f.var) + "' is not bound at the sample point");
      Rational base = it->second;
      if (!f.exp.is_integer()) {
        auto root = exact_root(base, static_cast<unsigned long>(f.exp.den));
        if (!root)
          throw Error(ErrorCode::Unsupported, "sample for '" + to_string(f.var) + "' is not a perfect power");
        base = *root;
      }
      if (base == 0 && f.exp.num < 0)
        throw Error(ErrorCode::DivisionByZero, "atom '" + to_string(f.var) + "' sampled at zero");
      value *= pow(base, static_cast<long>(f.exp.num));
    }
    sum += value;
  }
  return sum;
}

std::map<Monomial, Expr> collect(const Expr& e, const std::function<bool(const Var&)>& pred) {
  std::map<Monomial, std::vector<Term>> buckets;
  for (const auto& t : e.terms()) {
    Monomial sel, rest;
    for (const auto& f : t.mono.factors()) {
      if (pred(f.var))
        sel = sel * Monomial(f.var, f.exp);
      else
        rest = rest * Monomial(f.var, f.exp);
    }
    buckets[sel].push_back({rest, t.coeff});
  }
  std::map<Monomial, Expr> out;
  for (auto& [m, ts] : buckets) {
    Expr c = Expr::from_terms(std::move(ts));
    if (!c.is_zero()) out.emplace(m, std::move(c));
  }
  return out;
}

Content content(const Expr& e) {
  Content c;
  if (e.is_zero()) return c;
  ParamPoly g;
  for (const auto& t : e.terms()) g = gcd(g, t.coeff.numerator());
  c.poly = g;
  // Monomial gcd (absent atoms count with exponent 0).
  std::map<Var, Frac> mins;
  bool first = true;
  for (const auto& t : e.terms()) {
    if (first) {
      for (const auto& f : t.mono.factors()) mins[f.var] = f.exp;
      first = false;
      continue;
    }
    for (auto it = mins.begin(); it != mins.end();) {
      Frac ex = t.mono.exponent_of(it->first);
      if (ex < it->second) it->second = ex;
      if (it->second.is_zero())
        it = mins.erase(it);
      else
        ++it;
    }
    for (const auto& f : t.mono.factors())
      if (!mins.count(f.var) && f.exp < Frac(0)) mins[f.var] = f.exp;
  }
  for (const auto& [v, ex] : mins) c.mono = c.mono * Monomial(v, ex);
  return c;
}

// ---------------------------------------------------------------- printing

namespace {

std::string dir_name(const PrintOptions& opts, int slot) {
  if (opts.table && static_cast<std::size_t>(slot) < opts.table->independents().size())
    return opts.table->independents()[static_cast<std::size_t>(slot)];
  return slot == 0 ? "x" : "t";
}

std::string arg_name(const PrintOptions& opts, const Var& fn, std::size_t i) {
  if (opts.table) {
    if (const FunctionSig* sig = opts.table->function(fn.name); sig && i < sig->args.size())
      return sig->args[i].name;
  }
  static const char* fallback[] = {"x", "t", "u", "v"};
  return fallback[i];
}

std::string subscript(const std::vector<std::string>& dirs, bool pretty) {
  if (dirs.empty()) return "";
  bool compact = pretty && std::all_of(dirs.begin(), dirs.end(), [](const std::string& d) { return d.size() == 1; });
  if (compact) {
    std::string s = "_";
    for (const auto& d : dirs) s += d;
    return s;
  }
  if (dirs.size() == 1) return "_" + dirs[0];
  std::string s = "_{";
  for (std::size_t i = 0; i < dirs.size(); ++i) s += (i ? "," : "") + dirs[i];
  return s + "}";
}

bool needs_parens_as_divisor(const ParamPoly& d) {
  if (!d.is_monomial()) return true;
  return d.leading_monomial().size() > 1;
}

std::string factor_string(const Factor& f, const PrintOptions& opts) {
  if (f.var.is_exp()) {
    Frac q = f.exp;
    if (q == Frac(1)) return "exp(" + f.var.name + ")";
    if (q == Frac(-1)) return "exp(-" + f.var.name + ")";
    return "exp(" + to_string(q) + "*" + f.var.name + ")";
  }
  std::string base = to_string(f.var, opts);
  if (f.exp == Frac(1)) return base;
  if (f.exp.is_integer() && f.exp.num > 0) return base + "^" + std::to_string(f.exp.num);
  return base + "^(" + to_string(f.exp) + ")";
}

}  // namespace

std::string to_string(const Var& v, const PrintOptions& opts) {
  switch (v.kind) {
    case AtomKind::Jet: {
      std::vector<std::string> dirs;
      for (int slot = 0; slot < 2; ++slot)
        for (int k = 0; k < v.orders[static_cast<std::size_t>(slot)]; ++k) dirs.push_back(dir_name(opts, slot));
      return v.name + subscript(dirs, opts.pretty);
    }
    case AtomKind::Function: {
      std::vector<std::string> dirs;
      for (std::size_t i = 0; i < Var::kMaxArgs; ++i)
        for (int k = 0; k < v.orders[i]; ++k) dirs.push_back(arg_name(opts, v, i));
      return v.name + subscript(dirs, opts.pretty);
    }
    case AtomKind::Symbol:
      return v.name;
    case AtomKind::Exp:
      return "exp(" + v.name + ")";
  }
  return v.name;
}

std::string to_string(const Monomial& m, const PrintOptions& opts) {
  std::string s;
  for (const auto& f : m.factors()) {
    if (!s.empty()) s += "*";
    s += factor_string(f, opts);
  }
  return s;
}

std::string to_string(const Expr& e, const PrintOptions& opts) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : e.terms()) {
    const ParamPoly& n = t.coeff.numerator();
    const ParamPoly& d = t.coeff.denominator();
    std::vector<std::string> parts;
    bool negative = false;
    std::string mono = to_string(t.mono, opts);
    if (n.is_monomial()) {
      Rational r = n.leading_coefficient();
      negative = r < 0;
      r = abs(r);
      std::string pm = ParamPoly::monomial(n.leading_monomial(), 1).to_string();
      bool has_pm = !n.leading_monomial().empty();
      if (r != 1 || (!has_pm && mono.empty())) parts.push_back(r.get_str());
      if (has_pm) parts.push_back(pm);
    } else {
      parts.push_back("(" + n.to_string() + ")");
    }
    if (!mono.empty()) parts.push_back(mono);
    std::string body;
    for (std::size_t i = 0; i < parts.size(); ++i) body += (i ? "*" : "") + parts[i];
    if (!d.is_constant()) body += needs_parens_as_divisor(d) ? "/(" + d.to_string() + ")" : "/" + d.to_string();
    if (first)
      out += negative ? "-" + body : body;
    else
      out += negative ? " - " + body : " + " + body;
    first = false;
  }
  return out;
}

}  // namespace liesym
