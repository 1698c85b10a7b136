#include "liesym/linalg.hpp"

#include <algorithm>

#include "liesym/error.hpp"

namespace liesym {

CMatrix zero_matrix(std::size_t rows, std::size_t cols) { return CMatrix(rows, CVector(cols, Coeff(0))); }

CMatrix identity_matrix(std::size_t n) {
  CMatrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Coeff(1);
  return m;
}

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
  std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  CMatrix c = zero_matrix(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (std::size_t l = 0; l < p; ++l)
        if (!b[j][l].is_zero()) c[i][l] = c[i][l] + a[i][j] * b[j][l];
    }
  return c;
}

EMatrix multiply(const EMatrix& a, const EMatrix& b) {
  std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  EMatrix c(n, std::vector<Expr>(p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (std::size_t l = 0; l < p; ++l)
        if (!b[j][l].is_zero()) c[i][l] += a[i][j] * b[j][l];
    }
  return c;
}

EMatrix to_expr_matrix(const CMatrix& m) {
  EMatrix out;
  for (const auto& row : m) {
    out.emplace_back();
    for (const auto& c : row) out.back().emplace_back(c);
  }
  return out;
}

namespace {

int pivot_score(const Coeff& c, const std::set<std::string>& nonzero) {
  if (c.is_rational()) return 0;
  auto safe = [&](const ParamPoly& p) {
    if (!p.is_monomial()) return false;
    for (const auto& v : p.variables())
      if (!nonzero.count(v)) return false;
    return true;
  };
  if (safe(c.numerator()) && safe(c.denominator())) return 1;
  return 2;
}

}  // namespace

Rref rref(CMatrix m, std::size_t cols, const std::set<std::string>& nonzero_params) {
  Rref r;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t best = m.size();
    int best_score = 3;
    for (std::size_t i = row; i < m.size(); ++i) {
      if (m[i][col].is_zero()) continue;
      int s = pivot_score(m[i][col], nonzero_params);
      if (s < best_score) {
        best = i;
        best_score = s;
        if (s == 0) break;
      }
    }
    if (best == m.size()) continue;
    std::swap(m[row], m[best]);
    if (best_score == 2) {
      ParamPoly p = m[row][col].numerator().monic();
      if (std::find(r.assumptions.begin(), r.assumptions.end(), p) == r.assumptions.end()) r.assumptions.push_back(p);
    }
    Coeff inv = m[row][col].inverse();
    for (std::size_t j = col; j < cols; ++j)
      if (!m[row][j].is_zero()) m[row][j] = m[row][j] * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      Coeff f = m[i][col];
      for (std::size_t j = col; j < cols; ++j)
        if (!m[row][j].is_zero()) m[i][j] = m[i][j] - f * m[row][j];
    }
    r.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  r.matrix = std::move(m);
  return r;
}

std::vector<CVector> nullspace(const CMatrix& m, std::size_t cols, const std::set<std::string>& nonzero_params,
                               std::vector<ParamPoly>* assumptions) {
  Rref r = rref(m, cols, nonzero_params);
  if (assumptions) *assumptions = r.assumptions;
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<CVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    CVector v(cols, Coeff(0));
    v[free] = Coeff(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.matrix[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const CMatrix& m, std::size_t cols) { return rref(m, cols).pivots.size(); }

std::optional<CVector> solve(const CMatrix& a, const CVector& b, std::size_t cols) {
  CMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    aug[i].resize(cols, Coeff(0));
    aug[i].push_back(b[i]);
  }
  Rref r = rref(aug, cols + 1);
  CVector x(cols, Coeff(0));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == cols) return std::nullopt;
    x[r.pivots[i]] = r.matrix[i][cols];
  }
  return x;
}

std::optional<CMatrix> inverse(const CMatrix& m) {
  std::size_t n = m.size();
  CMatrix aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, Coeff(0));
    aug[i][n + i] = Coeff(1);
  }
  Rref r = rref(aug, 2 * n);
  if (r.pivots.size() < n || r.pivots[n - 1] >= n) return std::nullopt;
  CMatrix inv = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = r.matrix[i][n + j];
  return inv;
}

std::vector<Coeff> characteristic_polynomial(const CMatrix& a) {
  // Faddeev-LeVerrier
  std::size_t n = a.size();
  std::vector<Coeff> c(n + 1, Coeff(0));
  c[0] = Coeff(1);
  CMatrix mk = zero_matrix(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    CMatrix next = multiply(a, mk);
    for (std::size_t i = 0; i < n; ++i) next[i][i] = next[i][i] + c[k - 1];
    mk = std::move(next);
    CMatrix am = multiply(a, mk);
    Coeff tr(0);
    for (std::size_t i = 0; i < n; ++i) tr = tr + am[i][i];
    c[k] = -(tr / Coeff(static_cast<long>(k)));
  }
  return c;
}

namespace {

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

Rational horner(const std::vector<Rational>& p, const Rational& x) {
  Rational v = 0;
  for (const auto& c : p) v = v * x + c;
  return v;
}

std::vector<Rational> deflate(const std::vector<Rational>& p, const Rational& r) {
  std::vector<Rational> q;
  Rational carry = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    carry = carry * r + p[i];
    q.push_back(carry);
  }
  return q;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const std::vector<Rational>& poly) {
  std::vector<Rational> p = poly;
  while (!p.empty() && p.front() == 0) p.erase(p.begin());
  std::vector<std::pair<Rational, int>> roots;
  auto record = [&](const Rational& r) {
    for (auto& [v, m] : roots)
      if (v == r) {
        ++m;
        return;
      }
    roots.emplace_back(r, 1);
  };
  while (p.size() > 1 && p.back() == 0) {
    p.pop_back();
    record(Rational(0));
  }
  while (p.size() > 1) {
    Integer l = 1;
    for (const auto& c : p) l = lcm(l, c.get_den());
    Integer lead = p.front().get_num() * (l / p.front().get_den());
    Integer tail = p.back().get_num() * (l / p.back().get_den());
    bool found = false;
    for (const auto& num : divisors(tail)) {
      for (const auto& den : divisors(lead)) {
        for (int sgn : {1, -1}) {
          Rational cand(sgn * num, den);
          cand.canonicalize();
          if (horner(p, cand) == 0) {
            record(cand);
            p = deflate(p, cand);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) throw Error(ErrorCode::IrrationalEigenvalue, "characteristic polynomial does not split over Q");
  }
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return roots;
}

EMatrix exp_matrix(const CMatrix& m, const std::string& eps) {
  std::size_t n = m.size();
  std::vector<Rational> poly;
  for (const auto& c : characteristic_polynomial(m)) {
    if (!c.is_rational()) throw Error(ErrorCode::IrrationalEigenvalue, "eigenvalues depend on parameters");
    poly.push_back(c.rational_value());
  }
  auto roots = rational_roots(poly);
  Expr e = Expr::atom(Var::symbol(eps, SymbolRole::Group));
  // confluent Vandermonde system for exp(eps*lambda) = sum_r c_r lambda^r
  CMatrix v = zero_matrix(n, n);
  std::vector<Expr> rhs;
  std::size_t row = 0;
  for (const auto& [lambda, mult] : roots) {
    for (int j = 0; j < mult; ++j, ++row) {
      for (std::size_t r = static_cast<std::size_t>(j); r < n; ++r) {
        Rational falling = 1;
        for (int i = 0; i < j; ++i) falling *= Rational(static_cast<long>(r) - i);
        v[row][r] = Coeff(falling * pow(lambda, static_cast<long>(r) - j));
      }
      Expr val = e.pow(static_cast<long>(j));
      if (lambda != 0) val = val * Expr::atom(Var::exp(eps), Frac::from_rational(lambda));
      rhs.push_back(val);
    }
  }
  auto vinv = inverse(v);
  if (!vinv) throw Error(ErrorCode::IrrationalEigenvalue, "singular Vandermonde system");
  EMatrix result(n, std::vector<Expr>(n));
  CMatrix power = identity_matrix(n);
  for (std::size_t r = 0; r < n; ++r) {
    Expr cr;
    for (std::size_t k = 0; k < n; ++k)
      if (!(*vinv)[r][k].is_zero()) cr += (*vinv)[r][k] * rhs[k];
    if (!cr.is_zero())
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!power[i][j].is_zero()) result[i][j] += power[i][j] * cr;
    power = multiply(power, m);
  }
  return result;
}

}  // namespace liesym
