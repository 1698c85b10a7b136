#include "liesym/liealg.hpp"

#include "liesym/detsolve.hpp"
#include "liesym/error.hpp"

namespace liesym {

VectorField bracket(const VectorField& v, const VectorField& w, const SymbolTable& table) {
  VectorField r = VectorField::zero(table);
  for (std::size_t k = 0; k < r.xi.size(); ++k) r.xi[k] = apply(v, w.xi[k], table) - apply(w, v.xi[k], table);
  for (std::size_t k = 0; k < r.phi.size(); ++k) r.phi[k] = apply(v, w.phi[k], table) - apply(w, v.phi[k], table);
  return r;
}

LieAlgebra::LieAlgebra(std::vector<VectorField> basis, const SymbolTable& table)
    : basis_(std::move(basis)), table_(table) {
  std::size_t n = basis_.size();
  c_.assign(n, std::vector<CVector>(n, CVector(n, Coeff(0))));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      VectorField b = liesym::bracket(basis_[i], basis_[j], table_);
      auto x = express(b, basis_);
      if (!x)
        throw Error(ErrorCode::ClosureFailure, "[v" + std::to_string(i + 1) + ", v" + std::to_string(j + 1) +
                                                   "] = " + to_string(b, table_) + " is not in the span of the basis");
      c_[i][j] = *x;
      for (std::size_t k = 0; k < n; ++k) c_[j][i][k] = -(*x)[k];
    }
  }
}

CMatrix LieAlgebra::ad(std::size_t i) const {
  std::size_t n = dim();
  CMatrix m = zero_matrix(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m[k][j] = c_[i][j][k];
  return m;
}

CVector LieAlgebra::bracket(const CVector& x, const CVector& y) const {
  std::size_t n = dim();
  CVector out(n, Coeff(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Coeff f = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!c_[i][j][k].is_zero()) out[k] = out[k] + f * c_[i][j][k];
    }
  }
  return out;
}

VectorField LieAlgebra::field(const CVector& x) const {
  VectorField v = VectorField::zero(table_);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!x[i].is_zero()) v = v + Expr(x[i]) * basis_[i];
  return v;
}

std::vector<std::size_t> LieAlgebra::derived_series() const {
  std::size_t n = dim();
  std::vector<CVector> span;
  for (std::size_t i = 0; i < n; ++i) {
    CVector e(n, Coeff(0));
    e[i] = Coeff(1);
    span.push_back(e);
  }
  std::vector<std::size_t> dims{n};
  while (!span.empty()) {
    CMatrix gens;
    for (std::size_t i = 0; i < span.size(); ++i)
      for (std::size_t j = i + 1; j < span.size(); ++j) gens.push_back(bracket(span[i], span[j]));
    std::vector<CVector> next = gens.empty() ? std::vector<CVector>{} : rref(gens, n).matrix;
    dims.push_back(next.size());
    if (next.size() == span.size()) break;
    span = std::move(next);
  }
  return dims;
}

EMatrix LieAlgebra::adjoint_exp(std::size_t i, const std::string& eps) const {
  CMatrix m = ad(i);
  for (auto& row : m)
    for (auto& c : row) c = -c;
  return exp_matrix(m, eps);
}

std::size_t LieAlgebra::series_length(std::size_t i) const {
  CMatrix m = ad(i), p = identity_matrix(dim());
  for (std::size_t k = 0; k <= dim(); ++k) {
    bool zero = true;
    for (const auto& row : p)
      for (const auto& c : row)
        if (!c.is_zero()) zero = false;
    if (zero) return k;
    p = multiply(p, m);
  }
  return 0;
}

std::vector<std::pair<Rational, int>> LieAlgebra::ad_eigenvalues(std::size_t i) const {
  std::vector<Rational> poly;
  for (const auto& c : characteristic_polynomial(ad(i))) {
    if (!c.is_rational()) throw Error(ErrorCode::IrrationalEigenvalue, "eigenvalues depend on parameters");
    poly.push_back(c.rational_value());
  }
  return rational_roots(poly);
}

namespace {

const std::string kEps = "#eps";

CVector act(const EMatrix& m, const CVector& v, const Coeff& eps) {
  std::size_t n = v.size();
  Var e = Var::symbol(kEps, SymbolRole::Group);
  CVector out(n, Coeff(0));
  for (std::size_t r = 0; r < n; ++r) {
    Expr sum;
    for (std::size_t c = 0; c < n; ++c)
      if (!v[c].is_zero()) sum += m[r][c] * Expr(v[c]);
    Expr val = substitute(sum, {{e, Expr(eps)}});
    if (!val.is_constant() && !val.is_zero())
      throw Error(ErrorCode::NotAffine, "adjoint action is not polynomial in the group parameter");
    out[r] = val.is_zero() ? Coeff(0) : val.constant_value();
  }
  return out;
}

std::size_t zeros(const CVector& v) {
  std::size_t n = 0;
  for (const auto& c : v)
    if (c.is_zero()) ++n;
  return n;
}

}  // namespace

CVector replay(const LieAlgebra& g, const CVector& v, const std::vector<ReductionStep>& word, const Coeff& scale) {
  CVector cur = v;
  for (const auto& step : word) cur = act(g.adjoint_exp(step.generator, kEps), cur, step.eps);
  for (auto& c : cur) c = c * scale;
  return cur;
}

OrbitResult orbit_reduce(const LieAlgebra& g, const CVector& v) {
  std::size_t n = g.dim();
  bool nonzero = false;
  for (const auto& c : v)
    if (!c.is_zero()) nonzero = true;
  if (!nonzero) throw Error(ErrorCode::Validation, "orbit_reduce needs a nonzero vector");
  Var e = Var::symbol(kEps, SymbolRole::Group);
  std::vector<EMatrix> mats;
  for (std::size_t i = 0; i < n; ++i) mats.push_back(g.adjoint_exp(i, kEps));

  OrbitResult res;
  CVector cur = v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n && !changed; ++i) {
      std::vector<Expr> image(n);
      bool polynomial = true;
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
          if (!cur[c].is_zero()) image[r] += mats[i][r][c] * Expr(cur[c]);
        if (image[r].contains(Var::exp(kEps))) polynomial = false;
      }
      if (!polynomial) continue;
      for (std::size_t k = 0; k < n && !changed; ++k) {
        if (cur[k].is_zero() || image[k].degree_in(e) != Frac(1)) continue;
        auto parts = collect(image[k], [&](const Var& x) { return x == e; });
        Coeff slope = parts[Monomial(e)].constant_value();
        Coeff offset = parts.count(Monomial()) ? parts[Monomial()].constant_value() : Coeff(0);
        Coeff eps = -(offset / slope);
        CVector next = act(mats[i], cur, eps);
        if (zeros(next) > zeros(cur)) {
          cur = next;
          res.word.push_back({i, eps});
          res.progressed = true;
          changed = true;
        }
      }
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    if (!cur[k].is_zero()) {
      res.scale = cur[k].inverse();
      break;
    }
  }
  for (auto& c : cur) c = c * res.scale;
  res.representative = cur;
  return res;
}

}  // namespace liesym
