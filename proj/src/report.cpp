#include "liesym/report.hpp"

#include <cstdio>

#include "liesym/conslaw.hpp"
#include "liesym/error.hpp"
#include "liesym/flows.hpp"
#include "liesym/liealg.hpp"
#include "liesym/oracle.hpp"
#include "liesym/parser.hpp"
#include "liesym/problem.hpp"
#include "liesym/reduce.hpp"

namespace liesym {

using json = nlohmann::ordered_json;

namespace {

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

class Builder {
 public:
  explicit Builder(Report& r) : r_(r) {}

  std::size_t table(const SymbolTable& t) {
    r_.tables.push_back(t);
    return r_.tables.size() - 1;
  }
  std::string text(const Expr& e, std::size_t ti) const { return to_string(e, {&r_.tables[ti], true}); }
  json expr(const Expr& e, std::size_t ti) {
    std::string c = to_string(e, {&r_.tables[ti], false});
    r_.payloads.push_back({c, ti, e});
    return json{{"text", text(e, ti)}, {"canonical", c}};
  }
  json field(const VectorField& v, std::size_t ti) {
    json comps = json::array();
    for (const auto* part : {&v.xi, &v.phi})
      for (const auto& c : *part) comps.push_back(expr(c, ti));
    return json{{"text", to_string(v, r_.tables[ti], true)}, {"components", comps}};
  }
  void line(const std::string& s) { r_.lines.push_back(s); }
  void diag(const std::string& s) { r_.diagnostics.push_back(s); }
  void failed(const std::string& s) {
    r_.verification_failed = true;
    diag("verification failed: " + s);
  }

 private:
  Report& r_;
};

std::string config_text(const RunConfig& c) {
  std::string s = "degree=" + std::to_string(c.degree) + " jet_order=" + std::to_string(c.jet_order) +
                  " xt_degree=" + std::to_string(c.xt_degree) + " order=" + std::to_string(c.order) +
                  " mode=" + to_string(c.mode) + " seed=" + std::to_string(c.seed) +
                  " samples=" + std::to_string(c.samples);
  for (const auto& g : c.generators) s += " generator=" + g;
  for (const auto& g : c.checks) s += " check=" + g;
  for (const auto& g : c.candidates) s += " candidate=" + g;
  return s;
}

// names for basis elements, and a table in which they are symbols
std::string basis_prefix(const SymbolTable& t) {
  for (const char* p : {"v", "X", "g"})
    if (!t.kind(std::string(p) + "1")) return p;
  return "gen";
}

SymbolTable algebra_table(const SymbolTable& base, std::size_t n, const std::string& prefix) {
  SymbolTable t = base;
  for (std::size_t i = 1; i <= n; ++i) t.add_symbol(prefix + std::to_string(i), SymbolRole::Unknown);
  return t;
}

Expr combination(const std::vector<Expr>& coords, const std::string& prefix) {
  Expr out;
  for (std::size_t k = 0; k < coords.size(); ++k)
    out += coords[k] * Expr::atom(Var::symbol(prefix + std::to_string(k + 1), SymbolRole::Unknown));
  return out;
}

Expr combination(const CVector& coords, const std::string& prefix) {
  std::vector<Expr> e;
  for (const auto& c : coords) e.emplace_back(c);
  return combination(e, prefix);
}

std::string fresh_name(const SymbolTable& t, const std::string& want) {
  std::string n = want;
  while (t.kind(n)) n += "_";
  return n;
}

std::vector<VectorField> parse_generators(const std::vector<std::string>& gens, const SymbolTable& table) {
  std::vector<VectorField> out;
  for (const auto& g : gens) out.push_back(VectorField::parse(split_components(g), table));
  return out;
}

// --- commands -------------------------------------------------------------

void cmd_symmetries(Builder& b, Report& r, const ProblemSpec& spec, const RunConfig& cfg) {
  auto sol = classical_symmetries(spec, cfg.degree);
  std::size_t ti = b.table(spec.table);
  const std::string pre = basis_prefix(spec.table);
  r.results["degree"] = cfg.degree;
  r.results["unknowns"] = sol.unknowns;
  r.results["dimension"] = sol.basis.size();
  json gens = json::array();
  b.line("ansatz degree " + std::to_string(cfg.degree) + ": " + std::to_string(sol.unknowns) + " unknowns, rank " +
         std::to_string(sol.rank) + ", dimension " + std::to_string(sol.basis.size()));
  Oracle oracle(cfg.seed);
  for (std::size_t k = 0; k < sol.basis.size(); ++k) {
    const auto& v = sol.basis[k];
    bool zero = true;
    for (const auto& res : invariance_residuals(spec, v)) zero = zero && res.is_zero() && oracle.vanishes(res);
    if (!zero) b.failed("invariance residual of " + pre + std::to_string(k + 1) + " does not vanish");
    json g = b.field(v, ti);
    g["name"] = pre + std::to_string(k + 1);
    g["residual_zero"] = zero;
    gens.push_back(g);
    b.line("  " + pre + std::to_string(k + 1) + " = " + to_string(v, spec.table) + (zero ? "" : "   [residual nonzero]"));
  }
  r.results["generators"] = gens;
  json as = json::array();
  for (const auto& a : sol.assumptions) {
    as.push_back(a.to_string());
    b.diag("assumed nonzero: " + a.to_string());
  }
  r.results["assumptions"] = as;
}

void cmd_algebra(Builder& b, Report& r, const ProblemSpec& spec, const RunConfig& cfg) {
  auto sol = classical_symmetries(spec, cfg.degree);
  LieAlgebra g(sol.basis, spec.table);
  const std::string pre = basis_prefix(spec.table);
  std::size_t ti = b.table(algebra_table(spec.table, g.dim(), pre));
  json basis = json::array();
  b.line("basis:");
  for (std::size_t i = 0; i < g.dim(); ++i) {
    json f = b.field(g.basis()[i], ti);
    f["name"] = pre + std::to_string(i + 1);
    basis.push_back(f);
    b.line("  " + pre + std::to_string(i + 1) + " = " + to_string(g.basis()[i], spec.table));
  }
  r.results["basis"] = basis;
  json table = json::array();
  b.line("commutators [row, column]:");
  for (std::size_t i = 0; i < g.dim(); ++i) {
    json row = json::array();
    std::string text = "  ";
    for (std::size_t j = 0; j < g.dim(); ++j) {
      Expr c = combination(g.structure(i, j), pre);
      row.push_back(b.expr(c, ti));
      text += (j ? " | " : "") + b.text(c, ti);
    }
    table.push_back(row);
    b.line(text);
  }
  r.results["commutators"] = table;
  auto ds = g.derived_series();
  r.results["derived_series"] = ds;
  r.results["solvable"] = g.is_solvable();
  std::string s;
  for (auto d : ds) s += (s.empty() ? "" : ", ") + std::to_string(d);
  b.line("derived series dimensions: [" + s + "]");
  b.line(std::string("solvable: ") + (g.is_solvable() ? "yes" : "no"));
  if (ds.size() > 1 && ds[1] < ds[0])
    b.diag("the derived algebra [g,g] has dimension " + std::to_string(ds[1]) + " < " + std::to_string(ds[0]) +
           "; g is not equal to its own derived algebra");
}

void cmd_adjoint(Builder& b, Report& r, const ProblemSpec& spec, const RunConfig& cfg) {
  auto sol = classical_symmetries(spec, cfg.degree);
  LieAlgebra g(sol.basis, spec.table);
  const std::string pre = basis_prefix(spec.table);
  SymbolTable t = algebra_table(spec.table, g.dim(), pre);
  const std::string eps = fresh_name(t, "eps");
  t.add_symbol(eps, SymbolRole::Group);
  std::size_t ti = b.table(t);
  json out = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    json entry;
    std::string gi = pre + std::to_string(i + 1);
    entry["generator"] = gi;
    EMatrix m = g.adjoint_exp(i, eps);
    json images = json::array();
    b.line("Ad(exp(" + eps + "*" + gi + ")):");
    for (std::size_t j = 0; j < g.dim(); ++j) {
      std::vector<Expr> col;
      for (std::size_t k = 0; k < g.dim(); ++k) col.push_back(m[k][j]);
      Expr c = combination(col, pre);
      images.push_back(b.expr(c, ti));
      b.line("  " + pre + std::to_string(j + 1) + " -> " + b.text(c, ti));
    }
    entry["images"] = images;
    std::size_t len = g.series_length(i);
    entry["series_length"] = len;
    json eig = json::array();
    std::string es;
    for (const auto& [lam, mult] : g.ad_eigenvalues(i)) {
      eig.push_back(json{{"value", lam.get_str()}, {"multiplicity", mult}});
      es += (es.empty() ? "" : ", ") + lam.get_str() + (mult > 1 ? " (x" + std::to_string(mult) + ")" : "");
    }
    entry["ad_eigenvalues"] = eig;
    b.line(len ? "  Lie series terminates after " + std::to_string(len) + " terms"
               : "  closed form from ad eigenvalues {" + es + "}");
    out.push_back(entry);
  }
  r.results["adjoint"] = out;
}

void cmd_optimal(Builder& b, Report& r, const ProblemSpec& spec, const RunConfig& cfg) {
  auto sol = classical_symmetries(spec, cfg.degree);
  LieAlgebra g(sol.basis, spec.table);
  const std::string pre = basis_prefix(spec.table);
  std::size_t ti = b.table(algebra_table(spec.table, g.dim(), pre));
  std::vector<CVector> inputs;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    CVector e(g.dim(), Coeff(0));
    e[i] = Coeff(1);
    inputs.push_back(e);
  }
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      CVector e(g.dim(), Coeff(0));
      e[i] = e[j] = Coeff(1);
      inputs.push_back(e);
    }
  Oracle o(cfg.seed);
  for (int k = 0; k < cfg.samples; ++k) {
    CVector e;
    for (std::size_t i = 0; i < g.dim(); ++i) e.emplace_back(o.sample());
    inputs.push_back(e);
  }
  json out = json::array();
  std::vector<CVector> reps;
  for (const auto& in : inputs) {
    auto res = orbit_reduce(g, in);
    json entry;
    entry["input"] = b.expr(combination(in, pre), ti);
    json word = json::array();
    std::string ws;
    for (const auto& st : res.word) {
      std::string eps = b.text(Expr(st.eps), ti);
      word.push_back(json{{"generator", pre + std::to_string(st.generator + 1)}, {"eps", eps}});
      ws += " Ad(" + pre + std::to_string(st.generator + 1) + ", " + eps + ")";
    }
    entry["word"] = word;
    entry["scale"] = b.text(Expr(res.scale), ti);
    entry["representative"] = b.expr(combination(res.representative, pre), ti);
    bool replayed = replay(g, in, res.word, res.scale) == res.representative;
    entry["replay_ok"] = replayed;
    if (!replayed) b.failed("replaying the reduction word does not reproduce the representative");
    out.push_back(entry);
    b.line(b.text(combination(in, pre), ti) + "  ->  " + b.text(combination(res.representative, pre), ti) +
           (ws.empty() ? "" : "   via" + ws) + ", scale " + b.text(Expr(res.scale), ti));
    if (std::find(reps.begin(), reps.end(), res.representative) == reps.end()) reps.push_back(res.representative);
  }
  r.results["reductions"] = out;
  json rj = json::array();
  b.line("distinct representatives:");
  for (const auto& rep : reps) {
    rj.push_back(b.expr(combination(rep, pre), ti));
    b.line("  " + b.text(combination(rep, pre), ti));
  }
  r.results["representatives"] = rj;
}

void cmd_flows(Builder& b, Report& r, const ProblemSpec& spec, const RunConfig& cfg) {
  std::vector<VectorField> gens = cfg.generators.empty() ? classical_symmetries(spec, cfg.degree).basis
                                                         : parse_generators(cfg.generators, spec.table);
  SymbolTable t = spec.table;
  const std::string s = fresh_name(t, "s");
  t.add_symbol(s, SymbolRole::Group);
  std::size_t ti = b.table(t);
  std::vector<std::string> coords = t.independents();
  for (const auto& d : t.dependents()) coords.push_back(d);
  json out = json::array();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    json entry;
    entry["generator"] = b.field(gens[k], ti);
    b.line("exp(" + s + " * (" + to_string(gens[k], spec.table) + ")):");
    try {
      auto grp = exponentiate(gens[k], t, s);
      json maps = json::array();
      for (std::size_t c = 0; c < grp.maps.size(); ++c) {
        maps.push_back(b.expr(grp.maps[c], ti));
        b.line("  " + coords[c] + " -> " + b.text(grp.maps[c], ti));
      }
      bool ok = verify_flow(gens[k], grp, t);
      entry["maps"] = maps;
      entry["verified"] = ok;
      if (!ok) b.failed("flow of generator " + std::to_string(k + 1) + " does not satisfy its defining equations");
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Verification) throw;
      entry["error"] = e.what();
      b.diag("generator " + std::to_string(k + 1) + ": " + e.what());
      b.line("  (no closed form: " + std::string(e.what()) + ")");
    }
    out.push_back(entry);
  }
  r.results["flows"] = out;
}

std::vector<VectorField> default_reduction_fields(const ProblemSpec& spec, const RunConfig& cfg, bool with_sums) {
  if (!cfg.generators.empty()) return parse_generators(cfg.generators, spec.table);
  auto basis = classical_symmetries(spec, cfg.degree).basis;
  std::vector<VectorField> out = basis;
  if (with_sums)
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) out.push_back(basis[i] + basis[j]);
  return out;
}

SymbolTable chart_table(const SymbolTable& base) {
  SymbolTable t = base;
  if (!t.kind("w")) t.add_dependent("w");
  return t;
}

void cmd_reduce(Builder& b, Report& r, const ProblemSpec& spec, const RunConfig& cfg) {
  auto fields = default_reduction_fields(spec, cfg, true);
  std::size_t tb = b.table(spec.table);
  std::size_t tc = b.table(chart_table(spec.table));
  std::size_t tr = b.table(reduced_table(spec.table));
  std::vector<Expr> checks;
  for (const auto& c : cfg.checks) checks.push_back(parse_expr(c, spec.table));
  json out = json::array();
  for (const auto& v : fields) {
    json entry;
    entry["generator"] = b.field(v, tb);
    b.line(to_string(v, spec.table) + ":");
    // externally supplied chart entries are compared, never substituted
    json checked = json::array();
    for (const auto& c : checks) {
      Expr res = invariant_residual(v, c, std::max(0, max_jet_order(c)), spec.table);
      json item = b.expr(c, tb);
      item["invariant"] = res.is_zero();
      if (!res.is_zero()) item["residual"] = b.expr(res, tb);
      checked.push_back(item);
      b.line("  check " + b.text(c, tb) +
             (res.is_zero() ? "   [annihilated]" : "   [rejected, residual " + b.text(res, tb) + "]"));
      if (!res.is_zero()) b.diag("supplied chart entry " + b.text(c, tb) + " is not invariant under " + to_string(v, spec.table));
    }
    if (!checks.empty()) entry["checks"] = checked;
    try {
      auto chart = invariants(v, spec.table);
      bool inv = chart_is_invariant(v, chart, spec.table);
      entry["y"] = b.expr(chart.y, tb);
      entry["w"] = b.expr(chart.w, tb);
      entry["reconstruction"] = b.expr(chart.reconstruction, tc);
      entry["chart_invariant"] = inv;
      b.line("  y = " + b.text(chart.y, tb) + ",  w = " + b.text(chart.w, tb) + ",  u = " +
             b.text(chart.reconstruction, tc));
      if (!inv) b.failed("chart of " + to_string(v, spec.table) + " is not annihilated");
      auto red = reduce_pde(spec, chart);
      entry["ode"] = b.expr(red.ode, tr);
      entry["removed_factor"] = b.expr(red.removed_factor, tb);
      b.line("  reduced: " + b.text(red.ode, tr) + " = 0" +
             (red.removed_factor == Expr(1) ? "" : "   (factor " + b.text(red.removed_factor, tb) + " removed)"));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Verification) throw;
      entry["error"] = e.what();
      b.diag(to_string(v, spec.table) + ": " + e.what());
      b.line("  no reduction: " + std::string(e.what()));
    }
    out.push_back(entry);
  }
  r.results["reductions"] = out;
}

void cmd_invariants(Builder& b, Report& r, const ProblemSpec& spec, const RunConfig& cfg) {
  auto fields = default_reduction_fields(spec, cfg, false);
  std::size_t tb = b.table(spec.table);
  std::vector<Expr> checks;
  for (const auto& c : cfg.checks) checks.push_back(parse_expr(c, spec.table));
  json out = json::array();
  for (const auto& v : fields) {
    json entry;
    entry["generator"] = b.field(v, tb);
    b.line(to_string(v, spec.table) + ":");
    json list = json::array();
    auto record = [&](const Expr& inv, int n, const std::string& label) {
      Expr res = invariant_residual(v, inv, n, spec.table);
      json item = b.expr(inv, tb);
      item["label"] = label;
      item["order"] = n;
      item["verified"] = res.is_zero();
      if (!res.is_zero()) item["residual"] = b.expr(res, tb);
      list.push_back(item);
      b.line("  " + label + ": " + b.text(inv, tb) + (res.is_zero() ? "   [annihilated]" : "   [residual " + b.text(res, tb) + "]"));
      return res.is_zero();
    };
    try {
      auto chart = invariants(v, spec.table);
      if (!record(chart.y, 0, "y") || !record(chart.w, 0, "w"))
        b.failed("ordinary invariant of " + to_string(v, spec.table) + " not annihilated");
      // I_{k+1} = D I_k / D y along a direction in which D y is a monomial
      int dir = -1;
      for (int d = 0; d < 2 && dir < 0; ++d) {
        Expr dy = total_derivative(chart.y, d, spec.table);
        if (dy.is_single_term()) dir = d;
      }
      if (dir >= 0) {
        Expr dy = total_derivative(chart.y, dir, spec.table);
        Expr cur = chart.w;
        std::string label = "w_";
        for (int k = 1; k <= cfg.order; ++k) {
          cur = total_derivative(cur, dir, spec.table).divided_by(dy);
          label += "y";
          if (!record(cur, k, label)) b.failed("derived invariant " + label + " not annihilated");
        }
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Verification) throw;
      b.diag(to_string(v, spec.table) + ": " + e.what());
      b.line("  no ordinary invariants: " + std::string(e.what()));
    }
    for (const auto& c : checks) record(c, std::max(0, max_jet_order(c)), "check");
    entry["invariants"] = list;
    out.push_back(entry);
  }
  r.results["invariants"] = out;
}

void cmd_nonclassical(Builder& b, Report& r, const ProblemSpec& spec, const RunConfig& cfg) {
  AugmentedSystem sys = augment(spec);
  const SymbolTable& st = sys.system.table;
  std::size_t ts = b.table(st);
  r.results["mode"] = to_string(cfg.mode);
  json eqs = json::array();
  b.line("system:");
  for (const auto& eq : sys.system.equations) {
    eqs.push_back(b.expr(eq.lhs, ts));
    b.line("  " + b.text(eq.lhs, ts) + " = 0");
  }
  r.results["system"] = eqs;

  auto nc = nonclassical_determining(sys, cfg.mode);
  std::size_t tn = b.table(nc.table);
  json sc = json::array();
  b.line("surface conditions (" + to_string(cfg.mode) + "):");
  for (const auto& q : surface_conditions(nc.field, cfg.mode, nc.table)) {
    sc.push_back(b.expr(q.lhs, tn));
    b.line("  " + b.text(q.lhs, tn) + " = 0");
  }
  r.results["surface_conditions"] = sc;
  json res = json::array();
  b.line("determining residuals:");
  for (std::size_t k = 0; k < nc.residuals.size(); ++k) {
    res.push_back(b.expr(nc.residuals[k], tn));
    b.line("  [" + std::to_string(k + 1) + "] " + b.text(nc.residuals[k], tn) + " = 0");
  }
  r.results["residuals"] = res;

  auto classical = classical_symmetries(spec, cfg.degree).basis;
  std::vector<VectorField> lifted;
  json cl = json::array();
  b.line("lifted classical generators:");
  for (const auto& c : classical) {
    lifted.push_back(lift_classical(sys, c));
    const auto& l = lifted.back();
    json item = b.field(l, ts);
    Expr lead = cfg.mode == NcMode::Tau1 ? l.xi[1] : l.xi[0];
    bool applicable = lead.is_constant() && !lead.is_zero() && (cfg.mode == NcMode::Tau1 || l.xi[1].is_zero());
    if (applicable) {
      auto chk = check_candidate(sys, l, cfg.mode);
      bool ok = chk.symbolic_zero && chk.oracle_zero;
      item["residuals_zero"] = ok;
      if (!ok) b.failed("lifted classical generator " + to_string(l, st) + " has nonzero residuals");
      b.line("  " + to_string(l, st) + (ok ? "   [residuals zero]" : "   [residuals nonzero]"));
    } else {
      item["residuals_zero"] = nullptr;
      b.line("  " + to_string(l, st) + "   [not normalisable by a constant in this mode]");
    }
    cl.push_back(item);
  }
  r.results["lifted_classical"] = cl;

  auto sol = solve_restricted(sys, cfg.mode, cfg.degree);
  json rs;
  rs["degree"] = cfg.degree;
  rs["unknowns"] = sol.unknowns;
  rs["equations"] = sol.equations;
  rs["consistent"] = sol.consistent;
  b.line("polynomial ansatz of degree " + std::to_string(cfg.degree) + " (" + std::to_string(sol.unknowns) +
         " unknowns, " + std::to_string(sol.equations) + " equations):");
  if (sol.consistent) {
    rs["particular"] = b.field(sol.particular, ts);
    json hom = json::array();
    for (const auto& h : sol.homogeneous) hom.push_back(b.field(h, ts));
    rs["homogeneous"] = hom;
    std::string span;
    for (const auto& h : sol.homogeneous) span += (span.empty() ? "" : ", ") + to_string(h, st);
    b.line("  " + to_string(sol.particular, st) + " + span{" + span + "}");
  } else {
    b.line("  no solution");
  }
  bool only = only_classical(sol, lifted);
  rs["only_classical"] = only;
  b.line(std::string("  only classical solutions: ") + (only ? "yes" : "no"));
  r.results["restricted_solution"] = rs;

  json cands = json::array();
  for (const auto& text : cfg.candidates) {
    VectorField v = VectorField::parse(split_components(text), st);
    json item;
    item["candidate"] = b.field(v, ts);
    b.line("candidate " + to_string(v, st) + ":");
    try {
      auto chk = check_candidate(sys, v, cfg.mode);
      json rr = json::array();
      for (const auto& e : chk.residuals) {
        rr.push_back(b.expr(e, ts));
        b.line("  " + b.text(e, ts));
      }
      item["residuals"] = rr;
      item["passes"] = chk.symbolic_zero;
      item["jet_dependent"] = chk.normalized.depends_on_derivatives();
      if (chk.symbolic_zero != chk.oracle_zero) b.failed("oracle disagrees with the symbolic residual");
      if (chk.normalized.depends_on_derivatives()) b.diag("candidate " + to_string(v, st) + " depends on derivatives; residuals are reported, not certified");
      b.line(std::string("  passes: ") + (chk.symbolic_zero ? "yes" : "no"));
    } catch (const Error& e) {
      item["error"] = e.what();
      b.diag("candidate " + to_string(v, st) + ": " + e.what());
      b.line("  " + std::string(e.what()));
    }
    cands.push_back(item);
  }
  r.results["candidates"] = cands;
}

void cmd_conslaws(Builder& b, Report& r, const ProblemSpec& spec, const RunConfig& cfg) {
  auto ansatz = multiplier_ansatz(spec.table, cfg.jet_order, cfg.xt_degree);
  auto ms = find_multipliers(spec, ansatz);
  std::size_t ti = b.table(spec.table);
  r.results["ansatz_size"] = ansatz.size();
  r.results["dimension"] = ms.multipliers.size();
  b.line("multiplier ansatz: " + std::to_string(ansatz.size()) + " terms, " + std::to_string(ms.multipliers.size()) +
         " independent multipliers");
  json laws = json::array();
  for (const auto& m : ms.multipliers) {
    json law;
    law["multiplier"] = b.expr(m, ti);
    b.line("multiplier " + b.text(m, ti) + ":");
    try {
      auto cl = conservation_law(spec, m);
      law["t_flux"] = b.expr(cl.flux.psi, ti);
      law["x_flux"] = b.expr(cl.flux.phi, ti);
      law["verified"] = true;
      b.line("  D_t(" + b.text(cl.flux.psi, ti) + ")");
      b.line("  + D_x(" + b.text(cl.flux.phi, ti) + ") = multiplier * equation   [verified]");
    } catch (const Error& e) {
      law["verified"] = false;
      law["error"] = e.what();
      b.failed(std::string("conservation law for ") + b.text(m, ti) + ": " + e.what());
    }
    laws.push_back(law);
  }
  r.results["laws"] = laws;
  for (const auto& a : ms.assumptions) b.diag("assumed nonzero: " + a.to_string());
}

}  // namespace

std::vector<std::string> split_components(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

SolutionSpace classical_symmetries(const ProblemSpec& spec, int degree) {
  auto ansatz = AnsatzSpec::polynomial(spec.table, degree);
  auto sol = solve_determining(generate_determining(spec, ansatz), ansatz, spec.table);
  // generators with constant coefficients first
  auto weight = [](const VectorField& v) {
    int w = 0;
    for (const auto* part : {&v.xi, &v.phi})
      for (const auto& c : *part)
        if (!c.is_constant()) ++w;
    return w;
  };
  std::vector<std::size_t> idx(sol.basis.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return weight(sol.basis[a]) < weight(sol.basis[b]); });
  SolutionSpace out = sol;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    out.basis[i] = sol.basis[idx[i]];
    out.vectors[i] = sol.vectors[idx[i]];
  }
  return out;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"symmetries", "algebra", "adjoint",      "optimal", "flows",
                                          "reduce",     "invariants", "nonclassical", "conslaws"};
  return c;
}

Report run(const std::string& command, const ProblemSpec& spec, const RunConfig& cfg) {
  Report r;
  r.command = command;
  r.digest = hex64(fnv1a(canonical_text(spec) + "\n" + command + "\n" + config_text(cfg)));
  Builder b(r);
  if (command == "symmetries")
    cmd_symmetries(b, r, spec, cfg);
  else if (command == "algebra")
    cmd_algebra(b, r, spec, cfg);
  else if (command == "adjoint")
    cmd_adjoint(b, r, spec, cfg);
  else if (command == "optimal")
    cmd_optimal(b, r, spec, cfg);
  else if (command == "flows")
    cmd_flows(b, r, spec, cfg);
  else if (command == "reduce")
    cmd_reduce(b, r, spec, cfg);
  else if (command == "invariants")
    cmd_invariants(b, r, spec, cfg);
  else if (command == "nonclassical")
    cmd_nonclassical(b, r, spec, cfg);
  else if (command == "conslaws")
    cmd_conslaws(b, r, spec, cfg);
  else
    throw Error(ErrorCode::Validation, "unknown command '" + command + "'");
  return r;
}

std::string Report::to_text() const {
  std::string out = "command: " + command + "\ninput: " + digest + "\n";
  for (const auto& l : lines) out += l + "\n";
  if (!diagnostics.empty()) {
    out += "diagnostics:\n";
    for (const auto& d : diagnostics) out += "  " + d + "\n";
  }
  return out;
}

std::string Report::to_json() const {
  json j;
  j["command"] = command;
  j["input_digest"] = digest;
  j["results"] = results;
  j["diagnostics"] = diagnostics;
  j["verification_failed"] = verification_failed;
  return j.dump(2) + "\n";
}

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Verification:
    case ErrorCode::ResidualNonzero:
      return 3;
    default:
      return 2;
  }
}

}  // namespace liesym
