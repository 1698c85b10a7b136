#include "liesym/problem.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "liesym/error.hpp"
#include "liesym/parser.hpp"

namespace liesym {

namespace {

struct Statement {
  std::string text;
  std::size_t offset;  // of text[0] in the file
};

std::string where(const std::string& src, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < src.size(); ++i) {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void fail(ErrorCode code, const std::string& src, std::size_t offset, std::string msg) {
  // messages of nested parse errors carry an offset relative to the statement
  auto cut = msg.rfind(" at offset ");
  if (cut != std::string::npos) msg.resize(cut);
  throw ParseError(code, offset, msg + " (" + where(src, offset) + ")");
}

std::vector<Statement> split(const std::string& src) {
  std::vector<Statement> out;
  std::string cur;
  std::size_t start = 0;
  bool fresh = true;
  for (std::size_t i = 0; i < src.size(); ++i) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      cur += ' ';
      continue;
    }
    if (c == ';') {
      out.push_back({cur, start});
      cur.clear();
      fresh = true;
      continue;
    }
    if (fresh) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      start = i;
      fresh = false;
    }
    cur += c;
  }
  std::size_t k = 0;
  while (k < cur.size() && std::isspace(static_cast<unsigned char>(cur[k]))) ++k;
  if (k < cur.size()) fail(ErrorCode::Syntax, src, start, "statement is missing its ';'");
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::string w;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!w.empty()) out.push_back(w);
      w.clear();
    } else {
      w += c;
    }
  }
  if (!w.empty()) out.push_back(w);
  return out;
}

Var pick_leading(const Expr& lhs) {
  Var best;
  int order = -1;
  for (const auto& v : lhs.atoms())
    if (v.is_jet() && v.order() > order) {
      best = v;
      order = v.order();
    }
  if (order < 0) throw Error(ErrorCode::Validation, "equation contains no derivative");
  return best;
}

}  // namespace

ProblemSpec parse_problem(const std::string& src) {
  auto stmts = split(src);
  if (stmts.empty()) throw ParseError(ErrorCode::Syntax, 0, "empty problem (line 1, column 1)");
  ProblemSpec spec;
  std::vector<std::pair<std::string, std::size_t>> eqs;
  std::vector<std::pair<std::string, std::size_t>> leads(0);
  for (const auto& st : stmts) {
    std::size_t colon = st.text.find(':');
    std::string head = st.text.substr(0, colon == std::string::npos ? st.text.size() : colon);
    auto w = words(head);
    const std::string kw = w.empty() ? "" : w[0];
    try {
      if (kw == "eq") {
        if (colon == std::string::npos || w.size() != 1) fail(ErrorCode::Syntax, src, st.offset, "expected 'eq: <lhs> = <rhs>'");
        eqs.emplace_back(st.text.substr(colon + 1), st.offset + colon + 1);
        leads.emplace_back("", 0);
      } else if (kw == "lead") {
        if (eqs.empty()) fail(ErrorCode::Validation, src, st.offset, "'lead' before any equation");
        std::size_t at = st.text.find("lead") + 4;
        leads.back() = {st.text.substr(at), st.offset + at};
      } else if (colon != std::string::npos) {
        fail(ErrorCode::Syntax, src, st.offset, "unexpected ':'");
      } else if (kw == "indep") {
        if (w.size() < 2) fail(ErrorCode::Syntax, src, st.offset, "'indep' needs variable names");
        for (std::size_t i = 1; i < w.size(); ++i) spec.table.add_independent(w[i]);
      } else if (kw == "dep") {
        std::string rest = st.text.substr(3);
        std::size_t pos = 0;
        while (pos < rest.size()) {
          std::size_t open = rest.find('(', pos);
          std::size_t close = rest.find(')', pos);
          if (open == std::string::npos || close == std::string::npos || close < open)
            fail(ErrorCode::Syntax, src, st.offset, "expected 'dep name(args)'");
          auto name = words(rest.substr(pos, open - pos));
          auto args = words(rest.substr(open + 1, close - open - 1));
          if (name.size() != 1) fail(ErrorCode::Syntax, src, st.offset, "expected one dependent variable name");
          std::vector<std::string> expected = spec.table.independents();
          std::sort(args.begin(), args.end());
          std::sort(expected.begin(), expected.end());
          if (args != expected)
            fail(ErrorCode::Validation, src, st.offset, "'" + name[0] + "' must depend on all declared independent variables");
          spec.table.add_dependent(name[0]);
          pos = close + 1;
          while (pos < rest.size() && (std::isspace(static_cast<unsigned char>(rest[pos])) || rest[pos] == ',')) ++pos;
        }
        if (spec.table.dependents().empty()) fail(ErrorCode::Syntax, src, st.offset, "'dep' needs a variable");
      } else if (kw == "param") {
        bool nonzero = w.size() > 1 && w.back() == "nonzero";
        std::size_t n = w.size() - (nonzero ? 1 : 0);
        if (n < 2) fail(ErrorCode::Syntax, src, st.offset, "'param' needs a name");
        for (std::size_t i = 1; i < n; ++i) spec.table.add_parameter(w[i], nonzero);
      } else {
        fail(ErrorCode::Syntax, src, st.offset, "unknown statement '" + kw + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(ErrorCode::Validation, src, st.offset, e.what());
    }
  }
  if (spec.table.independents().size() != 2) throw Error(ErrorCode::Validation, "exactly two independent variables are required");
  if (spec.table.dependents().empty()) throw Error(ErrorCode::Validation, "no dependent variable declared");
  if (eqs.empty()) throw Error(ErrorCode::Validation, "no equation given");

  for (std::size_t k = 0; k < eqs.size(); ++k) {
    const auto& [text, off] = eqs[k];
    std::size_t eqpos = text.find('=');
    auto side = [&](std::size_t from, std::size_t to) {
      try {
        return parse_expr(text.substr(from, to - from), spec.table);
      } catch (const ParseError& e) {
        fail(e.code() == ErrorCode::UnknownSymbol ? ErrorCode::Validation : e.code(), src, off + from + e.offset(), e.what());
      }
    };
    Expr lhs = eqpos == std::string::npos ? side(0, text.size()) : side(0, eqpos) - side(eqpos + 1, text.size());
    if (lhs.is_zero()) fail(ErrorCode::Validation, src, off, "equation is identically zero");
    Var lead;
    if (!leads[k].first.empty()) {
      Expr l;
      try {
        l = parse_expr(leads[k].first, spec.table);
      } catch (const ParseError& e) {
        fail(ErrorCode::Validation, src, leads[k].second + e.offset(), e.what());
      }
      if (!l.is_single_term() || l.terms()[0].mono.factors().size() != 1 || !l.terms()[0].mono.factors()[0].var.is_jet())
        fail(ErrorCode::Validation, src, leads[k].second, "'lead' must name a single jet variable");
      lead = l.terms()[0].mono.factors()[0].var;
    } else {
      lead = pick_leading(lhs);
    }
    try {
      solve_leading(lhs, lead);
    } catch (const Error& e) {
      fail(ErrorCode::Validation, src, off, std::string("leading derivative not resolvable: ") + e.what());
    }
    spec.equations.push_back({lhs, lead});
  }
  return spec;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Validation, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string canonical_text(const ProblemSpec& spec) {
  const auto& t = spec.table;
  std::string out = "indep";
  for (const auto& x : t.independents()) out += " " + x;
  out += ";\n";
  for (const auto& d : t.dependents()) {
    out += "dep " + d + "(";
    for (std::size_t i = 0; i < t.independents().size(); ++i) out += (i ? "," : "") + t.independents()[i];
    out += ");\n";
  }
  for (const auto& p : t.parameters()) out += "param " + p + (t.is_nonzero(p) ? " nonzero" : "") + ";\n";
  for (const auto& eq : spec.equations) {
    out += "eq: " + to_string(eq.lhs, {&t, false}) + " = 0;\n";
    out += "lead " + to_string(eq.leading, {&t, false}) + ";\n";
  }
  return out;
}

}  // namespace liesym
