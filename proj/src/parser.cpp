#include "liesym/parser.hpp"

#include <cctype>

#include "liesym/error.hpp"

namespace liesym {

namespace {

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c >= 0x80; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

class Parser {
 public:
  Parser(const std::string& text, const SymbolTable& table) : text_(text), table_(table) {}

  ExprTree run() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    ExprTree e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ErrorCode::Syntax, pos_, msg);
  }
  [[noreturn]] void fail_unknown(const std::string& name, std::size_t at) const {
    throw ParseError(ErrorCode::UnknownSymbol, at, "unknown symbol '" + name + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      if (pos_ == text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  ExprTree expr() {
    ExprTree first = term();
    if (!peek('+') && !peek('-')) return first;
    ExprTree sum;
    sum.kind = ExprTree::Kind::Sum;
    sum.offset = first.offset;
    sum.children.push_back(std::move(first));
    while (true) {
      if (accept('+')) {
        sum.children.push_back(term());
      } else if (peek('-')) {
        std::size_t at = pos_++;
        ExprTree neg;
        neg.kind = ExprTree::Kind::Negate;
        neg.offset = at;
        neg.children.push_back(term());
        sum.children.push_back(std::move(neg));
      } else {
        break;
      }
    }
    return sum;
  }

  ExprTree term() {
    ExprTree acc = unary();
    while (true) {
      if (accept('*')) {
        ExprTree rhs = unary();
        if (acc.kind != ExprTree::Kind::Product) {
          ExprTree p;
          p.kind = ExprTree::Kind::Product;
          p.offset = acc.offset;
          p.children.push_back(std::move(acc));
          acc = std::move(p);
        }
        acc.children.push_back(std::move(rhs));
      } else if (peek('/')) {
        std::size_t at = pos_++;
        ExprTree q;
        q.kind = ExprTree::Kind::Quotient;
        q.offset = at;
        q.children.push_back(std::move(acc));
        q.children.push_back(unary());
        acc = std::move(q);
      } else {
        return acc;
      }
    }
  }

  ExprTree unary() {
    skip_ws();
    if (peek('-')) {
      std::size_t at = pos_++;
      ExprTree n;
      n.kind = ExprTree::Kind::Negate;
      n.offset = at;
      n.children.push_back(unary());
      return n;
    }
    if (accept('+')) return unary();
    return power();
  }

  ExprTree power() {
    ExprTree base = primary();
    if (!accept('^')) return base;
    ExprTree p;
    p.kind = ExprTree::Kind::Power;
    p.offset = base.offset;
    skip_ws();
    std::size_t at = pos_;
    if (accept('(')) {
      ExprTree ex = expr();
      expect(')');
      Expr value = normalize(ex);
      if (!value.is_constant() || !value.constant_value().is_rational())
        throw ParseError(ErrorCode::Syntax, at, "exponent must be a rational number");
      p.number = value.constant_value().rational_value();
    } else {
      bool negative = accept('-');
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      p.number = Rational(Integer(text_.substr(start, pos_ - start)));
      if (negative) p.number = -p.number;
    }
    p.children.push_back(std::move(base));
    return p;
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  ExprTree primary() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const std::size_t at = pos_;
    unsigned char c = static_cast<unsigned char>(text_[pos_]);
    if (std::isdigit(c) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
      auto value = parse_rational(text_.substr(start, pos_ - start));
      if (!value) throw ParseError(ErrorCode::Syntax, start, "malformed number");
      ExprTree n;
      n.kind = ExprTree::Kind::Number;
      n.number = *value;
      n.offset = at;
      return n;
    }
    if (accept('(')) {
      ExprTree inner = expr();
      expect(')');
      return inner;
    }
    if (!is_ident_start(c)) fail(std::string("unexpected '") + text_[pos_] + "'");
    std::string name = identifier();
    if (name == "exp" && peek('(')) {
      expect('(');
      ExprTree arg = expr();
      expect(')');
      ExprTree e;
      e.kind = ExprTree::Kind::Exp;
      e.offset = at;
      e.children.push_back(std::move(arg));
      return e;
    }
    if (name == "D" && peek('[')) return bracket_derivative(at);
    auto kind = table_.kind(name);
    if (!kind) fail_unknown(name, at);
    std::vector<std::string> dirs;
    if (pos_ < text_.size() && text_[pos_] == '_') {
      ++pos_;
      dirs = subscript(name, *kind);
    }
    return make_named(name, *kind, dirs, at);
  }

  std::vector<std::string> subscript(const std::string& base, SymbolKind kind) {
    std::vector<std::string> dirs;
    if (accept('{')) {
      do {
        skip_ws();
        std::string d = identifier();
        if (d.empty()) fail("expected direction name");
        dirs.push_back(d);
      } while (accept(','));
      expect('}');
      return dirs;
    }
    std::size_t start = pos_;
    std::string run = identifier();
    if (run.empty()) fail("expected subscript after '_'");
    if (valid_direction(base, kind, run)) return {run};
    for (char ch : run) {
      std::string d(1, ch);
      if (!valid_direction(base, kind, d)) throw ParseError(ErrorCode::Syntax, start, "bad derivative subscript '" + run + "'");
      dirs.push_back(d);
    }
    return dirs;
  }

  bool valid_direction(const std::string& base, SymbolKind kind, const std::string& d) const {
    if (kind == SymbolKind::Dependent) return table_.independent_slot(d) >= 0;
    if (kind == SymbolKind::Function) {
      const FunctionSig* sig = table_.function(base);
      for (const auto& a : sig->args)
        if (a.name == d) return true;
    }
    return false;
  }

  ExprTree bracket_derivative(std::size_t at) {
    expect('[');
    skip_ws();
    std::size_t name_at = pos_;
    std::string name = identifier();
    auto kind = table_.kind(name);
    if (!kind) fail_unknown(name, name_at);
    if (*kind != SymbolKind::Dependent && *kind != SymbolKind::Function)
      throw ParseError(ErrorCode::Syntax, name_at, "D[...] needs a dependent variable or function");
    std::vector<std::string> dirs;
    while (accept(',')) {
      skip_ws();
      std::size_t d_at = pos_;
      std::string d = identifier();
      if (!valid_direction(name, *kind, d)) throw ParseError(ErrorCode::Syntax, d_at, "bad derivative direction '" + d + "'");
      dirs.push_back(d);
    }
    expect(']');
    return make_named(name, *kind, dirs, at);
  }

  ExprTree make_named(const std::string& name, SymbolKind kind, const std::vector<std::string>& dirs, std::size_t at) {
    ExprTree n;
    n.offset = at;
    if (!dirs.empty() && kind != SymbolKind::Dependent && kind != SymbolKind::Function)
      throw ParseError(ErrorCode::Syntax, at, "'" + name + "' cannot carry a derivative subscript");
    switch (kind) {
      case SymbolKind::Parameter:
        n.kind = ExprTree::Kind::Parameter;
        n.parameter = name;
        return n;
      case SymbolKind::Dependent: {
        int k[2] = {0, 0};
        for (const auto& d : dirs) {
          int slot = table_.independent_slot(d);
          if (slot < 0) throw ParseError(ErrorCode::Syntax, at, "'" + d + "' is not an independent variable");
          ++k[slot];
        }
        n.kind = ExprTree::Kind::Atom;
        n.atom = Var::jet(name, k[0], k[1]);
        return n;
      }
      case SymbolKind::Function: {
        const FunctionSig* sig = table_.function(name);
        std::array<std::uint8_t, Var::kMaxArgs> orders{};
        for (const auto& d : dirs) {
          for (std::size_t i = 0; i < sig->args.size(); ++i)
            if (sig->args[i].name == d) ++orders[i];
        }
        n.kind = ExprTree::Kind::Atom;
        n.atom = Var::function(name, orders);
        return n;
      }
      case SymbolKind::Independent:
      case SymbolKind::Group:
      case SymbolKind::Reduction:
      case SymbolKind::Constant:
      case SymbolKind::Unknown:
        n.kind = ExprTree::Kind::Atom;
        n.atom = table_.symbol_var(name);
        return n;
    }
    fail_unknown(name, at);
  }

  const std::string& text_;
  const SymbolTable& table_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprTree parse(const std::string& text, const SymbolTable& table) {
  return Parser(text, table).run();
}

Expr normalize(const ExprTree& tree) {
  switch (tree.kind) {
    case ExprTree::Kind::Number:
      return Expr(tree.number);
    case ExprTree::Kind::Parameter:
      return Expr::parameter(tree.parameter);
    case ExprTree::Kind::Atom:
      return Expr::atom(tree.atom);
    case ExprTree::Kind::Sum: {
      Expr s;
      for (const auto& c : tree.children) s += normalize(c);
      return s;
    }
    case ExprTree::Kind::Product: {
      Expr p(1);
      for (const auto& c : tree.children) p = p * normalize(c);
      return p;
    }
    case ExprTree::Kind::Negate:
      return -normalize(tree.children[0]);
    case ExprTree::Kind::Quotient: {
      Expr den = normalize(tree.children[1]);
      if (den.is_zero()) throw ParseError(ErrorCode::DivisionByZero, tree.offset, "division by zero");
      try {
        return normalize(tree.children[0]).divided_by(den);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.code(), tree.offset, e.what());
      }
    }
    case ExprTree::Kind::Power: {
      Expr base = normalize(tree.children[0]);
      try {
        return base.pow(Frac::from_rational(tree.number));
      } catch (const Error& e) {
        throw ParseError(e.code(), tree.offset, e.what());
      }
    }
    case ExprTree::Kind::Exp: {
      Expr arg = normalize(tree.children[0]);
      Monomial m;
      for (const auto& t : arg.terms()) {
        const auto& fs = t.mono.factors();
        bool ok = fs.size() == 1 && fs[0].var.is_symbol() && fs[0].var.role == SymbolRole::Group &&
                  fs[0].exp == Frac(1) && t.coeff.is_rational();
        if (!ok)
          throw ParseError(ErrorCode::Unsupported, tree.offset,
                           "exp() argument must be a rational combination of group parameters");
        m = m * Monomial(Var::exp(fs[0].var.name), Frac::from_rational(t.coeff.rational_value()));
      }
      return Expr::term(m, Coeff(1));
    }
  }
  return {};
}

Expr parse_expr(const std::string& text, const SymbolTable& table) { return normalize(parse(text, table)); }

}  // namespace liesym
