#pragma once

// Line-oriented recursive-descent parser for .acspec text.
//
//   file      := { line }
//   line      := [header] [ NAME '=' sum ] | 'external' NAME { ',' NAME }
//   header    := 'labelled' | 'unlabelled'
//   sum       := term { ('+' | '-') term }
//   term      := unary { ('*' | '/') unary }
//   unary     := '-' unary | postfix
//   postfix   := primary [ '^' INT ]
//   primary   := 'Z' | 'EPS' | INT | NAME | '(' sum ')'
//              | ('SEQ'|'SET'|'MSET'|'CYCLE'|'UCYCLE') '(' { card ',' } sum ')'
//              | 'EXP' '(' sum ')' | 'LOGINV' '(' sum ')'
//              | 'POW' '(' sum ',' ['-'] INT ['/' INT] ')' | 'SUBST' '(' sum ',' sum ')'
//   card      := '>=' INT | '<=' INT | '=' INT
//
// `#` starts a comment. INT '/' INT folds into one rational literal when the
// left side is a literal and the right side is a bare integer.

#include "anacomb/specdsl/ast.hpp"

#include <cctype>
#include <set>
#include <string>
#include <vector>

namespace anacomb::specdsl {

struct parse_options {
  /// Names treated as external tables in addition to `external` lines.
  std::vector<std::string> externals;
};

namespace detail {

enum class tok { name, integer, plus, minus, star, slash, caret, lparen, rparen, comma, equals, ge, le, end };

struct token {
  tok kind;
  std::string text;
  std::size_t line, column;
};

inline std::vector<token> lex_line(const std::string& src, std::size_t line) {
  std::vector<token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    const std::size_t col = i + 1;
    if (c == '#') break;
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({tok::name, src.substr(i, j - i), line, col});
      i = j;
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({tok::integer, src.substr(i, j - i), line, col});
      i = j;
      continue;
    }
    auto two = src.substr(i, 2);
    if (two == ">=" || two == "<=") {
      out.push_back({two == ">=" ? tok::ge : tok::le, two, line, col});
      i += 2;
      continue;
    }
    tok k;
    switch (c) {
      case '+': k = tok::plus; break;
      case '-': k = tok::minus; break;
      case '*': k = tok::star; break;
      case '/': k = tok::slash; break;
      case '^': k = tok::caret; break;
      case '(': k = tok::lparen; break;
      case ')': k = tok::rparen; break;
      case ',': k = tok::comma; break;
      case '=': k = tok::equals; break;
      default: throw spec_error(line, col, std::string("unexpected character '") + src[i] + "'");
    }
    out.push_back({k, std::string(1, src[i]), line, col});
    ++i;
  }
  out.push_back({tok::end, "", line, src.size() + 1});
  return out;
}

inline const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words{"Z",   "EPS",    "SEQ",    "SET", "MSET",  "CYCLE",    "UCYCLE",
                                           "EXP", "LOGINV", "POW",    "SUBST", "labelled", "unlabelled", "external"};
  return words;
}

struct reference_site {
  std::string name;
  std::size_t line, column;
};

class line_parser {
 public:
  line_parser(std::vector<token> toks, std::vector<reference_site>& refs) : t_(std::move(toks)), refs_(refs) {}

  const token& peek() const { return t_[pos_]; }
  const token& next() { return t_[pos_++]; }
  bool accept(tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const token& expect(tok k, const char* what) {
    if (peek().kind != k) fail(peek(), std::string("expected ") + what);
    return next();
  }
  [[noreturn]] static void fail(const token& at, const std::string& msg) {
    throw spec_error(at.line, at.column, msg + (at.kind == tok::end ? " at end of line" : " near '" + at.text + "'"));
  }

  construction_node sum() {
    construction_node first = term();
    if (peek().kind != tok::plus && peek().kind != tok::minus) return first;
    std::vector<construction_node> parts{std::move(first)};
    while (peek().kind == tok::plus || peek().kind == tok::minus) {
      bool minus = next().kind == tok::minus;
      construction_node t = term();
      parts.push_back(minus ? construction_node::unary(node_kind::neg, std::move(t)) : std::move(t));
    }
    return construction_node::nary(node_kind::union_, std::move(parts));
  }

  construction_node term() {
    construction_node cur = unary();
    bool own_product = false;
    while (peek().kind == tok::star || peek().kind == tok::slash) {
      if (next().kind == tok::star) {
        construction_node rhs = unary();
        if (own_product) {
          cur.children.push_back(std::move(rhs));
        } else {
          cur = construction_node::nary(node_kind::product, {std::move(cur), std::move(rhs)});
          own_product = true;
        }
      } else {
        if (cur.kind == node_kind::scalar && peek().kind == tok::integer &&
            t_[pos_ + 1].kind != tok::caret) {
          const token& d = next();
          Integer den(d.text);
          if (den == 0) fail(d, "division by zero in literal");
          cur.value = cur.value / Rational(den);
        } else {
          construction_node rhs = unary();
          cur = construction_node::nary(node_kind::quotient, {std::move(cur), std::move(rhs)});
        }
        own_product = false;
      }
    }
    return cur;
  }

  construction_node unary() {
    if (accept(tok::minus)) return construction_node::unary(node_kind::neg, unary());
    construction_node p = primary();
    if (accept(tok::caret)) {
      const token& e = expect(tok::integer, "integer exponent");
      construction_node n = construction_node::unary(node_kind::pow, std::move(p));
      n.value = Rational(Integer(e.text));
      return n;
    }
    return p;
  }

  construction_node primary() {
    const token& t = next();
    switch (t.kind) {
      case tok::integer: return construction_node::scalar(Rational(Integer(t.text)));
      case tok::lparen: {
        construction_node inner = sum();
        expect(tok::rparen, "')'");
        return inner;
      }
      case tok::name: break;
      default: fail(t, "expected an expression");
    }
    const std::string& w = t.text;
    if (w == "Z") return construction_node::leaf(node_kind::atom);
    if (w == "EPS") return construction_node::leaf(node_kind::epsilon);
    if (w == "SEQ" || w == "SET" || w == "MSET" || w == "CYCLE" || w == "UCYCLE") {
      expect(tok::lparen, "'('");
      card_constraint card = constraints();
      construction_node arg = sum();
      expect(tok::rparen, "')'");
      node_kind k = w == "SEQ" ? node_kind::seq : (w == "SET" || w == "MSET") ? node_kind::set : node_kind::cycle;
      return construction_node::construction(k, w, std::move(arg), card);
    }
    if (w == "EXP" || w == "LOGINV") {
      expect(tok::lparen, "'('");
      construction_node arg = sum();
      expect(tok::rparen, "')'");
      return construction_node::unary(w == "EXP" ? node_kind::exp : node_kind::log_inv, std::move(arg));
    }
    if (w == "POW") {
      expect(tok::lparen, "'('");
      construction_node arg = sum();
      expect(tok::comma, "','");
      bool negative = accept(tok::minus);
      Rational e(Integer(expect(tok::integer, "integer exponent").text));
      if (accept(tok::slash)) {
        const token& d = expect(tok::integer, "exponent denominator");
        Integer den(d.text);
        if (den == 0) fail(d, "zero exponent denominator");
        e /= Rational(den);
      }
      expect(tok::rparen, "')'");
      construction_node n = construction_node::unary(node_kind::pow, std::move(arg));
      n.value = negative ? Rational(-e) : e;
      return n;
    }
    if (w == "SUBST") {
      expect(tok::lparen, "'('");
      construction_node f = sum();
      expect(tok::comma, "','");
      construction_node g = sum();
      expect(tok::rparen, "')'");
      return construction_node::nary(node_kind::subst, {std::move(f), std::move(g)});
    }
    if (reserved_words().count(w)) fail(t, "keyword used as an expression");
    refs_.push_back({w, t.line, t.column});
    return construction_node::leaf(node_kind::ref, w);
  }

  card_constraint constraints() {
    card_constraint c;
    bool exact = false;
    while (peek().kind == tok::ge || peek().kind == tok::le || peek().kind == tok::equals) {
      const token& op = next();
      if (peek().kind != tok::integer) fail(peek(), "malformed cardinality constraint: expected an integer");
      std::size_t k = std::stoul(next().text);
      if (exact || (op.kind == tok::equals && (c.lo || c.hi))) fail(op, "malformed cardinality constraint: '=' combined with other bounds");
      if (op.kind == tok::ge) {
        if (c.lo) fail(op, "malformed cardinality constraint: duplicate lower bound");
        c.lo = k;
      } else if (op.kind == tok::le) {
        if (c.hi) fail(op, "malformed cardinality constraint: duplicate upper bound");
        c.hi = k;
      } else {
        c.lo = c.hi = k;
        exact = true;
      }
      if (c.lo && c.hi && *c.lo > *c.hi) fail(op, "malformed cardinality constraint: empty range");
      expect(tok::comma, "',' after cardinality constraint");
    }
    return c;
  }

  std::size_t pos_ = 0;

 private:
  std::vector<token> t_;
  std::vector<reference_site>& refs_;
};

}  // namespace detail

/// Parses .acspec source. Throws spec_error with 1-based line and column.
inline SpecSystem parse_spec(const std::string& text, const parse_options& options = {}) {
  SpecSystem sys;
  std::optional<bool> header;
  std::vector<detail::reference_site> refs;
  std::vector<detail::reference_site> defined;
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++line_no;
    start = end + 1;

    auto toks = detail::lex_line(line, line_no);
    detail::line_parser p(std::move(toks), refs);
    if (p.peek().kind == detail::tok::end) continue;

    const auto& first = p.peek();
    if (first.kind == detail::tok::name && (first.text == "labelled" || first.text == "unlabelled")) {
      bool lab = first.text == "labelled";
      if (header && *header != lab) throw spec_error(first.line, first.column, "conflicting labelled/unlabelled headers");
      header = lab;
      p.next();
      if (p.peek().kind == detail::tok::end) continue;
    } else if (first.kind == detail::tok::name && first.text == "external") {
      p.next();
      do {
        const auto& n = p.expect(detail::tok::name, "table name");
        if (detail::reserved_words().count(n.text)) detail::line_parser::fail(n, "keyword used as a table name");
        if (sys.is_external(n.text)) detail::line_parser::fail(n, "table declared twice");
        sys.externals.push_back(n.text);
      } while (p.accept(detail::tok::comma));
      p.expect(detail::tok::end, "end of line");
      continue;
    }

    const auto& name = p.expect(detail::tok::name, "class name");
    if (detail::reserved_words().count(name.text)) detail::line_parser::fail(name, "keyword used as a class name");
    for (const auto& d : defined)
      if (d.name == name.text) throw spec_error(name.line, name.column, "class '" + name.text + "' defined twice");
    defined.push_back({name.text, name.line, name.column});
    p.expect(detail::tok::equals, "'='");
    construction_node rhs = p.sum();
    p.expect(detail::tok::end, "end of line");
    sys.definitions.push_back({name.text, std::move(rhs)});
  }
  for (const auto& e : options.externals)
    if (!sys.is_external(e)) sys.externals.push_back(e);
  for (const auto& d : defined)
    if (sys.is_external(d.name)) throw spec_error(d.line, d.column, "'" + d.name + "' is both defined and external");

  sys.labelled = header.value_or(false);

  // Resolve references: externals become table leaves.
  auto resolve = [&](auto&& self, construction_node& n) -> void {
    if (n.kind == node_kind::ref && sys.is_external(n.name)) n.kind = node_kind::table;
    for (auto& c : n.children) self(self, c);
  };
  for (auto& d : sys.definitions) resolve(resolve, d.rhs);
  for (const auto& r : refs)
    if (!sys.find(r.name) && !sys.is_external(r.name))
      throw spec_error(r.line, r.column, "reference to undefined class '" + r.name + "'");
  return sys;
}

}  // namespace anacomb::specdsl
