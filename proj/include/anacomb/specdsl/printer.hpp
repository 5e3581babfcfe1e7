#pragma once

// Canonical text form. parse_spec(print_spec(s)) == s for every SpecSystem
// whose names are valid identifiers: operands of products, quotients and
// negations are parenthesized when composite, fractions print as (p/q),
// powers print as POW(x, e).

#include "anacomb/specdsl/ast.hpp"

#include <sstream>
#include <string>

namespace anacomb::specdsl {

namespace detail {

inline bool is_composite(const construction_node& n) {
  switch (n.kind) {
    case node_kind::union_:
    case node_kind::product:
    case node_kind::quotient:
    case node_kind::neg: return true;
    default: return false;
  }
}

inline void print_rational(std::ostream& os, const Rational& q) {
  if (denominator_of(q) == 1)
    os << numerator_of(q);
  else
    os << '(' << numerator_of(q) << '/' << denominator_of(q) << ')';
}

inline void print_node(std::ostream& os, const construction_node& n);

inline void print_operand(std::ostream& os, const construction_node& n) {
  if (is_composite(n)) {
    os << '(';
    print_node(os, n);
    os << ')';
  } else {
    print_node(os, n);
  }
}

inline void print_card(std::ostream& os, const card_constraint& c) {
  if (c.lo && c.hi && *c.lo == *c.hi) {
    os << '=' << *c.lo << ", ";
    return;
  }
  if (c.lo) os << ">=" << *c.lo << ", ";
  if (c.hi) os << "<=" << *c.hi << ", ";
}

inline void print_node(std::ostream& os, const construction_node& n) {
  switch (n.kind) {
    case node_kind::atom: os << 'Z'; return;
    case node_kind::epsilon: os << "EPS"; return;
    case node_kind::ref:
    case node_kind::table: os << n.name; return;
    case node_kind::scalar: print_rational(os, n.value); return;
    case node_kind::union_:
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        const auto& c = n.children[i];
        if (i > 0 && c.kind == node_kind::neg) {
          os << " - ";
          print_operand(os, c.children.at(0));
          continue;
        }
        if (i > 0) os << " + ";
        if (c.kind == node_kind::union_)
          print_operand(os, c);
        else
          print_node(os, c);
      }
      return;
    case node_kind::product:
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i > 0) os << '*';
        print_operand(os, n.children[i]);
      }
      return;
    case node_kind::quotient: {
      print_operand(os, n.children.at(0));
      os << '/';
      const auto& d = n.children.at(1);
      if (d.kind == node_kind::scalar) {
        os << '(';
        print_rational(os, d.value);
        os << ')';
      } else {
        print_operand(os, d);
      }
      return;
    }
    case node_kind::neg:
      os << '-';
      print_operand(os, n.children.at(0));
      return;
    case node_kind::seq:
    case node_kind::set:
    case node_kind::cycle:
      os << n.name << '(';
      print_card(os, n.card);
      print_node(os, n.children.at(0));
      os << ')';
      return;
    case node_kind::exp:
      os << "EXP(";
      print_node(os, n.children.at(0));
      os << ')';
      return;
    case node_kind::log_inv:
      os << "LOGINV(";
      print_node(os, n.children.at(0));
      os << ')';
      return;
    case node_kind::pow:
      os << "POW(";
      print_node(os, n.children.at(0));
      os << ", ";
      if (n.value < 0) os << '-';
      os << mp::abs(numerator_of(n.value));
      if (denominator_of(n.value) != 1) os << '/' << denominator_of(n.value);
      os << ')';
      return;
    case node_kind::subst:
      os << "SUBST(";
      print_node(os, n.children.at(0));
      os << ", ";
      print_node(os, n.children.at(1));
      os << ')';
      return;
  }
}

}  // namespace detail

inline std::string print_expression(const construction_node& n) {
  std::ostringstream os;
  detail::print_node(os, n);
  return os.str();
}

inline std::string print_spec(const SpecSystem& s) {
  std::ostringstream os;
  os << (s.labelled ? "labelled" : "unlabelled") << '\n';
  if (!s.externals.empty()) {
    os << "external ";
    for (std::size_t i = 0; i < s.externals.size(); ++i) os << (i ? ", " : "") << s.externals[i];
    os << '\n';
  }
  for (const auto& d : s.definitions) os << d.name << " = " << print_expression(d.rhs) << '\n';
  return os.str();
}

}  // namespace anacomb::specdsl
