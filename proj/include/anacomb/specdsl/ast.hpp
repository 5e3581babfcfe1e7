#pragma once

#include "anacomb/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace anacomb::specdsl {

/// Bounds on the number of components of SEQ/SET/CYCLE.
struct card_constraint {
  std::optional<std::size_t> lo, hi;
  bool empty() const { return !lo && !hi; }
  bool operator==(const card_constraint&) const = default;
};

enum class node_kind {
  atom,       // Z
  epsilon,    // EPS
  union_,     // a + b + ...; subtraction is a Neg child
  product,    // a * b * ...
  seq,
  set,        // SET or MSET
  cycle,      // CYCLE or UCYCLE
  ref,        // a class defined in the same system
  // analytic layer
  scalar,     // nonnegative rational literal
  neg,
  exp,
  log_inv,
  pow,        // child ^ value
  quotient,   // children[0] / children[1]
  subst,      // children[0] o children[1]
  table,      // externally supplied coefficient table
};

struct construction_node {
  node_kind kind = node_kind::epsilon;
  std::vector<construction_node> children;
  std::string name;     // ref/table target, or the keyword spelling of seq/set/cycle
  Rational value{0};    // scalar value, pow exponent
  card_constraint card;

  bool operator==(const construction_node&) const = default;

  static construction_node leaf(node_kind k, std::string name = {}) {
    construction_node n;
    n.kind = k;
    n.name = std::move(name);
    return n;
  }
  static construction_node scalar(Rational v) {
    construction_node n;
    n.kind = node_kind::scalar;
    n.value = std::move(v);
    return n;
  }
  static construction_node unary(node_kind k, construction_node child) {
    construction_node n;
    n.kind = k;
    n.children.push_back(std::move(child));
    return n;
  }
  static construction_node nary(node_kind k, std::vector<construction_node> children) {
    construction_node n;
    n.kind = k;
    n.children = std::move(children);
    return n;
  }
  static construction_node construction(node_kind k, std::string keyword, construction_node arg, card_constraint card = {}) {
    construction_node n = unary(k, std::move(arg));
    n.name = std::move(keyword);
    n.card = card;
    return n;
  }
};

struct definition {
  std::string name;
  construction_node rhs;
  bool operator==(const definition&) const = default;
};

/// A parsed specification. Definitions keep source order; externals are
/// names whose coefficients are supplied by the caller at compile time.
struct SpecSystem {
  bool labelled = false;
  std::vector<definition> definitions;
  std::vector<std::string> externals;

  bool operator==(const SpecSystem&) const = default;

  const construction_node* find(const std::string& name) const {
    for (const auto& d : definitions)
      if (d.name == name) return &d.rhs;
    return nullptr;
  }
  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < definitions.size(); ++i)
      if (definitions[i].name == name) return i;
    return std::nullopt;
  }
  bool is_external(const std::string& name) const {
    for (const auto& e : externals)
      if (e == name) return true;
    return false;
  }
};

class spec_error : public std::runtime_error {
 public:
  spec_error(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line), column_(column), message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_, column_;
  std::string message_;
};

}  // namespace anacomb::specdsl
