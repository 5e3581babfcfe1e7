#pragma once

// Well-foundedness of a specification.
//
// Valuations are the least fixpoint from +infinity of the structural
// valuation rules. A reference to class Y inside the definition of X has a
// gain: the guaranteed index gap between a coefficient of X and the
// coefficients of Y it reads. The system is accepted iff every component
// argument (SEQ/SET/CYCLE, EXP/LOGINV, SUBST inner) has valuation >= 1 and
// the subgraph of zero-gain references is acyclic.

#include "anacomb/specdsl/ast.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace anacomb::specdsl {

inline constexpr std::size_t valuation_infinity = std::size_t(1) << 40;

struct validation_report {
  bool accepted = true;
  std::vector<std::string> errors;
  std::vector<std::string> offending;               // classes named in errors
  std::map<std::string, std::size_t> valuations;    // valuation_infinity for empty classes

  void reject(const std::string& cls, const std::string& msg) {
    accepted = false;
    errors.push_back(cls + ": " + msg);
    if (std::find(offending.begin(), offending.end(), cls) == offending.end()) offending.push_back(cls);
  }
};

namespace detail {

inline std::size_t vadd(std::size_t a, std::size_t b) { return std::min(a + b, valuation_infinity); }
inline std::size_t vmul(std::size_t a, std::size_t k) {
  if (a == 0 || k == 0) return 0;
  return a >= valuation_infinity / k ? valuation_infinity : a * k;
}

struct valuation_context {
  const std::map<std::string, std::size_t>& classes;
  const std::map<std::string, std::size_t>& tables;

  std::size_t of(const construction_node& n) const {
    switch (n.kind) {
      case node_kind::atom: return 1;
      case node_kind::epsilon: return 0;
      case node_kind::scalar: return n.value == 0 ? valuation_infinity : 0;
      case node_kind::ref: return classes.at(n.name);
      case node_kind::table: {
        auto it = tables.find(n.name);
        return it == tables.end() ? 1 : it->second;
      }
      case node_kind::union_: {
        std::size_t v = valuation_infinity;
        for (const auto& c : n.children) v = std::min(v, of(c));
        return v;
      }
      case node_kind::product: {
        std::size_t v = 0;
        for (const auto& c : n.children) v = vadd(v, of(c));
        return v;
      }
      case node_kind::neg: return of(n.children[0]);
      case node_kind::quotient: return of(n.children[0]);
      case node_kind::seq:
      case node_kind::set:
      case node_kind::cycle: {
        std::size_t lo = n.card.lo.value_or(0);
        if (n.kind == node_kind::cycle) lo = std::max<std::size_t>(lo, 1);
        return vmul(of(n.children[0]), lo);
      }
      case node_kind::exp: return 0;
      case node_kind::log_inv: return std::max<std::size_t>(1, of(n.children[0]));
      case node_kind::pow: {
        if (denominator_of(n.value) == 1 && n.value >= 0)
          return vmul(of(n.children[0]), numerator_of(n.value).convert_to<std::size_t>());
        return 0;
      }
      case node_kind::subst: return vmul(of(n.children[0]), std::max<std::size_t>(1, of(n.children[1])));
    }
    return 0;
  }
};

/// Calls visit(ref_name, gain) for every class reference in n.
inline void reference_gains(const valuation_context& V, const construction_node& n, std::size_t offset,
                            const std::function<void(const std::string&, std::size_t)>& visit) {
  auto arg_offset_for_components = [&](const construction_node& c, std::size_t arg_val) -> std::size_t {
    // Finite component counts read A with cofactor A^(lo-1); open-ended ones read A_n directly.
    if (c.card.hi) return vmul(arg_val, std::max<std::size_t>(c.card.lo.value_or(0), 1) - 1);
    return std::size_t{0};
  };
  switch (n.kind) {
    case node_kind::ref: visit(n.name, offset); return;
    case node_kind::union_:
    case node_kind::neg:
      for (const auto& c : n.children) reference_gains(V, c, offset, visit);
      return;
    case node_kind::product: {
      std::vector<std::size_t> vals;
      for (const auto& c : n.children) vals.push_back(V.of(c));
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        std::size_t others = 0;
        for (std::size_t j = 0; j < vals.size(); ++j)
          if (j != i) others = vadd(others, vals[j]);
        reference_gains(V, n.children[i], vadd(offset, others), visit);
      }
      return;
    }
    case node_kind::quotient:
      reference_gains(V, n.children[0], offset, visit);
      reference_gains(V, n.children[1], vadd(offset, V.of(n.children[0])), visit);
      return;
    case node_kind::seq:
    case node_kind::set:
    case node_kind::cycle:
      reference_gains(V, n.children[0], vadd(offset, arg_offset_for_components(n, V.of(n.children[0]))), visit);
      return;
    case node_kind::exp:
    case node_kind::log_inv: reference_gains(V, n.children[0], offset, visit); return;
    case node_kind::pow: {
      std::size_t extra = 0;
      if (denominator_of(n.value) == 1 && n.value >= 1)
        extra = vmul(V.of(n.children[0]), numerator_of(n.value).convert_to<std::size_t>() - 1);
      reference_gains(V, n.children[0], vadd(offset, extra), visit);
      return;
    }
    case node_kind::subst: {
      std::size_t vf = V.of(n.children[0]), vg = V.of(n.children[1]);
      // F_j lands at index >= j*vg, j >= max(vf, 1); the constant term only feeds index 0.
      std::size_t outer = (vf >= 1 && vg >= 2) ? vmul(vf, vg - 1) : 0;
      std::size_t inner = vmul(std::max<std::size_t>(vf, 1) - 1, vg);
      reference_gains(V, n.children[0], vadd(offset, outer), visit);
      reference_gains(V, n.children[1], vadd(offset, inner), visit);
      return;
    }
    default: return;
  }
}

inline void check_arguments(const valuation_context& V, const construction_node& n, const std::string& cls,
                            validation_report& rep) {
  auto need_positive = [&](const construction_node& arg, const char* what) {
    if (V.of(arg) == 0) rep.reject(cls, std::string(what) + " argument may contain an object of size 0");
  };
  switch (n.kind) {
    case node_kind::seq: need_positive(n.children[0], "SEQ"); break;
    case node_kind::set: need_positive(n.children[0], n.name == "MSET" ? "MSET" : "SET"); break;
    case node_kind::cycle: need_positive(n.children[0], n.name == "UCYCLE" ? "UCYCLE" : "CYCLE"); break;
    case node_kind::exp: need_positive(n.children[0], "EXP"); break;
    case node_kind::log_inv: need_positive(n.children[0], "LOGINV"); break;
    case node_kind::subst: need_positive(n.children[1], "SUBST inner"); break;
    case node_kind::quotient:
      if (V.of(n.children[1]) != 0) rep.reject(cls, "quotient by an expression without constant term");
      break;
    default: break;
  }
  for (const auto& c : n.children) check_arguments(V, c, cls, rep);
}

}  // namespace detail

/// Structural valuations of all classes (least fixpoint from infinity).
inline std::map<std::string, std::size_t> class_valuations(const SpecSystem& s,
                                                           const std::map<std::string, std::size_t>& tables = {}) {
  std::map<std::string, std::size_t> v;
  for (const auto& d : s.definitions) v[d.name] = valuation_infinity;
  detail::valuation_context V{v, tables};
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& d : s.definitions) {
      std::size_t nv = V.of(d.rhs);
      if (nv < v[d.name]) {
        v[d.name] = nv;
        changed = true;
      }
    }
  }
  return v;
}

/// `tables` gives valuations of external tables; unlisted tables count as 1.
inline validation_report validate_wellfounded(const SpecSystem& s, const std::map<std::string, std::size_t>& tables = {}) {
  validation_report rep;
  rep.valuations = class_valuations(s, tables);
  detail::valuation_context V{rep.valuations, tables};

  for (const auto& d : s.definitions) {
    detail::check_arguments(V, d.rhs, d.name, rep);
  }

  // Zero-gain reference graph.
  std::map<std::string, std::set<std::string>> zero_edges;
  for (const auto& d : s.definitions) {
    detail::reference_gains(V, d.rhs, 0, [&](const std::string& target, std::size_t gain) {
      if (gain == 0) zero_edges[d.name].insert(target);
    });
  }
  // Tarjan-free cycle detection: repeatedly strip classes with no outgoing zero-gain edge.
  std::set<std::string> alive;
  for (const auto& d : s.definitions) alive.insert(d.name);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = alive.begin(); it != alive.end();) {
      bool has_out = false;
      for (const auto& t : zero_edges[*it])
        if (alive.count(t)) has_out = true;
      if (!has_out) {
        it = alive.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  // Remaining classes reach a zero-gain cycle; report those on one.
  for (const auto& cls : alive) {
    std::set<std::string> seen;
    std::vector<std::string> stack{cls};
    bool on_cycle = false;
    while (!stack.empty() && !on_cycle) {
      auto cur = stack.back();
      stack.pop_back();
      for (const auto& t : zero_edges[cur]) {
        if (!alive.count(t)) continue;
        if (t == cls) on_cycle = true;
        if (seen.insert(t).second) stack.push_back(t);
      }
    }
    if (on_cycle) rep.reject(cls, "recursion without valuation gain (not well-founded)");
  }
  return rep;
}

}  // namespace anacomb::specdsl
