#pragma once

// Translation of a specification to (exponential) generating functions.
//
// Labelled systems yield EGFs, unlabelled ones OGFs; the only difference is
// the translation of SET/MSET and CYCLE/UCYCLE. UCYCLE has the CYCLE
// generating function: the reflection weight 1/2 is written in the source.

#include "anacomb/series/ops.hpp"
#include "anacomb/series/recursive.hpp"
#include "anacomb/specdsl/validate.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace anacomb::specdsl {

using series::Series;

class compile_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Series power_of(const Series& a, std::size_t k) {
  return series::power(a, Rational(static_cast<long>(k)));
}

/// Sum over j in [lo, hi] of term(j).
template <class Fn>
Series finite_sum(std::size_t lo, std::size_t hi, Fn term) {
  Series acc = Series::zero();
  bool first = true;
  for (std::size_t j = lo; j <= hi; ++j) {
    Series t = term(j);
    acc = first ? t : acc + t;
    first = false;
  }
  return acc;
}

class compiler {
 public:
  compiler(const SpecSystem& s, const std::map<std::string, Series>& tables, std::map<std::string, Series> unknowns)
      : s_(s), tables_(tables), unknowns_(std::move(unknowns)) {}

  Series build(const construction_node& n) {
    using K = node_kind;
    switch (n.kind) {
      case K::atom: return Series::variable();
      case K::epsilon: return Series::one();
      case K::scalar: return Series(n.value);
      case K::ref: return unknowns_.at(n.name);
      case K::table: {
        auto it = tables_.find(n.name);
        if (it == tables_.end()) throw compile_error("no coefficient table supplied for '" + n.name + "'");
        return it->second;
      }
      case K::union_: {
        Series acc = build(n.children[0]);
        for (std::size_t i = 1; i < n.children.size(); ++i) acc = acc + build(n.children[i]);
        return acc;
      }
      case K::product: {
        Series acc = build(n.children[0]);
        for (std::size_t i = 1; i < n.children.size(); ++i) acc = acc * build(n.children[i]);
        return acc;
      }
      case K::neg: return -build(n.children[0]);
      case K::quotient: return build(n.children[0]) / build(n.children[1]);
      case K::exp: return series::exp(build(n.children[0]));
      case K::log_inv: return series::log_inv(build(n.children[0]));
      case K::pow: return series::power(build(n.children[0]), n.value);
      case K::subst: return series::substitute(build(n.children[0]), build(n.children[1]));
      case K::seq: return sequence(build(n.children[0]), n.card);
      case K::set: return s_.labelled ? labelled_set(build(n.children[0]), n.card) : multiset(build(n.children[0]), n.card);
      case K::cycle: return s_.labelled ? labelled_cycle(build(n.children[0]), n.card) : unlabelled_cycle(build(n.children[0]), n.card);
    }
    throw compile_error("unknown node kind");
  }

 private:
  static Series sequence(const Series& a, const card_constraint& c) {
    std::size_t lo = c.lo.value_or(0);
    if (c.hi) return finite_sum(lo, *c.hi, [&](std::size_t j) { return power_of(a, j); });
    Series q = series::quasi_inverse(a);
    return lo == 0 ? q : power_of(a, lo) * q;
  }

  static Series labelled_set(const Series& a, const card_constraint& c) {
    auto term = [&](std::size_t j) { return series::scale(power_of(a, j), Rational(Integer(1), factorial(static_cast<unsigned>(j)))); };
    std::size_t lo = c.lo.value_or(0);
    if (c.hi) return finite_sum(lo, *c.hi, term);
    Series full = series::exp(a);
    return lo == 0 ? full : full - finite_sum(0, lo - 1, term);
  }

  static Series labelled_cycle(const Series& a, const card_constraint& c) {
    auto term = [&](std::size_t j) { return series::scale(power_of(a, j), make_rational(1, static_cast<long long>(j))); };
    std::size_t lo = std::max<std::size_t>(1, c.lo.value_or(1));
    if (c.hi) return *c.hi < lo ? Series::zero() : finite_sum(lo, *c.hi, term);
    Series full = series::log_inv(a);
    return lo <= 1 ? full : full - finite_sum(1, lo - 1, term);
  }

  /// M_k = (1/k) sum_{j=1}^k A(z^j) M_{k-j}: multisets with exactly k components.
  static std::vector<Series> multiset_layers(const Series& a, std::size_t k) {
    std::vector<Series> M{Series::one()};
    for (std::size_t m = 1; m <= k; ++m) {
      Series acc = finite_sum(1, m, [&](std::size_t j) { return series::dilate(a, j) * M[m - j]; });
      M.push_back(series::scale(acc, make_rational(1, static_cast<long long>(m))));
    }
    return M;
  }

  static Series multiset(const Series& a, const card_constraint& c) {
    std::size_t lo = c.lo.value_or(0);
    if (c.hi) {
      auto M = multiset_layers(a, *c.hi);
      return finite_sum(lo, *c.hi, [&](std::size_t j) { return M[j]; });
    }
    Series full = series::polya_set(a);
    if (lo == 0) return full;
    auto M = multiset_layers(a, lo - 1);
    return full - finite_sum(0, lo - 1, [&](std::size_t j) { return M[j]; });
  }

  /// C_k = (1/k) sum_{d | k} phi(d) A(z^d)^{k/d}: cycles with exactly k components.
  static Series cycle_layer(const Series& a, std::size_t k) {
    Series acc = Series::zero();
    bool first = true;
    for (std::size_t d : divisors(k)) {
      Series t = series::scale(power_of(series::dilate(a, d), k / d),
                               make_rational(static_cast<long long>(totient(d)), static_cast<long long>(k)));
      acc = first ? t : acc + t;
      first = false;
    }
    return acc;
  }

  static Series unlabelled_cycle(const Series& a, const card_constraint& c) {
    std::size_t lo = std::max<std::size_t>(1, c.lo.value_or(1));
    auto layer = [&](std::size_t j) { return cycle_layer(a, j); };
    if (c.hi) return *c.hi < lo ? Series::zero() : finite_sum(lo, *c.hi, layer);
    Series full = series::polya_cycle(a);
    return lo <= 1 ? full : full - finite_sum(1, lo - 1, layer);
  }

  const SpecSystem& s_;
  const std::map<std::string, Series>& tables_;
  std::map<std::string, Series> unknowns_;
};

}  // namespace detail

/// Solutions for every class of the system. Throws compile_error when the
/// system is not well-founded.
inline std::map<std::string, Series> compile_system(const SpecSystem& s, const std::map<std::string, Series>& tables = {}) {
  std::map<std::string, std::size_t> table_vals;
  for (const auto& name : s.externals) {
    auto it = tables.find(name);
    if (it == tables.end()) throw compile_error("no coefficient table supplied for '" + name + "'");
    table_vals[name] = it->second.valuation(64).value_or(valuation_infinity);
  }
  auto rep = validate_wellfounded(s, table_vals);
  if (!rep.accepted) {
    std::string msg = "specification rejected:";
    for (const auto& e : rep.errors) msg += " " + e + ";";
    throw compile_error(msg);
  }
  series::recursive_system<Rational> sys;
  std::map<std::string, Series> unknowns;
  for (const auto& d : s.definitions) {
    std::size_t v = std::min<std::size_t>(rep.valuations.at(d.name), series::detail::infinite_valuation);
    unknowns.emplace(d.name, sys.unknown(v, d.name));
  }
  std::map<std::string, Series> tables_shifted;
  for (const auto& [name, series_value] : tables) {
    auto it = table_vals.find(name);
    // Re-declare the table with its observed valuation so the bound is structural.
    if (it != table_vals.end() && it->second > 0 && it->second < valuation_infinity) {
      Series src = series_value;
      tables_shifted.emplace(name, Series::from_generator([src](std::size_t n) { return src.coefficient(n); }, it->second));
    } else {
      tables_shifted.emplace(name, series_value);
    }
  }
  detail::compiler c(s, tables_shifted, unknowns);
  for (std::size_t i = 0; i < s.definitions.size(); ++i) sys.define(i, c.build(s.definitions[i].rhs));
  std::map<std::string, Series> out;
  for (std::size_t i = 0; i < s.definitions.size(); ++i) out.emplace(s.definitions[i].name, sys.solution(i));
  return out;
}

/// The (E)GF of one class with coefficients 0..order materialized.
inline Series compile_to_series(const SpecSystem& s, const std::string& cls, std::size_t order,
                                const std::map<std::string, Series>& tables = {}) {
  auto all = compile_system(s, tables);
  auto it = all.find(cls);
  if (it == all.end()) throw compile_error("no class named '" + cls + "'");
  it->second.ensure(order);
  return it->second;
}

}  // namespace anacomb::specdsl
