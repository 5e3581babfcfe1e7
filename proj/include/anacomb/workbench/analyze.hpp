#pragma once

// Asymptotic form of a specified class without a hand-written shape: a
// self-referential polynomial definition is located exactly as an algebraic
// branch, anything else is estimated from its coefficients.

#include "anacomb/singular/estimate.hpp"
#include "anacomb/singular/locate.hpp"
#include "anacomb/specdsl/ast.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <map>
#include <optional>

namespace anacomb::workbench {

namespace detail {

// Sparse bivariate polynomial keyed by (y-degree, z-degree).
using sparse_poly = std::map<std::pair<std::size_t, std::size_t>, Rational>;

inline sparse_poly sp_mul(const sparse_poly& a, const sparse_poly& b) {
  sparse_poly out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) out[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
  return out;
}

inline std::optional<sparse_poly> to_sparse(const specdsl::construction_node& n, const std::string& self) {
  using specdsl::node_kind;
  switch (n.kind) {
    case node_kind::atom: return sparse_poly{{{0, 1}, Rational(1)}};
    case node_kind::epsilon: return sparse_poly{{{0, 0}, Rational(1)}};
    case node_kind::scalar: return sparse_poly{{{0, 0}, n.value}};
    case node_kind::ref:
      if (n.name != self) return std::nullopt;
      return sparse_poly{{{1, 0}, Rational(1)}};
    case node_kind::neg: {
      auto c = to_sparse(n.children.at(0), self);
      if (!c) return std::nullopt;
      for (auto& [k, v] : *c) v = -v;
      return c;
    }
    case node_kind::union_: {
      sparse_poly out;
      for (const auto& ch : n.children) {
        auto c = to_sparse(ch, self);
        if (!c) return std::nullopt;
        for (const auto& [k, v] : *c) out[k] += v;
      }
      return out;
    }
    case node_kind::product: {
      sparse_poly out{{{0, 0}, Rational(1)}};
      for (const auto& ch : n.children) {
        auto c = to_sparse(ch, self);
        if (!c) return std::nullopt;
        out = sp_mul(out, *c);
      }
      return out;
    }
    case node_kind::pow: {
      if (denominator(n.value) != 1 || n.value < 0) return std::nullopt;
      auto c = to_sparse(n.children.at(0), self);
      if (!c) return std::nullopt;
      sparse_poly out{{{0, 0}, Rational(1)}};
      for (long e = numerator(n.value).convert_to<long>(); e > 0; --e) out = sp_mul(out, *c);
      return out;
    }
    default: return std::nullopt;
  }
}

}  // namespace detail

/// P(z, y) = y - rhs(z, y) when the single definition of `cls` is polynomial
/// in z and in itself only, of degree >= 2 in itself.
inline std::optional<series::bivariate_polynomial<Rational>> polynomial_equation(const specdsl::SpecSystem& s, const std::string& cls) {
  const auto* rhs = s.find(cls);
  if (!rhs || s.labelled) return std::nullopt;
  auto sp = detail::to_sparse(*rhs, cls);
  if (!sp) return std::nullopt;
  series::bivariate_polynomial<Rational> P;
  std::size_t dy = 1;
  for (const auto& [k, v] : *sp)
    if (v != 0) dy = std::max(dy, k.first);
  if (dy < 2) return std::nullopt;
  P.c.assign(dy + 1, {});
  auto put = [&](std::size_t j, std::size_t i, const Rational& v) {
    if (P.c[j].size() <= i) P.c[j].resize(i + 1, Rational(0));
    P.c[j][i] += v;
  };
  put(1, 0, Rational(1));
  for (const auto& [k, v] : *sp) put(k.first, k.second, -v);
  return P;
}

struct derived_form {
  singular::AsymptoticForm form;
  std::string method;  // "located" or "estimated"
  std::optional<singular::coefficient_estimate> estimate;
};

/// Leading-term form fitted to the estimate: c is matched at the last
/// coefficient of the window lying on the support.
inline singular::AsymptoticForm form_from_estimate(const series::Series& f, const singular::coefficient_estimate& e, std::size_t hi) {
  singular::AsymptoticForm a;
  a.rho = e.rho_hat;
  a.period = e.period;
  a.residue = e.residue;
  a.oscillation = e.oscillation.fires;
  std::size_t N = hi;
  while (N > 0 && e.period > 1 && N % e.period != e.residue % e.period) --N;
  const double alpha = e.alpha_hat;
  singular::SingularExpansion unit{e.rho_hat, {{1.0, alpha, 0}}, std::nullopt};
  const Float model = singular::is_gamma_pole(alpha) ? Float(0) : singular::transfer(unit, N);
  double c = model != 0 ? static_cast<double>(to_float(f.coefficient(N)) / (model * static_cast<unsigned long>(e.period))) : 0.0;
  a.elements.push_back({c, alpha, 0});
  return a;
}

inline derived_form derive_form(const series::Series& f, const specdsl::SpecSystem& s, const std::string& cls, std::size_t order) {
  if (auto P = polynomial_equation(s, cls)) {
    try {
      singular::algebraic_shape shape{*P, f.coefficient(0)};
      auto se = singular::singular_expansion(shape);
      return {singular::AsymptoticForm::from_expansion(se), "located", std::nullopt};
    } catch (const std::exception&) {
      // Not a simple root or no branch point found; fall back to estimation.
    }
  }
  auto e = singular::estimate_from_coefficients(f, order / 2, order);
  return {form_from_estimate(f, e, order), "estimated", e};
}

}  // namespace anacomb::workbench
