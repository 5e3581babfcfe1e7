#pragma once

// Fixed-point solvers and the linear-operator solver.
//
// Three routes compute the same power series y with P(z, y) = 0 (or y = phi(y)):
//  * iterate_fixed_point: plain iteration from 0, truncated; the reference.
//  * newton_algebraic: Newton steps on truncated polynomials, doubling the
//    number of correct coefficients per step; needs a simple root at z = 0.
//  * algebraic_fixed_point: lazy online solution built from the series algebra.

#include "anacomb/series/recursive.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace anacomb::series {

class non_contraction_error : public series_domain_error {
 public:
  using series_domain_error::series_domain_error;
};

/// P(z, y) = sum_j c[j](z) y^j with polynomial coefficients c[j].
template <class R>
struct bivariate_polynomial {
  std::vector<std::vector<R>> c;

  std::size_t degree_y() const { return c.empty() ? 0 : c.size() - 1; }

  R at(std::size_t j, std::size_t i) const {
    return j < c.size() && i < c[j].size() ? c[j][i] : R(0);
  }

  /// d/dy.
  bivariate_polynomial derivative_y() const {
    bivariate_polynomial d;
    for (std::size_t j = 1; j < c.size(); ++j) {
      std::vector<R> row = c[j];
      for (auto& v : row) v = R(static_cast<long>(j)) * v;
      d.c.push_back(std::move(row));
    }
    return d;
  }

  /// Coefficients Q_j(z) of P(z, y0 + k) = sum_j Q_j(z) k^j.
  bivariate_polynomial taylor_shift(const R& y0) const {
    bivariate_polynomial out;
    out.c.assign(c.size(), {});
    // Horner in y: P = (...(c_d (y0+k) + c_{d-1})(y0+k) + ...).
    for (std::size_t jj = c.size(); jj-- > 0;) {
      std::vector<std::vector<R>> next(c.size());
      for (std::size_t j = 0; j < out.c.size(); ++j) {
        const auto& row = out.c[j];
        if (row.empty()) continue;
        add_into(next[j], row, y0);
        if (j + 1 < next.size()) add_into(next[j + 1], row, R(1));
      }
      add_into(next[0], c[jj], R(1));
      out.c = std::move(next);
    }
    return out;
  }

  /// P(0, y) at a constant y.
  R value_at_origin(const R& y) const {
    R acc(0);
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * y + at(j, 0);
    return acc;
  }

 private:
  static void add_into(std::vector<R>& dst, const std::vector<R>& src, const R& s) {
    if (dst.size() < src.size()) dst.resize(src.size(), R(0));
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] += s * src[i];
  }
};

namespace detail {

template <class R>
std::vector<R> mul_trunc(const std::vector<R>& a, const std::vector<R>& b, std::size_t order) {
  std::vector<R> out(std::min(order, a.size() + b.size() == 0 ? 0 : a.size() + b.size() - 1), R(0));
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
    if (ring_traits<R>::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

template <class R>
std::vector<R> eval_trunc(const bivariate_polynomial<R>& P, const std::vector<R>& y, std::size_t order) {
  std::vector<R> acc;
  for (std::size_t j = P.c.size(); j-- > 0;) {
    acc = mul_trunc(acc, y, order);
    const auto& row = P.c[j];
    if (acc.size() < std::min(order, row.size())) acc.resize(std::min(order, row.size()), R(0));
    for (std::size_t i = 0; i < row.size() && i < order; ++i) acc[i] += row[i];
  }
  acc.resize(order, R(0));
  return acc;
}

template <class R>
std::vector<R> inverse_trunc(const std::vector<R>& a, std::size_t order) {
  if (a.empty() || ring_traits<R>::is_zero(a[0])) throw series_domain_error("truncated inverse of a non-unit");
  std::vector<R> g(order, R(0));
  if (order == 0) return g;
  const R inv0 = ring_traits<R>::inverse(a[0]);
  g[0] = inv0;
  for (std::size_t n = 1; n < order; ++n) {
    R acc(0);
    for (std::size_t k = 1; k <= n && k < a.size(); ++k) acc += a[k] * g[n - k];
    g[n] = -(inv0 * acc);
  }
  return g;
}

}  // namespace detail

/// Plain iteration y <- phi(y) mod z^order starting from 0. Each round must
/// extend the agreement with the previous iterate by at least one index;
/// otherwise non_contraction_error is thrown. Returns coefficients 0..order-1.
template <class R>
std::vector<R> iterate_fixed_point(const std::function<basic_series<R>(const basic_series<R>&)>& phi, std::size_t order) {
  std::vector<R> y(order, R(0));
  std::size_t agree = 0;
  for (std::size_t round = 0; round <= order + 1; ++round) {
    auto next = phi(basic_series<R>::from_coefficients(y)).prefix(order);
    std::size_t a = 0;
    while (a < order && next[a] == y[a]) ++a;
    if (a == order) return next;
    if (round > 0 && a <= agree) throw non_contraction_error("fixed-point iteration gained no order of agreement");
    agree = a;
    y = std::move(next);
  }
  throw non_contraction_error("fixed-point iteration did not converge");
}

/// Newton iteration for P(z, y) = 0 with y(0) = y0, a simple root of P(0, .).
/// Returns coefficients 0..order-1.
template <class R>
std::vector<R> newton_algebraic(const bivariate_polynomial<R>& P, const R& y0, std::size_t order) {
  if (!ring_traits<R>::is_zero(P.value_at_origin(y0))) throw series_domain_error("y0 is not a root of P(0, y)");
  const auto Py = P.derivative_y();
  if (ring_traits<R>::is_zero(Py.value_at_origin(y0))) throw series_domain_error("y0 is a multiple root; Newton does not apply");
  std::vector<R> y{y0};
  std::size_t prec = 1;
  while (prec < order) {
    prec = std::min(order, 2 * prec);
    y.resize(prec, R(0));
    auto f = detail::eval_trunc(P, y, prec);
    auto d = detail::eval_trunc(Py, y, prec);
    auto step = detail::mul_trunc(f, detail::inverse_trunc(d, prec), prec);
    for (std::size_t i = 0; i < prec && i < step.size(); ++i) y[i] -= step[i];
  }
  y.resize(order, R(0));
  return y;
}

/// Lazy solution of P(z, y) = 0 with y(0) = y0 simple: y = y0 + k where
/// k = -(P(z, y0 + k) - P_y(0, y0) k) / P_y(0, y0), which has valuation gain 1.
template <class R>
basic_series<R> algebraic_fixed_point(const bivariate_polynomial<R>& P, const R& y0) {
  if (!ring_traits<R>::is_zero(P.value_at_origin(y0))) throw series_domain_error("y0 is not a root of P(0, y)");
  auto Q = P.taylor_shift(y0);
  R q10 = Q.at(1, 0);
  if (ring_traits<R>::is_zero(q10)) throw series_domain_error("y0 is a multiple root of P(0, y)");
  const R neg_inv = -ring_traits<R>::inverse(q10);
  auto Qc = Q.c;
  if (Qc.size() > 1 && !Qc[1].empty()) Qc[1][0] = R(0);
  auto k = fixed_point<R>(
      [&](const basic_series<R>& k) {
        basic_series<R> rhs = basic_series<R>::from_coefficients(Qc[0]);
        basic_series<R> kp = k;
        for (std::size_t j = 1; j < Qc.size(); ++j) {
          if (j > 1) kp = kp * k;
          rhs = rhs + basic_series<R>::from_coefficients(Qc[j]) * kp;
        }
        return scale(rhs, neg_inv);
      },
      1);
  return basic_series<R>(y0) + k;
}

/// y = phi(y) for a map that gains one order of agreement per application;
/// `valuation` is a lower bound for the valuation of the solution.
template <class R>
basic_series<R> solve_fixed_point(const std::function<basic_series<R>(const basic_series<R>&)>& phi, std::size_t valuation) {
  return fixed_point<R>(phi, valuation);
}

/// Residual P(z, y) mod z^order for a truncated y.
template <class R>
std::vector<R> algebraic_residual(const bivariate_polynomial<R>& P, const std::vector<R>& y, std::size_t order) {
  return detail::eval_trunc(P, y, order);
}

// Linear operators built from primitives whose valuation gain is known.

struct linear_step {
  enum class kind { multiply_rational, integrate, scale_argument, scalar };
  kind k;
  std::vector<Rational> num{}, den{};
  Rational c{1};

  static linear_step multiply(std::vector<Rational> num, std::vector<Rational> den) {
    return {kind::multiply_rational, std::move(num), std::move(den), Rational(1)};
  }
  static linear_step integral() { return {kind::integrate, {}, {}, Rational(1)}; }
  static linear_step argument(Rational c) { return {kind::scale_argument, {}, {}, std::move(c)}; }
  static linear_step times(Rational c) { return {kind::scalar, {}, {}, std::move(c)}; }
};

/// Sum of chains; each chain applies its steps first to last.
struct linear_operator {
  std::vector<std::vector<linear_step>> terms;

  linear_operator() = default;
  explicit linear_operator(std::vector<linear_step> chain) { terms.push_back(std::move(chain)); }

  /// Guaranteed valuation increase; SIZE_MAX for the zero operator.
  std::size_t valuation_gain() const {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& chain : terms) {
      std::size_t g = 0;
      bool zero = false;
      for (const auto& s : chain) {
        switch (s.k) {
          case linear_step::kind::multiply_rational: {
            std::size_t v = 0;
            while (v < s.num.size() && s.num[v] == 0) ++v;
            if (v == s.num.size()) zero = true;
            g += v;
            break;
          }
          case linear_step::kind::integrate: ++g; break;
          case linear_step::kind::scale_argument: break;
          case linear_step::kind::scalar:
            if (s.c == 0) zero = true;
            break;
        }
      }
      if (!zero) best = std::min(best, g);
    }
    return best;
  }

  Series apply(const Series& f) const {
    Series acc = Series::zero();
    bool first = true;
    for (const auto& chain : terms) {
      Series g = f;
      for (const auto& s : chain) {
        switch (s.k) {
          case linear_step::kind::multiply_rational: g = rational_multiply(g, s.num, s.den); break;
          case linear_step::kind::integrate: g = integrate(g); break;
          case linear_step::kind::scale_argument: g = scale_argument(g, s.c); break;
          case linear_step::kind::scalar: g = scale(g, s.c); break;
        }
      }
      acc = first ? g : acc + g;
      first = false;
    }
    return acc;
  }
};

/// Checks that L[z^m] has valuation > m for all m < probe_order.
inline bool certify_valuation_gain(const linear_operator& L, std::size_t probe_order) {
  for (std::size_t m = 0; m < probe_order; ++m) {
    Series image = L.apply(Series::monomial(Rational(1), m));
    for (std::size_t n = 0; n <= m && n < probe_order + 1; ++n)
      if (image.ref(n) != 0) return false;
  }
  return true;
}

/// The solution f of f = t + L[f], computed coefficient by coefficient.
inline Series linear_operator_solve(const Series& t, const linear_operator& L, std::size_t probe_order = 32) {
  if (L.terms.empty()) return t;
  if (L.valuation_gain() == 0 || !certify_valuation_gain(L, probe_order))
    throw series_domain_error("linear operator does not increase valuation");
  return fixed_point<Rational>([&](const Series& f) { return t + L.apply(f); }, 0);
}

}  // namespace anacomb::series
