#pragma once

// Structural descriptions of generating functions, dominant-singularity
// location, and singular expansions at the located point.

#include "anacomb/polynomial.hpp"
#include "anacomb/series/solvers.hpp"
#include "anacomb/singular/scale.hpp"

#include <cmath>
#include <memory>
#include <variant>
#include <vector>

namespace anacomb::singular {

using series::Series;

class unsupported_shape_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class singularity_kind { pole, sqrt_branch, log, exp_of_log, composite };

inline const char* to_string(singularity_kind k) {
  switch (k) {
    case singularity_kind::pole: return "pole";
    case singularity_kind::sqrt_branch: return "sqrt-branch";
    case singularity_kind::log: return "log";
    case singularity_kind::exp_of_log: return "exp-of-log";
    case singularity_kind::composite: return "composite";
  }
  return "?";
}

struct singularity {
  double rho = 0;
  singularity_kind kind = singularity_kind::pole;
};

/// num/den with den(0) != 0.
struct rational_shape {
  Polynomial<Rational> num, den;
};
/// 1/(1 - f) with f nonnegative, f(0) = 0.
struct quasi_inverse_shape {
  Series f;
  std::size_t terms = 400;
};
/// log 1/(1 - f) with f nonnegative, f(0) = 0.
struct log_inverse_shape {
  Series f;
  std::size_t terms = 400;
};
/// exp(f), or the multiset form exp(sum_k f(z^k)/k) when polya is set, where
/// f = lambda log 1/(1 - z/rho) + r with r analytic on |z| <= rho.
struct exp_log_shape {
  Series f;
  Rational rho;
  Rational lambda;
  bool polya = false;
  std::size_t terms = 300;
};
/// The power-series branch y(z) of P(z, y) = 0, y(0) = y0, with a square-root
/// branch point as dominant singularity.
struct algebraic_shape {
  series::bivariate_polynomial<Rational> P;
  Rational y0;
};
/// A(z) (1 - z/rho)^{-alpha} (log 1/(1 - z/rho))^beta with polynomial A.
struct power_log_shape {
  Polynomial<Rational> A;
  Rational rho;
  double alpha = 1;
  unsigned beta = 0;
};
/// An entire function: no finite singularity.
struct entire_shape {};

struct gf_shape;
/// Sum of parts; the dominant singularity is the smallest among them.
struct composite_shape {
  std::vector<gf_shape> parts;
};

struct gf_shape {
  std::variant<rational_shape, quasi_inverse_shape, log_inverse_shape, exp_log_shape, algebraic_shape, power_log_shape,
               entire_shape, composite_shape>
      v;
  template <class T>
  gf_shape(T shape) : v(std::move(shape)) {}  // NOLINT: implicit wrapping is the point
};

namespace detail {

/// Float coefficients f_0..f_{terms-1}.
inline std::vector<Float> float_prefix(const Series& f, std::size_t terms) {
  std::vector<Float> out;
  out.reserve(terms);
  for (std::size_t n = 0; n < terms; ++n) out.push_back(to_float(f.ref(n)));
  return out;
}

inline Float horner(const std::vector<Float>& c, const Float& x) {
  Float acc(0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

inline Float horner_derivative(const std::vector<Float>& c, const Float& x) {
  Float acc(0);
  for (std::size_t i = c.size(); i-- > 1;) acc = acc * x + c[i] * static_cast<unsigned long>(i);
  return acc;
}

/// Smallest positive root of sum c_k x^k = target for nonnegative c with
/// c_0 < target. The last retained term at the root must be negligible,
/// otherwise the partial sum does not represent the series there.
inline double increasing_root(const std::vector<Float>& c, const Float& target) {
  auto F = [&](const Float& x) { return horner(c, x) - target; };
  Float hi(1e-6);
  int guard = 0;
  while (F(hi) < 0) {
    hi *= Float(1.25);
    if (++guard > 400) throw std::domain_error("no root of f(z) = target in the disc of convergence");
  }
  Float lo = hi / Float(1.25);
  if (guard == 0) lo = Float(0);
  for (int it = 0; it < 200 && hi - lo > Float(1e-30); ++it) {
    Float mid = (lo + hi) / 2;
    (F(mid) < 0 ? lo : hi) = mid;
  }
  Float x = (lo + hi) / 2;
  for (int it = 0; it < 5; ++it) {
    Float d = horner_derivative(c, x);
    if (d == 0) break;
    x -= F(x) / d;
  }
  Float last = c.back() * mp::pow(x, static_cast<unsigned long>(c.size() - 1));
  if (mp::abs(last) > Float(1e-14) * mp::abs(target))
    throw std::domain_error("root lies too close to the radius of convergence for the retained terms");
  return x.convert_to<double>();
}

struct branch_point {
  long double rho, y;
  long double Pz, Pyy;
};

/// Evaluation of a bivariate polynomial and its partials in long double.
struct bivariate_eval {
  std::vector<std::vector<long double>> c;
  explicit bivariate_eval(const series::bivariate_polynomial<Rational>& P) {
    for (const auto& row : P.c) {
      std::vector<long double> r;
      for (const auto& q : row) r.push_back(q.convert_to<long double>());
      c.push_back(std::move(r));
    }
  }
  static long double poly(const std::vector<long double>& r, long double z, int dz) {
    long double acc = 0;
    for (std::size_t i = r.size(); i-- > static_cast<std::size_t>(dz);) {
      long double coef = r[i];
      for (int d = 0; d < dz; ++d) coef *= static_cast<long double>(i - d);
      acc = acc * z + coef;
    }
    return acc;
  }
  /// d^dy/dy^dy d^dz/dz^dz P at (z, y).
  long double operator()(long double z, long double y, int dy, int dz) const {
    long double acc = 0;
    for (std::size_t j = c.size(); j-- > static_cast<std::size_t>(dy);) {
      long double coef = poly(c[j], z, dz);
      for (int d = 0; d < dy; ++d) coef *= static_cast<long double>(j - d);
      acc = acc * y + coef;
    }
    return acc;
  }
};

/// Follows the real branch from z = 0 until it stops being continuable, then
/// solves {P = 0, P_y = 0} by two-dimensional Newton.
inline branch_point locate_branch(const algebraic_shape& s) {
  bivariate_eval P(s.P);
  long double z = 0, y = s.y0.convert_to<long double>();
  if (std::fabs(static_cast<double>(P(z, y, 1, 0))) < 1e-300) throw std::domain_error("y0 is not a simple root");
  long double h = 1e-4L;
  const long double sign0 = P(z, y, 1, 0) > 0 ? 1 : -1;
  for (int steps = 0; steps < 200000 && h > 1e-15L; ++steps) {
    long double slope = -P(z, y, 0, 1) / P(z, y, 1, 0);
    long double zn = z + h, yn = y + h * slope;
    bool ok = false;
    for (int it = 0; it < 40; ++it) {
      long double py = P(zn, yn, 1, 0);
      if (py == 0) break;
      long double dy = P(zn, yn, 0, 0) / py;
      yn -= dy;
      if (std::fabs(static_cast<double>(dy)) <= 1e-17 * std::max(1.0, std::fabs(static_cast<double>(yn)))) {
        ok = true;
        break;
      }
    }
    if (ok && P(zn, yn, 1, 0) * sign0 > 0 && std::fabs(static_cast<double>(yn - y)) < 10 * std::fabs(static_cast<double>(h * slope)) + 1e-12) {
      z = zn;
      y = yn;
      h *= 1.5L;
    } else {
      h /= 4;
    }
  }
  for (int it = 0; it < 100; ++it) {
    long double F1 = P(z, y, 0, 0), F2 = P(z, y, 1, 0);
    long double a = P(z, y, 0, 1), b = P(z, y, 1, 0), c = P(z, y, 1, 1), d = P(z, y, 2, 0);
    long double det = a * d - b * c;
    if (det == 0) break;
    long double dz = (F1 * d - b * F2) / det, dy = (a * F2 - c * F1) / det;
    z -= dz;
    y -= dy;
    if (std::fabs(static_cast<double>(dz)) < 1e-19 && std::fabs(static_cast<double>(dy)) < 1e-19) break;
  }
  if (!(z > 0)) throw std::domain_error("branch point search left the positive axis");
  branch_point bp{z, y, P(z, y, 0, 1), P(z, y, 2, 0)};
  if (bp.Pyy == 0) throw std::domain_error("degenerate branch point (P_yy = 0)");
  return bp;
}

inline singularity locate(const gf_shape& g);

}  // namespace detail

inline singularity locate_singularity(const gf_shape& g) { return detail::locate(g); }

namespace detail {

inline singularity locate(const gf_shape& g) {
  return std::visit(
      [](const auto& s) -> singularity {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, rational_shape>) {
          double r = smallest_root_in(s.den, 0.0, 16.0, 64000);
          if (r <= 0) throw std::domain_error("rational function has no positive pole below 16");
          return {r, singularity_kind::pole};
        } else if constexpr (std::is_same_v<S, quasi_inverse_shape>) {
          return {increasing_root(float_prefix(s.f, s.terms), Float(1)), singularity_kind::pole};
        } else if constexpr (std::is_same_v<S, log_inverse_shape>) {
          return {increasing_root(float_prefix(s.f, s.terms), Float(1)), singularity_kind::log};
        } else if constexpr (std::is_same_v<S, exp_log_shape>) {
          return {to_double(s.rho), singularity_kind::exp_of_log};
        } else if constexpr (std::is_same_v<S, algebraic_shape>) {
          return {static_cast<double>(locate_branch(s).rho), singularity_kind::sqrt_branch};
        } else if constexpr (std::is_same_v<S, power_log_shape>) {
          singularity_kind k = s.beta > 0 ? singularity_kind::log
                               : (s.alpha > 0 && s.alpha == std::floor(s.alpha)) ? singularity_kind::pole
                                                                                 : singularity_kind::sqrt_branch;
          return {to_double(s.rho), k};
        } else if constexpr (std::is_same_v<S, entire_shape>) {
          throw std::domain_error("entire function: no finite singularity");
        } else {
          if (s.parts.empty()) throw unsupported_shape_error("empty composite");
          std::vector<singularity> found;
          for (const auto& p : s.parts) {
            if (std::holds_alternative<entire_shape>(p.v)) continue;
            found.push_back(locate(p));
          }
          if (found.empty()) throw std::domain_error("entire function: no finite singularity");
          singularity best = found[0];
          for (const auto& f : found)
            if (f.rho < best.rho) best = f;
          int count = 0;
          for (const auto& f : found)
            if (std::fabs(f.rho - best.rho) <= 1e-12 * best.rho) ++count;
          if (count > 1) best.kind = singularity_kind::composite;
          return best;
        }
      },
      g.v);
}

/// A(rho) and A'(rho) of A = exp(r + sum_{k>=2} f(z^k)/k) for exp_log_shape.
inline std::pair<Float, Float> exp_log_prefactor(const exp_log_shape& s) {
  const Float rho = to_float(s.rho);
  // r_n rho^n = f_n rho^n - lambda/n, exact.
  Float r(0), dr(0);
  Rational rho_pow(1);
  for (std::size_t n = 0; n < s.terms; ++n) {
    Rational term = s.f.ref(n) * rho_pow;
    if (n >= 1) term -= s.lambda / Rational(static_cast<long>(n));
    Float t = to_float(term);
    r += t;
    if (n >= 1) dr += t * static_cast<unsigned long>(n) / rho;
    rho_pow *= s.rho;
  }
  Float tail(0), dtail(0);
  if (s.polya) {
    auto c = float_prefix(s.f, s.terms);
    for (std::size_t k = 2;; ++k) {
      Float x = mp::pow(rho, static_cast<unsigned long>(k));
      if (x < Float(1e-45)) break;
      tail += horner(c, x) / static_cast<unsigned long>(k);
      // d/dz f(z^k)/k = z^{k-1} f'(z^k).
      dtail += mp::pow(rho, static_cast<unsigned long>(k - 1)) * horner_derivative(c, x);
      if (k > 400) break;
    }
  }
  Float A = mp::exp(r + tail);
  return {A, A * (dr + dtail)};
}

inline SingularExpansion expand(const gf_shape& g, double rho);

}  // namespace detail

/// Leading element at the dominant singularity, plus the next one when the
/// analytic prefactor's derivative is available.
inline SingularExpansion singular_expansion(const gf_shape& g, double rho) {
  auto se = detail::expand(g, rho);
  se.normalize();
  // Leading and second element only; a dropped third becomes the error order.
  if (se.elements.size() > 2) {
    se.error_order = error_term{se.elements[2].alpha, se.elements[2].beta};
    se.elements.resize(2);
  }
  return se;
}

inline SingularExpansion singular_expansion(const gf_shape& g) { return singular_expansion(g, locate_singularity(g).rho); }

namespace detail {

inline SingularExpansion expand(const gf_shape& g, double rho) {
  return std::visit(
      [rho](const auto& s) -> SingularExpansion {
        using S = std::decay_t<decltype(s)>;
        SingularExpansion se;
        se.rho = rho;
        if constexpr (std::is_same_v<S, rational_shape>) {
          double dd = s.den.derivative().evaluate_double(rho);
          if (dd == 0) throw unsupported_shape_error("pole of order > 1");
          se.elements.push_back({s.num.evaluate_double(rho) / (-rho * dd), 1.0, 0});
        } else if constexpr (std::is_same_v<S, quasi_inverse_shape>) {
          auto c = float_prefix(s.f, s.terms);
          Float d = horner_derivative(c, Float(rho));
          se.elements.push_back({(Float(1) / (Float(rho) * d)).convert_to<double>(), 1.0, 0});
        } else if constexpr (std::is_same_v<S, log_inverse_shape>) {
          auto c = float_prefix(s.f, s.terms);
          Float d = horner_derivative(c, Float(rho));
          se.elements.push_back({1.0, 0.0, 1});
          se.elements.push_back({(-mp::log(Float(rho) * d)).convert_to<double>(), 0.0, 0});
        } else if constexpr (std::is_same_v<S, exp_log_shape>) {
          auto [A, dA] = exp_log_prefactor(s);
          double alpha = to_double(s.lambda);
          se.elements.push_back({static_cast<double>(A), alpha, 0});
          se.elements.push_back({static_cast<double>(-Float(rho) * dA), alpha - 1, 0});
          se.error_order = error_term{alpha - 2, 0};
        } else if constexpr (std::is_same_v<S, algebraic_shape>) {
          auto bp = locate_branch(s);
          long double q = 2 * bp.rho * bp.Pz / bp.Pyy;
          if (!(q > 0)) throw unsupported_shape_error("branch point without real square-root expansion");
          se.rho = static_cast<double>(bp.rho);
          se.elements.push_back({static_cast<double>(bp.y), 0.0, 0});
          se.elements.push_back({-static_cast<double>(std::sqrt(q)), -0.5, 0});
          se.error_order = error_term{-1.5, 0};
        } else if constexpr (std::is_same_v<S, power_log_shape>) {
          const Rational r = s.rho;
          se.elements.push_back({to_double(s.A.evaluate(r)), s.alpha, s.beta});
          se.elements.push_back({to_double(-r * s.A.derivative().evaluate(r)), s.alpha - 1, s.beta});
          se.error_order = error_term{s.alpha - 2, s.beta};
        } else if constexpr (std::is_same_v<S, entire_shape>) {
          throw std::domain_error("entire function: no singular expansion");
        } else {
          for (const auto& p : s.parts) {
            if (std::holds_alternative<entire_shape>(p.v)) continue;
            auto loc = locate(p);
            if (std::fabs(loc.rho - rho) > 1e-12 * rho) continue;
            auto sub = expand(p, rho);
            se.elements.insert(se.elements.end(), sub.elements.begin(), sub.elements.end());
            if (sub.error_order && (!se.error_order || sub.error_order->alpha > se.error_order->alpha)) se.error_order = sub.error_order;
          }
          if (se.elements.empty()) throw unsupported_shape_error("no part of the composite is singular at rho");
        }
        return se;
      },
      g.v);
}

}  // namespace detail

}  // namespace anacomb::singular
