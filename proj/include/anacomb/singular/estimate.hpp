#pragma once

// Empirical (rho, alpha) from exact coefficients on a window, for a sequence
// f_n ~ C rho^{-n} n^{alpha-1}.
//
// Ratio method: f_n / f_{n-p} = rho^{-p} (1 + p(alpha-1)/n + O(1/n^2)); a
// quadratic fit in 1/n extrapolates the ratio to n = infinity. When the ratios
// oscillate the fit is meaningless and rho comes from a direct log-linear fit
// of log f_n against n and log n over a widened window instead.

#include "anacomb/series/series.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace anacomb::singular {

struct oscillation_report {
  bool fires = false;
  double raw_range = 0;        // max - min of the sequence
  double noise = 0;            // RMS of second differences / sqrt 6
  double detrended_range = 0;  // max - min after removing a + b/n + c/n^2
  double mean_abs = 0;
  std::size_t sign_changes = 0;  // of the detrended residuals
};

namespace detail {

/// Least-squares coefficients of y against the given columns.
inline Eigen::VectorXd least_squares(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  return X.colPivHouseholderQr().solve(y);
}

/// Columns 1, (n0/n), (n0/n)^2 scaled by the first abscissa for conditioning.
inline Eigen::MatrixXd inverse_power_design(const std::vector<double>& ns, int degree) {
  Eigen::MatrixXd X(ns.size(), degree + 1);
  const double n0 = ns.front();
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (int k = 0; k <= degree; ++k) X(i, k) = std::pow(n0 / ns[i], k);
  return X;
}

}  // namespace detail

/// A smooth sequence converging like a + b/n + c/n^2 leaves residuals at
/// rounding level; a fluctuating one leaves a visible detrended range. Fires
/// iff the raw range exceeds 10 noise levels and the detrended range exceeds
/// 1e-6 of the mean magnitude.
inline oscillation_report oscillation_indicator(const std::vector<double>& s, const std::vector<double>& ns) {
  if (s.size() != ns.size() || s.size() < 8) throw std::invalid_argument("oscillation_indicator needs >= 8 points");
  oscillation_report r;
  auto [mn, mx] = std::minmax_element(s.begin(), s.end());
  r.raw_range = *mx - *mn;
  double sq = 0;
  for (std::size_t i = 2; i < s.size(); ++i) {
    double d = s[i] - 2 * s[i - 1] + s[i - 2];
    sq += d * d;
  }
  r.noise = std::sqrt(sq / static_cast<double>(s.size() - 2)) / std::sqrt(6.0);
  for (double v : s) r.mean_abs += std::fabs(v);
  r.mean_abs /= static_cast<double>(s.size());

  Eigen::MatrixXd X = detail::inverse_power_design(ns, 2);
  Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(s.data(), static_cast<Eigen::Index>(s.size()));
  Eigen::VectorXd res = y - X * detail::least_squares(X, y);
  r.detrended_range = res.maxCoeff() - res.minCoeff();
  for (Eigen::Index i = 1; i < res.size(); ++i)
    if ((res[i] > 0) != (res[i - 1] > 0)) ++r.sign_changes;
  r.fires = r.raw_range > 10 * r.noise && r.detrended_range > 1e-6 * r.mean_abs;
  return r;
}

struct coefficient_estimate {
  double rho_hat = 0;
  double alpha_hat = 0;
  std::size_t period = 1;
  std::size_t residue = 0;
  bool log_linear_fallback = false;
  std::vector<double> ns;         // indices used
  std::vector<double> residuals;  // of the ratio fit
  oscillation_report oscillation;
};

/// Coefficients f_0..f_hi as 50-digit floats; the window is [lo, hi].
inline coefficient_estimate estimate_from_values(const std::vector<Float>& f, std::size_t lo, std::size_t hi) {
  if (hi < lo || hi - lo + 1 < 8) throw std::invalid_argument("estimation window must hold at least 8 indices");
  if (f.size() <= hi) throw std::invalid_argument("not enough coefficients for the window");
  coefficient_estimate e;
  // Structural zeros: the nonzero support up to hi determines period and residue class.
  std::size_t first = f.size();
  std::size_t p = 0;
  for (std::size_t n = 0; n <= hi; ++n) {
    if (f[n] == 0) continue;
    if (first == f.size())
      first = n;
    else
      p = std::gcd(p, n - first);
  }
  if (first == f.size()) throw std::domain_error("all coefficients vanish");
  e.period = p == 0 ? 1 : p;
  e.residue = first % e.period;

  std::vector<double> ratio, logf;
  for (std::size_t n = lo; n <= hi; ++n) {
    if (n % e.period != e.residue) continue;
    if (f[n] == 0 || n < e.period || f[n - e.period] == 0) throw std::domain_error("zero coefficient in the estimation window");
    e.ns.push_back(static_cast<double>(n));
    ratio.push_back((f[n] / f[n - e.period]).convert_to<double>());
    logf.push_back(mp::log(mp::abs(f[n])).convert_to<double>());
  }
  if (e.ns.size() < 4) throw std::invalid_argument("estimation window has fewer than 4 usable indices");
  const double P = static_cast<double>(e.period);
  const double n0 = e.ns.front();

  if (ratio.size() >= 8) e.oscillation = oscillation_indicator(ratio, e.ns);
  Eigen::VectorXd r = Eigen::Map<const Eigen::VectorXd>(ratio.data(), static_cast<Eigen::Index>(ratio.size()));
  Eigen::MatrixXd X = detail::inverse_power_design(e.ns, 2);
  Eigen::VectorXd beta = detail::least_squares(X, r);
  Eigen::VectorXd res = r - X * beta;
  e.residuals.assign(res.data(), res.data() + res.size());

  const Eigen::Index m = static_cast<Eigen::Index>(e.ns.size());
  if (!e.oscillation.fires) {
    e.rho_hat = std::pow(beta[0], -1.0 / P);
    // log f_n + n log rho = log C + (alpha - 1) log n + d/n + e/n^2.
    Eigen::MatrixXd L(m, 4);
    Eigen::VectorXd y(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const double n = e.ns[i];
      L(i, 0) = 1;
      L(i, 1) = std::log(n);
      L(i, 2) = n0 / n;
      L(i, 3) = (n0 / n) * (n0 / n);
      y[i] = logf[i] + n * std::log(e.rho_hat);
    }
    e.alpha_hat = 1 + detail::least_squares(L, y)[1];
  } else {
    // The fluctuation is periodic in log n: fit over [lo/10, hi] so the window
    // spans several periods instead of the ratio window alone.
    e.log_linear_fallback = true;
    std::vector<double> fn, fl;
    for (std::size_t n = std::max(lo / 10, first + e.period); n <= hi; ++n) {
      if (n % e.period != e.residue || f[n] == 0) continue;
      fn.push_back(static_cast<double>(n));
      fl.push_back(mp::log(mp::abs(f[n])).convert_to<double>());
    }
    const Eigen::Index k = static_cast<Eigen::Index>(fn.size());
    const double m0 = fn.front();
    Eigen::MatrixXd L(k, 3);
    Eigen::VectorXd y(k);
    for (Eigen::Index i = 0; i < k; ++i) {
      L(i, 0) = 1;
      L(i, 1) = (fn[i] - m0) / m0;
      L(i, 2) = std::log(fn[i]);
      y[i] = fl[i];
    }
    Eigen::VectorXd c = detail::least_squares(L, y);
    e.rho_hat = std::exp(-c[1] / m0);
    e.alpha_hat = 1 + c[2];
  }
  return e;
}

inline coefficient_estimate estimate_from_coefficients(const series::Series& f, std::size_t lo, std::size_t hi) {
  f.ensure(hi);
  std::vector<Float> v;
  v.reserve(hi + 1);
  for (std::size_t n = 0; n <= hi; ++n) v.push_back(to_float(f.ref(n)));
  return estimate_from_values(v, lo, hi);
}

}  // namespace anacomb::singular
