#pragma once

// Height of binary trees counted by external nodes: y_0 = z, y_h = z + y_{h-1}^2
// enumerates trees of height <= h, a lone leaf having height 0.

#include "anacomb/limitlaw/gaussian.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <map>

namespace anacomb::limitlaw {

/// Exact law of the height at n external nodes. Heights above h_max, if any
/// mass remains there, are pooled at h_max + 1; h_max = 0 means no cap.
inline series::DistributionTable height_distribution(std::size_t n, std::size_t h_max = 0) {
  if (n < 1) throw std::domain_error("height_distribution needs n >= 1");
  // Trees with n leaves: Catalan(n - 1).
  const Integer total = binomial(static_cast<unsigned>(2 * (n - 1)), static_cast<unsigned>(n - 1)) / Integer(static_cast<unsigned long>(n));
  std::vector<Integer> y(n + 1, Integer(0)), next(n + 1);
  y[1] = 1;
  std::map<long, Rational> w;
  Integer prev(0);
  for (std::size_t h = 0;; ++h) {
    if (h > 0) {
      // next = z + y^2 truncated at n.
      for (std::size_t k = 0; k <= n; ++k) {
        Integer acc(0);
        for (std::size_t i = 1; 2 * i < k; ++i) acc += y[i] * y[k - i];
        acc *= 2;
        if (k % 2 == 0 && k > 0) acc += y[k / 2] * y[k / 2];
        if (k == 1) acc += 1;
        next[k] = acc;
      }
      std::swap(y, next);
    }
    const Integer& cur = y[n];
    if (cur != prev) w[static_cast<long>(h)] = Rational(cur - prev);
    prev = cur;
    if (cur == total) break;
    if (h_max > 0 && h == h_max) {
      w[static_cast<long>(h + 1)] = Rational(total - cur);
      break;
    }
  }
  return series::DistributionTable::from_weights(n, w);
}

/// 4x sum_{k>=1} k^2 (2k^2x^2 - 3) e^{-k^2x^2}. For x < 1 the equivalent
/// Jacobi-transformed series is summed instead; both are truncated once
/// terms drop below 1e-15 relative to the running sum.
inline double theta_density(double x) {
  if (!(x > 0)) throw std::domain_error("theta_density needs x > 0");
  constexpr double pi = boost::math::constants::pi<double>();
  double acc = 0;
  if (x >= 1) {
    for (int k = 1; k < 100000; ++k) {
      const double kk = static_cast<double>(k) * k;
      const double t = 4 * x * kk * (2 * kk * x * x - 3) * std::exp(-kk * x * x);
      acc += t;
      if (std::fabs(t) < 1e-15 * std::max(1e-300, std::fabs(acc)) && kk * x * x > 3) break;
    }
    return acc;
  }
  // d/dx of (4 pi^{5/2} / x^3) sum_k k^2 e^{-k^2 pi^2 / x^2}.
  const double c = 4 * std::pow(pi, 2.5);
  for (int k = 1; k < 100000; ++k) {
    const double kk = static_cast<double>(k) * k;
    const double a = kk * pi * pi / (x * x);
    if (a > 745) break;
    const double t = c * kk * std::exp(-a) * (2 * kk * pi * pi / std::pow(x, 6) - 3 / std::pow(x, 4));
    acc += t;
    if (std::fabs(t) < 1e-15 * std::max(1e-300, std::fabs(acc))) break;
  }
  return acc;
}

/// Closed-form CDF 1 + 2 sum_{k>=1} (1 - 2k^2x^2) e^{-k^2x^2}, or its dual for x < 1.
inline double theta_cdf(double x) {
  if (x <= 0) return 0;
  constexpr double pi = boost::math::constants::pi<double>();
  double acc = 0;
  if (x >= 1) {
    for (int k = 1; k < 100000; ++k) {
      const double kk = static_cast<double>(k) * k;
      const double t = 2 * (1 - 2 * kk * x * x) * std::exp(-kk * x * x);
      acc += t;
      if (std::fabs(t) < 1e-17 && kk * x * x > 3) break;
    }
    return 1 + acc;
  }
  for (int k = 1; k < 100000; ++k) {
    const double kk = static_cast<double>(k) * k;
    const double a = kk * pi * pi / (x * x);
    if (a > 745) break;
    acc += kk * std::exp(-a);
  }
  return 4 * std::pow(pi, 2.5) / (x * x * x) * acc;
}

/// CDF by adaptive Gauss-Kronrod quadrature of theta_density on (0, x].
inline double theta_cdf_integrated(double x) {
  if (x <= 0) return 0;
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 31>::integrate(theta_density, 0.0, x, 15, 1e-13);
}

/// Integral of the density over (0, infinity).
inline double theta_normalization() {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 31>::integrate(theta_density, 0.0, std::numeric_limits<double>::infinity(), 15, 1e-13);
}

/// KS distance between height / (2 sqrt n) at size n and the theta law.
inline double height_theta_ks(const series::DistributionTable& t, const std::function<double(double)>& cdf = theta_cdf_integrated) {
  const double s = 2 * std::sqrt(static_cast<double>(t.size()));
  return ks_distance(t, [s](long h) { return static_cast<double>(h) / s; }, cdf);
}

}  // namespace anacomb::limitlaw
