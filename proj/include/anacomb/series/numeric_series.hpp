#pragma once

// Floating-point side of the series module: generalized polylogarithms and
// coefficient extraction by discretized Cauchy integrals.

#include "anacomb/series/ops.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace anacomb::series {

/// Li_{alpha,k}(z) = sum_{n>=1} (log n)^k n^{-alpha} z^n at 50 digits.
inline FloatSeries polylog(const Float& alpha, unsigned k, std::size_t order = 0) {
  auto s = FloatSeries::from_generator(
      [alpha, k](std::size_t n) -> Float {
        if (n == 0) return Float(0);
        Float nn(static_cast<unsigned long>(n));
        Float v = mp::pow(nn, -alpha);
        if (k > 0) v *= mp::pow(mp::log(nn), k);
        return v;
      },
      1);
  if (order > 0) s.ensure(order);
  return s;
}

/// Rational series viewed at 50 digits.
inline FloatSeries to_float_series(const Series& f) {
  return map_coefficients<Float>(f, [](const Rational& q) { return to_float(q); });
}

/// f_0..f_{count-1} from M = 4*count equispaced samples on |z| = radius.
/// The error is the aliasing sum over k >= 1 of |f_{n+kM}| radius^{kM} plus
/// rounding amplified by radius^{-n}.
inline std::vector<double> cauchy_extract(const std::function<std::complex<double>(std::complex<double>)>& evaluator,
                                          double radius, std::size_t count) {
  if (count == 0) return {};
  if (!(radius > 0)) throw std::invalid_argument("cauchy_extract: radius must be positive");
  const std::size_t M = 4 * count;
  std::vector<std::complex<double>> samples(M);
  for (std::size_t j = 0; j < M; ++j) {
    double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(M);
    samples[j] = evaluator(std::polar(radius, theta));
  }
  std::vector<double> out(count);
  for (std::size_t n = 0; n < count; ++n) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t j = 0; j < M; ++j) {
      std::size_t idx = (j * n) % M;
      double theta = -2.0 * std::numbers::pi * static_cast<double>(idx) / static_cast<double>(M);
      acc += samples[j] * std::polar(1.0, theta);
    }
    out[n] = (acc.real() / static_cast<double>(M)) / std::pow(radius, static_cast<double>(n));
  }
  return out;
}

}  // namespace anacomb::series
