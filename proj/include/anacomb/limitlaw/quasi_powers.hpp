#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace anacomb::limitlaw {

/// Local data at u = 1 of either the singularity rho(u) or the exponent
/// alpha(u) of a bivariate generating function.
///
/// Movable singularity: f_n(u)/f_n(1) ~ (rho(1)/rho(u))^n, so mean and
/// variance grow linearly in n. Movable exponent: f_n(u)/f_n(1) ~
/// n^{alpha(u) - alpha(1)}, so both grow like log n.
struct QuasiPowerModel {
  enum class kind_t { movable_singularity, movable_exponent };
  kind_t kind = kind_t::movable_singularity;
  double value = 0;  // rho(1) or alpha(1)
  double d1 = 0;
  double d2 = 0;

  /// Derivatives of the log of the quasi-power base at u = 1.
  double mean_coefficient() const {
    if (kind == kind_t::movable_exponent) return d1;
    return -d1 / value;
  }
  double variance_coefficient() const {
    if (kind == kind_t::movable_exponent) return d2 + d1;
    const double r1 = d1 / value, r2 = d2 / value;
    return -r2 + r1 * r1 - r1;
  }

  double scale(std::size_t n) const {
    return kind == kind_t::movable_singularity ? static_cast<double>(n) : std::log(static_cast<double>(n));
  }
  double predicted_mean(std::size_t n) const { return mean_coefficient() * scale(n); }
  double predicted_variance(std::size_t n) const { return variance_coefficient() * scale(n); }

  bool valid() const { return variance_coefficient() >= -1e-12 && (kind == kind_t::movable_exponent || value > 0); }
};

/// f(1), f'(1), f''(1) by central differences at steps h and h/2 combined by
/// one Richardson step, which cancels the h^2 error term.
inline std::array<double, 3> derivatives_at_one(const std::function<double(double)>& f, double h = 1e-4) {
  const double f0 = f(1.0);
  auto diffs = [&](double s) {
    const double fp = f(1 + s), fm = f(1 - s);
    return std::array<double, 2>{(fp - fm) / (2 * s), (fp - 2 * f0 + fm) / (s * s)};
  };
  auto a = diffs(h), b = diffs(h / 2);
  return {f0, (4 * b[0] - a[0]) / 3, (4 * b[1] - a[1]) / 3};
}

inline QuasiPowerModel movable_singularity_model(const std::function<double(double)>& rho, double h = 1e-4) {
  auto d = derivatives_at_one(rho, h);
  QuasiPowerModel m{QuasiPowerModel::kind_t::movable_singularity, d[0], d[1], d[2]};
  if (!m.valid()) throw std::domain_error("quasi-power model with negative variance coefficient");
  return m;
}

inline QuasiPowerModel movable_exponent_model(const std::function<double(double)>& alpha, double h = 1e-4) {
  auto d = derivatives_at_one(alpha, h);
  QuasiPowerModel m{QuasiPowerModel::kind_t::movable_exponent, d[0], d[1], d[2]};
  if (!m.valid()) throw std::domain_error("quasi-power model with negative variance coefficient");
  return m;
}

}  // namespace anacomb::limitlaw
