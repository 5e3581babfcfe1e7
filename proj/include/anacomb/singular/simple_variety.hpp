#pragma once

// Trees y = z phi(y): square-root branch point at rho = tau/phi(tau) where
// tau solves phi(tau) = tau phi'(tau).

#include "anacomb/singular/locate.hpp"

#include <numeric>

namespace anacomb::singular {

struct simple_variety_data {
  double tau = 0;
  double rho = 0;
  double phi_tau = 0;
  double phi2_tau = 0;
};

/// `terms` coefficients of phi are used; polynomial phi needs no more than its degree.
inline simple_variety_data simple_variety_point(const Series& phi, std::size_t terms = 400) {
  const Rational phi0 = phi.coefficient(0);
  if (phi0 <= 0) throw std::domain_error("simple variety needs phi(0) > 0");
  // tau phi'(tau) - phi(tau) = sum_{k>=2} (k-1) phi_k tau^k - phi_0.
  auto c = detail::float_prefix(phi, terms);
  std::vector<Float> g(c.size(), Float(0));
  bool any = false;
  for (std::size_t k = 2; k < c.size(); ++k) {
    if (c[k] < 0) throw std::domain_error("simple variety needs nonnegative phi");
    g[k] = c[k] * static_cast<unsigned long>(k - 1);
    if (c[k] > 0) any = true;
  }
  if (!any) throw std::domain_error("characteristic equation has no root (phi is affine)");
  const double tau = detail::increasing_root(g, to_float(phi0));
  const Float t(tau);
  std::vector<Float> d2;
  for (std::size_t k = 2; k < c.size(); ++k) d2.push_back(c[k] * static_cast<unsigned long>(k * (k - 1)));
  simple_variety_data out;
  out.tau = tau;
  out.phi_tau = detail::horner(c, t).convert_to<double>();
  out.phi2_tau = detail::horner(d2, t).convert_to<double>();
  out.rho = tau / out.phi_tau;
  return out;
}

/// Support period of phi: gcd of the exponents k with phi_k != 0.
inline std::size_t support_period(const Series& phi, std::size_t terms) {
  std::size_t p = 0;
  for (std::size_t k = 1; k < terms; ++k)
    if (phi.ref(k) != 0) p = std::gcd(p, k);
  return p == 0 ? 1 : p;
}

/// Coefficient law of y = z phi(y). With period p > 1 the coefficients live
/// on n = 1 mod p and the form carries that residue class.
inline AsymptoticForm simple_variety_asym(const Series& phi, std::size_t terms = 400) {
  auto sv = simple_variety_point(phi, terms);
  AsymptoticForm a;
  a.rho = sv.rho;
  a.elements.push_back({sv.tau, 0.0, 0});
  a.elements.push_back({-std::sqrt(2 * sv.phi_tau / sv.phi2_tau), -0.5, 0});
  a.error_order = error_term{-1.5, 0};
  a.period = support_period(phi, terms);
  a.residue = 1 % a.period;
  return a;
}

}  // namespace anacomb::singular
