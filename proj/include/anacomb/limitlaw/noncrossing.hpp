#pragma once

// Non-crossing graphs on n points of a circle, u marking connected components.
//
// G(z, w) satisfies
//   G^3 + (2w^3z^2 - 3w^2z + w - 3) G^2 + (3w^2z - 2w + 3) G + w - 1 = 0.
// At w = 1 the root G(0) = 1 is double, so the series branch is taken
// through G = 1 + z h, which after division by z^2 gives
//   z h^3 + (2w^3z^2 - 3w^2z + w) h^2 + (4w^3z - 3w^2) h + 2w^3 = 0
// with the simple root h(0) = w. For z != 0 both equations have the same
// branch points, so rho(w) is located on the reduced one.

#include "anacomb/jet.hpp"
#include "anacomb/limitlaw/quasi_powers.hpp"
#include "anacomb/series/solvers.hpp"
#include "anacomb/singular/locate.hpp"

namespace anacomb::limitlaw {

/// The cubic in G, coefficients polynomial in z.
template <class R>
series::bivariate_polynomial<R> noncrossing_cubic(const R& w) {
  const R w2 = w * w, w3 = w2 * w;
  series::bivariate_polynomial<R> P;
  P.c = {{w - R(1)}, {R(3) - R(2) * w, R(3) * w2}, {w - R(3), -(R(3) * w2), R(2) * w3}, {R(1)}};
  return P;
}

/// The reduced cubic in h with G = 1 + z h.
template <class R>
series::bivariate_polynomial<R> noncrossing_reduced(const R& w) {
  const R w2 = w * w, w3 = w2 * w;
  series::bivariate_polynomial<R> P;
  P.c = {{R(2) * w3}, {-(R(3) * w2), R(4) * w3}, {w, -(R(3) * w2), R(2) * w3}, {R(0), R(1)}};
  return P;
}

/// G(z, w) as a lazy series over the coefficient ring R.
template <class R>
series::basic_series<R> noncrossing_series(const R& w) {
  auto h = series::algebraic_fixed_point(noncrossing_reduced(w), w);
  return series::basic_series<R>::one() + series::basic_series<R>::variable() * h;
}

using NcJet = Jet<Rational, 2>;

/// G(z, 1 + e) mod e^3: value and first two u-derivatives of every coefficient.
inline series::basic_series<NcJet> noncrossing_jet_series() { return noncrossing_series(NcJet::variable_at_one()); }

struct moments {
  Rational mean, variance;
};

/// Exact mean and variance of the component count at size n.
inline moments noncrossing_moments(const series::basic_series<NcJet>& G, std::size_t n) {
  const NcJet& g = G.ref(n);
  const Rational f0 = g.derivative(0), f1 = g.derivative(1), f2 = g.derivative(2);
  const Rational m = f1 / f0;
  return {m, f2 / f0 + m - m * m};
}

/// Branch point rho(w) of the reduced cubic, for w > 0.
inline double noncrossing_rho(double w) {
  const Rational wr(w);
  return singular::locate_singularity(singular::algebraic_shape{noncrossing_reduced(wr), wr}).rho;
}

inline QuasiPowerModel noncrossing_quasi_power(double h = 1e-4) { return movable_singularity_model(noncrossing_rho, h); }

}  // namespace anacomb::limitlaw
