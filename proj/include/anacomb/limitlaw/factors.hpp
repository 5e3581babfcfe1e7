#pragma once

// Monic polynomials over F_q as multisets of irreducibles, with u marking the
// number of irreducible factors counted with multiplicity.

#include "anacomb/series/series.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

namespace anacomb::limitlaw {

/// Number of monic irreducibles of degree n over F_q: (1/n) sum_{d|n} mu(d) q^{n/d}.
inline Integer irreducible_count(unsigned long q, std::size_t n) {
  if (q < 2) throw std::domain_error("field size must be at least 2");
  if (n == 0) return Integer(0);
  Integer acc(0);
  for (std::size_t d : divisors(n)) {
    int mu = moebius(d);
    if (mu != 0) acc += Integer(mu) * ipow(Integer(q), static_cast<unsigned>(n / d));
  }
  return acc / Integer(static_cast<unsigned long>(n));
}

/// I(z) = sum_n I_n z^n as an exact series.
inline series::Series irreducible_series(unsigned long q) {
  return series::Series::from_generator([q](std::size_t n) { return Rational(irreducible_count(q, n)); }, 1);
}

/// P(z, u) = exp(sum_{k>=1} u^k I(z^k)/k), computed through
/// n P_n(u) = sum_{m=1}^n c_m(u) P_{n-m}(u), c_m(u) = sum_{dk=m} d I_d u^k.
inline series::BiSeries factor_count_model(unsigned long q, std::size_t n_max = 0) {
  using UPoly = Polynomial<Rational>;
  struct state {
    unsigned long q;
    std::vector<Integer> I{Integer(0)};
    std::vector<UPoly> c{UPoly()};
    std::vector<UPoly> P{UPoly(Rational(1))};
  };
  auto st = std::make_shared<state>();
  st->q = q;
  auto F = series::BiSeries::from_generator(
      [st](std::size_t n) {
        while (st->P.size() <= n) {
          const std::size_t m = st->P.size();
          st->I.push_back(irreducible_count(st->q, m));
          UPoly cm;
          for (std::size_t d : divisors(m)) cm += UPoly::monomial(Rational(Integer(static_cast<unsigned long>(d)) * st->I[d]), m / d);
          st->c.push_back(std::move(cm));
          UPoly acc;
          for (std::size_t k = 1; k <= m; ++k) acc += st->c[k] * st->P[m - k];
          st->P.push_back(acc / Rational(static_cast<long>(m)));
        }
        return st->P[n];
      },
      0);
  if (n_max > 0) F.ensure(n_max);
  return F;
}

}  // namespace anacomb::limitlaw
