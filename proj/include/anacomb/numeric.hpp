#pragma once

// Number types shared by every module, plus the handful of arithmetic helpers
// (Moebius, totient, binomials, big-rational to float conversion) that the
// series algebra and the models need.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace anacomb {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
/// 50 significant decimal digits; used only on the numeric side of the library.
using Float = mp::number<mp::mpfr_float_backend<50>, mp::et_off>;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  return Rational(Integer(num), Integer(den));
}

inline Integer numerator_of(const Rational& q) { return mp::numerator(q); }
inline Integer denominator_of(const Rational& q) { return mp::denominator(q); }

/// log|x| of a nonzero big integer, accurate to double precision for any size.
inline double log_abs(const Integer& x) {
  if (x == 0) throw std::domain_error("log_abs: zero");
  long exponent = 0;
  double mant = mpz_get_d_2exp(&exponent, x.backend().data());
  return std::log(std::fabs(mant)) + static_cast<double>(exponent) * std::log(2.0);
}

inline double log_abs(const Rational& q) {
  return log_abs(numerator_of(q)) - log_abs(denominator_of(q));
}

/// Big rational to a 50-digit float; the exponent range is not limited to double's.
inline Float to_float(const Rational& q) {
  Float num(numerator_of(q));
  Float den(denominator_of(q));
  return num / den;
}

inline Float to_float(const Integer& x) { return Float(x); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

inline Integer ipow(const Integer& base, unsigned exponent) {
  Integer result = 1;
  mpz_pow_ui(result.backend().data(), base.backend().data(), exponent);
  return result;
}

inline Rational rpow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("rpow: zero to a negative power");
    return rpow(Rational(1) / base, -exponent);
  }
  Integer num = ipow(numerator_of(base), static_cast<unsigned>(exponent));
  Integer den = ipow(denominator_of(base), static_cast<unsigned>(exponent));
  return Rational(num, den);
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.backend().data(), n, k);
  return result;
}

inline Integer factorial(unsigned n) {
  Integer result;
  mpz_fac_ui(result.backend().data(), n);
  return result;
}

inline std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> small, large;
  for (std::size_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline int moebius(std::size_t n) {
  if (n == 0) throw std::domain_error("moebius: n must be positive");
  int result = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

inline std::size_t totient(std::size_t n) {
  if (n == 0) throw std::domain_error("totient: n must be positive");
  std::size_t result = n;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace anacomb
