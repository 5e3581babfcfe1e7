#pragma once

#include "anacomb/jet.hpp"
#include "anacomb/numeric.hpp"
#include "anacomb/polynomial.hpp"

#include <stdexcept>

namespace anacomb::series {

/// Operations the series algebra needs beyond +, -, * on a coefficient ring.
/// div_int(x, n) is only required by exp/log/power/integration and the Polya
/// operators; inverse(x) only by 1/f and the algebraic solvers.
template <class R>
struct ring_traits {
  static bool is_zero(const R& x) { return x == R(0); }
  static R div_int(const R& x, long n) { return x / R(n); }
  static R from_rational(const Rational& q) { return R(q); }
  static R inverse(const R& x) {
    if (is_zero(x)) throw std::domain_error("ring inverse of zero");
    return R(1) / x;
  }
};

template <>
struct ring_traits<Float> {
  static bool is_zero(const Float& x) { return x == 0; }
  static Float div_int(const Float& x, long n) { return x / n; }
  static Float from_rational(const Rational& q) { return to_float(q); }
  static Float inverse(const Float& x) {
    if (x == 0) throw std::domain_error("ring inverse of zero");
    return Float(1) / x;
  }
};

template <>
struct ring_traits<Integer> {
  static bool is_zero(const Integer& x) { return x == 0; }
  static Integer div_int(const Integer& x, long n) {
    if (x % n != 0) throw std::domain_error("inexact integer division in series operation");
    return x / n;
  }
  static Integer from_rational(const Rational& q) {
    if (denominator_of(q) != 1) throw std::domain_error("non-integral scalar for an integer series");
    return numerator_of(q);
  }
  static Integer inverse(const Integer& x) {
    if (x != 1 && x != -1) throw std::domain_error("integer is not a unit");
    return x;
  }
};

template <class T>
struct ring_traits<Polynomial<T>> {
  static bool is_zero(const Polynomial<T>& x) { return x.is_zero(); }
  static Polynomial<T> div_int(const Polynomial<T>& x, long n) { return x / T(n); }
  static Polynomial<T> from_rational(const Rational& q) { return Polynomial<T>(T(q)); }
  static Polynomial<T> inverse(const Polynomial<T>& x) {
    if (x.degree() != 0) throw std::domain_error("polynomial in u is not a unit");
    return Polynomial<T>(T(1) / x[0]);
  }
};

template <class T, std::size_t K>
struct ring_traits<Jet<T, K>> {
  static bool is_zero(const Jet<T, K>& x) { return x == Jet<T, K>(); }
  static Jet<T, K> div_int(const Jet<T, K>& x, long n) { return x / T(n); }
  static Jet<T, K> from_rational(const Rational& q) { return Jet<T, K>(T(q)); }
  static Jet<T, K> inverse(const Jet<T, K>& x) { return x.inverse(); }
};

}  // namespace anacomb::series
