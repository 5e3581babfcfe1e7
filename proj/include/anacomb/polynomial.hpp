#pragma once

#include "anacomb/numeric.hpp"

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

namespace anacomb {

/// Dense univariate polynomial. Trailing zero coefficients are trimmed, so
/// the zero polynomial has no coefficients and degree() == -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int constant) : Polynomial(T(constant)) {}  // NOLINT: ring literal
  Polynomial(T constant) {                               // NOLINT: ring literal
    coeffs_.push_back(std::move(constant));
    trim();
  }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(T c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<T>& coefficients() const { return coeffs_; }

  T operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

  template <class X>
  X evaluate(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  /// Evaluation at a double for numeric root finding.
  double evaluate_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + static_cast<double>(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<T> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * T(static_cast<long>(k)));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  /// Division by a scalar of the coefficient field.
  friend Polynomial operator/(Polynomial a, const T& s) {
    for (auto& c : a.coeffs_) c /= s;
    return a;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs_.size(); ++k) {
      if (p.coeffs_[k] == 0) continue;
      if (!first) os << " + ";
      os << p.coeffs_[k];
      if (k > 0) os << "*u^" << k;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

/// Smallest root of p in (lo, hi) found by sign-change scanning, bisection,
/// then Newton polishing. Returns a negative value if none is found.
template <class T>
double smallest_root_in(const Polynomial<T>& p, double lo, double hi, int grid = 4000) {
  auto f = [&](double x) { return p.evaluate_double(x); };
  const Polynomial<T> dp = p.derivative();
  double prev_x = lo;
  double prev = f(lo);
  for (int i = 1; i <= grid; ++i) {
    double x = lo + (hi - lo) * i / grid;
    double v = f(x);
    if (v == 0.0) return x;
    if ((prev < 0) != (v < 0)) {
      double a = prev_x, b = x, fa = prev;
      for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::fabs(b)); ++it) {
        double m = 0.5 * (a + b);
        double fm = f(m);
        if ((fa < 0) == (fm < 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      double r = 0.5 * (a + b);
      for (int it = 0; it < 4; ++it) {
        double d = dp.evaluate_double(r);
        if (d == 0.0) break;
        double next = r - f(r) / d;
        if (next < a || next > b) break;
        r = next;
      }
      return r;
    }
    prev_x = x;
    prev = v;
  }
  return -1.0;
}

}  // namespace anacomb
