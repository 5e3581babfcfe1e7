#pragma once

#include <array>
#include <ostream>
#include <stdexcept>

namespace anacomb {

/// Truncated Taylor expansion a_0 + a_1 e + ... + a_K e^K with e^{K+1} = 0.
/// Used as a coefficient ring to carry derivatives with respect to a marking
/// variable u = 1 + e through series computations exactly.
template <class T, std::size_t K = 2>
class Jet {
 public:
  Jet() { c_.fill(T(0)); }
  Jet(int v) : Jet(T(v)) {}  // NOLINT: ring literal
  Jet(T v) {                 // NOLINT: ring literal
    c_.fill(T(0));
    c_[0] = std::move(v);
  }

  /// The jet of u = 1 + e.
  static Jet variable_at_one() {
    Jet j(T(1));
    if constexpr (K >= 1) j.c_[1] = T(1);
    return j;
  }

  const T& operator[](std::size_t k) const { return c_.at(k); }
  T& operator[](std::size_t k) { return c_.at(k); }

  /// k-th derivative with respect to u at u = 1.
  T derivative(std::size_t k) const {
    T f(1);
    for (std::size_t i = 2; i <= k; ++i) f *= T(static_cast<long>(i));
    return c_.at(k) * f;
  }

  Jet& operator+=(const Jet& o) {
    for (std::size_t k = 0; k <= K; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (std::size_t k = 0; k <= K; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(Jet a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t i = 0; i <= K; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= K; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  friend Jet operator/(Jet a, const T& s) {
    for (auto& v : a.c_) v /= s;
    return a;
  }

  Jet inverse() const {
    if (c_[0] == 0) throw std::domain_error("Jet::inverse: constant term is zero");
    Jet r;
    r.c_[0] = T(1) / c_[0];
    for (std::size_t k = 1; k <= K; ++k) {
      T acc(0);
      for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
      r.c_[k] = -acc / c_[0];
    }
    return r;
  }

  friend bool operator==(const Jet& a, const Jet& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Jet& j) {
    os << "[";
    for (std::size_t k = 0; k <= K; ++k) os << (k ? ", " : "") << j.c_[k];
    return os << "]";
  }

 private:
  std::array<T, K + 1> c_;
};

}  // namespace anacomb
