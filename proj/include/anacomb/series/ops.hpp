#pragma once

// Operator nodes of the lazy series algebra. Every node states a structural
// valuation lower bound; the bound is what makes recursive definitions
// well-founded, so each one below is exact for generic inputs.

#include "anacomb/series/series.hpp"

#include <algorithm>
#include <limits>

namespace anacomb::series {

namespace detail {

inline std::size_t sat_add(std::size_t a, std::size_t b) { return std::min(a + b, infinite_valuation); }
inline std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return 0;
  return a >= infinite_valuation / b ? infinite_valuation : a * b;
}

template <class R>
class sum_node final : public node<R> {
 public:
  sum_node(node_ptr<R> f, node_ptr<R> g, bool subtract)
      : node<R>(std::min(f->valuation_bound(), g->valuation_bound())),
        f_(std::move(f)), g_(std::move(g)), subtract_(subtract) {
    if (f_->degree_bound() && g_->degree_bound()) this->degree_ = std::max(*f_->degree_bound(), *g_->degree_bound());
  }

 protected:
  R compute(std::size_t n) override {
    R a = f_->at(n);
    return subtract_ ? R(a - g_->at(n)) : R(a + g_->at(n));
  }

 private:
  node_ptr<R> f_, g_;
  bool subtract_;
};

template <class R>
class scale_node final : public node<R> {
 public:
  scale_node(node_ptr<R> f, R c) : node<R>(f->valuation_bound(), f->degree_bound()), f_(std::move(f)), c_(std::move(c)) {}

 protected:
  R compute(std::size_t n) override { return c_ * f_->at(n); }

 private:
  node_ptr<R> f_;
  R c_;
};

template <class R>
class product_node final : public node<R> {
 public:
  product_node(node_ptr<R> f, node_ptr<R> g)
      : node<R>(sat_add(f->valuation_bound(), g->valuation_bound())), f_(std::move(f)), g_(std::move(g)) {
    if (f_->degree_bound() && g_->degree_bound()) this->degree_ = *f_->degree_bound() + *g_->degree_bound();
  }

 protected:
  R compute(std::size_t n) override {
    const std::size_t vf = f_->valuation_bound(), vg = g_->valuation_bound();
    std::size_t lo = vf, hi = n - vg;
    if (auto dg = g_->degree_bound(); dg && n > *dg) lo = std::max(lo, n - *dg);
    if (auto df = f_->degree_bound()) hi = std::min(hi, *df);
    R acc(0);
    if (lo > hi) return acc;
    f_->ensure(hi);
    for (std::size_t k = lo; k <= hi; ++k) {
      if (ring_traits<R>::is_zero(f_->at(k))) continue;
      // g first: fetching it may grow f, after which f_k is re-read in place.
      const R& b = g_->at(n - k);
      acc += f_->at(k) * b;
    }
    return acc;
  }

 private:
  node_ptr<R> f_, g_;
};

template <class R>
class hadamard_node final : public node<R> {
 public:
  hadamard_node(node_ptr<R> f, node_ptr<R> g)
      : node<R>(std::max(f->valuation_bound(), g->valuation_bound())), f_(std::move(f)), g_(std::move(g)) {
    auto df = f_->degree_bound(), dg = g_->degree_bound();
    if (df && dg) this->degree_ = std::min(*df, *dg);
    else if (df) this->degree_ = df;
    else if (dg) this->degree_ = dg;
  }

 protected:
  R compute(std::size_t n) override {
    R a = f_->at(n);
    return a * g_->at(n);
  }

 private:
  node_ptr<R> f_, g_;
};

// g = 1/(1 - f), f_0 = 0: g_n = sum_{k>=1} f_k g_{n-k}.
template <class R>
class quasi_inverse_node final : public node<R> {
 public:
  explicit quasi_inverse_node(node_ptr<R> f) : node<R>(0), f_(std::move(f)) {}

 protected:
  R compute(std::size_t n) override {
    if (n == 0) {
      if (!ring_traits<R>::is_zero(f_->at(0)))
        throw series_domain_error("quasi-inverse needs a series with zero constant term");
      return R(1);
    }
    const auto& g = this->memo();
    std::size_t lo = std::max<std::size_t>(1, f_->valuation_bound());
    std::size_t hi = n;
    if (auto d = f_->degree_bound()) hi = std::min(hi, *d);
    R acc(0);
    if (lo <= hi) f_->ensure(hi);
    for (std::size_t k = lo; k <= hi; ++k) {
      const R& a = f_->at(k);
      if (!ring_traits<R>::is_zero(a)) acc += a * g[n - k];
    }
    return acc;
  }

 private:
  node_ptr<R> f_;
};

// g = 1/f with f_0 a unit.
template <class R>
class inverse_node final : public node<R> {
 public:
  explicit inverse_node(node_ptr<R> f) : node<R>(0), f_(std::move(f)) {}

 protected:
  R compute(std::size_t n) override {
    if (n == 0) {
      if (f_->valuation_bound() > 0 || ring_traits<R>::is_zero(f_->at(0)))
        throw series_domain_error("reciprocal of a series with zero constant term");
      inv0_ = ring_traits<R>::inverse(f_->at(0));
      return inv0_;
    }
    const auto& g = this->memo();
    std::size_t hi = n;
    if (auto d = f_->degree_bound()) hi = std::min(hi, *d);
    R acc(0);
    if (hi >= 1) f_->ensure(hi);
    for (std::size_t k = 1; k <= hi; ++k) {
      const R& a = f_->at(k);
      if (!ring_traits<R>::is_zero(a)) acc += a * g[n - k];
    }
    return -(inv0_ * acc);
  }

 private:
  node_ptr<R> f_;
  R inv0_{0};
};

// g = exp(f), f_0 = 0: n g_n = sum_{k=1}^n k f_k g_{n-k}.
template <class R>
class exp_node final : public node<R> {
 public:
  explicit exp_node(node_ptr<R> f) : node<R>(0), f_(std::move(f)) {}

 protected:
  R compute(std::size_t n) override {
    if (n == 0) {
      if (!ring_traits<R>::is_zero(f_->at(0))) throw series_domain_error("exp needs a series with zero constant term");
      return R(1);
    }
    const auto& g = this->memo();
    std::size_t lo = std::max<std::size_t>(1, f_->valuation_bound());
    std::size_t hi = n;
    if (auto d = f_->degree_bound()) hi = std::min(hi, *d);
    R acc(0);
    if (lo <= hi) f_->ensure(hi);
    for (std::size_t k = lo; k <= hi; ++k) {
      const R& a = f_->at(k);
      if (!ring_traits<R>::is_zero(a)) acc += R(static_cast<long>(k)) * a * g[n - k];
    }
    return ring_traits<R>::div_int(acc, static_cast<long>(n));
  }

 private:
  node_ptr<R> f_;
};

// L = log(1/(1-f)), f_0 = 0: n L_n = n f_n + sum_{k=1}^{n-1} k L_k f_{n-k}.
template <class R>
class log_inv_node final : public node<R> {
 public:
  explicit log_inv_node(node_ptr<R> f) : node<R>(std::max<std::size_t>(1, f->valuation_bound())), f_(std::move(f)) {}

 protected:
  R compute(std::size_t n) override {
    if (!checked_) {
      if (!ring_traits<R>::is_zero(f_->at(0)))
        throw series_domain_error("log(1/(1-f)) needs a series with zero constant term");
      checked_ = true;
    }
    const auto& L = this->memo();
    f_->ensure(n);
    R acc = R(static_cast<long>(n)) * f_->at(n);
    const std::size_t vf = std::max<std::size_t>(1, f_->valuation_bound());
    for (std::size_t k = this->valuation_; k + vf <= n; ++k) {
      const R& b = f_->at(n - k);
      if (!ring_traits<R>::is_zero(b) && !ring_traits<R>::is_zero(L[k])) acc += R(static_cast<long>(k)) * L[k] * b;
    }
    return ring_traits<R>::div_int(acc, static_cast<long>(n));
  }

 private:
  node_ptr<R> f_;
  bool checked_ = false;
};

// g = f^alpha with f_0 = 1: n g_n = sum_{k=1}^n ((alpha+1)k - n) f_k g_{n-k}.
template <class R>
class power_node final : public node<R> {
 public:
  power_node(node_ptr<R> f, Rational alpha) : node<R>(0), f_(std::move(f)), alpha_(std::move(alpha)) {}

 protected:
  R compute(std::size_t n) override {
    if (n == 0) {
      if (f_->valuation_bound() > 0 || !(f_->at(0) == R(1)))
        throw series_domain_error("fractional power needs constant term 1");
      return R(1);
    }
    const auto& g = this->memo();
    std::size_t hi = n;
    if (auto d = f_->degree_bound()) hi = std::min(hi, *d);
    R acc(0);
    f_->ensure(hi);
    for (std::size_t k = 1; k <= hi; ++k) {
      const R& a = f_->at(k);
      if (ring_traits<R>::is_zero(a)) continue;
      Rational w = (alpha_ + 1) * static_cast<long>(k) - static_cast<long>(n);
      if (w == 0) continue;
      acc += ring_traits<R>::from_rational(w) * a * g[n - k];
    }
    return ring_traits<R>::div_int(acc, static_cast<long>(n));
  }

 private:
  node_ptr<R> f_;
  Rational alpha_;
};

// f(z^k).
template <class R>
class dilate_node final : public node<R> {
 public:
  dilate_node(node_ptr<R> f, std::size_t k) : node<R>(sat_mul(f->valuation_bound(), k)), f_(std::move(f)), k_(k) {
    if (auto d = f_->degree_bound()) this->degree_ = *d * k;
  }

 protected:
  R compute(std::size_t n) override { return n % k_ == 0 ? R(f_->at(n / k_)) : R(0); }

 private:
  node_ptr<R> f_;
  std::size_t k_;
};

// f(c z).
template <class R>
class scale_argument_node final : public node<R> {
 public:
  scale_argument_node(node_ptr<R> f, R c) : node<R>(f->valuation_bound(), f->degree_bound()), f_(std::move(f)), c_(std::move(c)) {}

 protected:
  R compute(std::size_t n) override {
    while (powers_.size() <= n) powers_.push_back(powers_.empty() ? R(1) : R(powers_.back() * c_));
    return powers_[n] * f_->at(n);
  }

 private:
  node_ptr<R> f_;
  R c_;
  std::vector<R> powers_;
};

// z^k f (shift > 0) or (f - first k terms)/z^k (shift < 0).
template <class R>
class shift_node final : public node<R> {
 public:
  shift_node(node_ptr<R> f, long shift)
      : node<R>(shift >= 0 ? f->valuation_bound() + static_cast<std::size_t>(shift)
                           : (f->valuation_bound() > static_cast<std::size_t>(-shift) ? f->valuation_bound() - static_cast<std::size_t>(-shift) : 0)),
        f_(std::move(f)), shift_(shift) {
    if (auto d = f_->degree_bound()) {
      long nd = static_cast<long>(*d) + shift_;
      this->degree_ = nd < 0 ? 0 : static_cast<std::size_t>(nd);
    }
  }

 protected:
  R compute(std::size_t n) override {
    long m = static_cast<long>(n) - shift_;
    return m < 0 ? R(0) : R(f_->at(static_cast<std::size_t>(m)));
  }

 private:
  node_ptr<R> f_;
  long shift_;
};

template <class R>
class differentiate_node final : public node<R> {
 public:
  explicit differentiate_node(node_ptr<R> f)
      : node<R>(f->valuation_bound() > 0 ? f->valuation_bound() - 1 : 0), f_(std::move(f)) {
    if (auto d = f_->degree_bound()) this->degree_ = *d > 0 ? *d - 1 : 0;
  }

 protected:
  R compute(std::size_t n) override { return R(static_cast<long>(n + 1)) * f_->at(n + 1); }

 private:
  node_ptr<R> f_;
};

template <class R>
class integrate_node final : public node<R> {
 public:
  explicit integrate_node(node_ptr<R> f) : node<R>(f->valuation_bound() + 1), f_(std::move(f)) {
    if (auto d = f_->degree_bound()) this->degree_ = *d + 1;
  }

 protected:
  R compute(std::size_t n) override { return ring_traits<R>::div_int(f_->at(n - 1), static_cast<long>(n)); }

 private:
  node_ptr<R> f_;
};

// Prefix sums, i.e. f/(1-z).
template <class R>
class cumulative_node final : public node<R> {
 public:
  explicit cumulative_node(node_ptr<R> f) : node<R>(f->valuation_bound()), f_(std::move(f)) {}

 protected:
  R compute(std::size_t n) override {
    R v = f_->at(n);
    return n == 0 ? v : R(v + this->memo()[n - 1]);
  }

 private:
  node_ptr<R> f_;
};

// g = f * N / D for polynomials N, D with D_0 a unit.
template <class R>
class rational_multiply_node final : public node<R> {
 public:
  rational_multiply_node(node_ptr<R> f, std::vector<R> num, std::vector<R> den)
      : node<R>(0), f_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {
    while (!num_.empty() && ring_traits<R>::is_zero(num_.back())) num_.pop_back();
    while (!den_.empty() && ring_traits<R>::is_zero(den_.back())) den_.pop_back();
    if (den_.empty() || ring_traits<R>::is_zero(den_[0]))
      throw series_domain_error("rational multiplier needs a denominator with nonzero constant term");
    inv0_ = ring_traits<R>::inverse(den_[0]);
    std::size_t vn = 0;
    while (vn < num_.size() && ring_traits<R>::is_zero(num_[vn])) ++vn;
    this->valuation_ = num_.empty() ? 0 : f_->valuation_bound() + vn;
  }

 protected:
  R compute(std::size_t n) override {
    R acc(0);
    for (std::size_t k = 0; k < num_.size() && k <= n; ++k)
      if (!ring_traits<R>::is_zero(num_[k])) acc += num_[k] * f_->at(n - k);
    const auto& g = this->memo();
    for (std::size_t k = 1; k < den_.size() && k <= n; ++k)
      if (!ring_traits<R>::is_zero(den_[k])) acc -= den_[k] * g[n - k];
    return inv0_ * acc;
  }

 private:
  node_ptr<R> f_;
  std::vector<R> num_, den_;
  R inv0_{0};
};

// h = sum_{k>=1} f(z^k)/k, so that exp(h) is the unlabelled multiset form.
template <class R>
class polya_exponent_node final : public node<R> {
 public:
  explicit polya_exponent_node(node_ptr<R> f) : node<R>(std::max<std::size_t>(1, f->valuation_bound())), f_(std::move(f)) {}

 protected:
  R compute(std::size_t n) override {
    if (!checked_) {
      if (!ring_traits<R>::is_zero(f_->at(0))) throw series_domain_error("Polya operator needs zero constant term");
      checked_ = true;
    }
    R acc(0);
    for (std::size_t k : divisors(n)) {
      R v = f_->at(n / k);
      if (!ring_traits<R>::is_zero(v)) acc += k == 1 ? v : ring_traits<R>::div_int(v, static_cast<long>(k));
    }
    return acc;
  }

 private:
  node_ptr<R> f_;
  bool checked_ = false;
};

// r_n = sum_{k | n} phi(k)/k * L_{n/k} with L = log(1/(1-f)).
template <class R>
class polya_cycle_node final : public node<R> {
 public:
  explicit polya_cycle_node(node_ptr<R> log_form) : node<R>(std::max<std::size_t>(1, log_form->valuation_bound())), L_(std::move(log_form)) {}

 protected:
  R compute(std::size_t n) override {
    R acc(0);
    for (std::size_t k : divisors(n)) {
      R v = L_->at(n / k);
      if (ring_traits<R>::is_zero(v)) continue;
      acc += k == 1 ? v : ring_traits<R>::div_int(R(static_cast<long>(totient(k))) * v, static_cast<long>(k));
    }
    return acc;
  }

 private:
  node_ptr<R> L_;
};

// f o g with g_0 = 0. Powers of g are built lazily and shared.
template <class R>
class substitute_node final : public node<R> {
 public:
  substitute_node(node_ptr<R> f, node_ptr<R> g)
      : node<R>(0), f_(std::move(f)), g_(std::move(g)) {
    vg_ = std::max<std::size_t>(1, g_->valuation_bound());
    this->valuation_ = sat_mul(f_->valuation_bound(), vg_);
    if (f_->degree_bound() && g_->degree_bound()) this->degree_ = *f_->degree_bound() * *g_->degree_bound();
  }

 protected:
  R compute(std::size_t n) override {
    if (!checked_) {
      if (!ring_traits<R>::is_zero(g_->at(0))) throw series_domain_error("substitution needs an inner series with zero constant term");
      checked_ = true;
    }
    std::size_t hi = n / vg_;
    if (auto d = f_->degree_bound()) hi = std::min(hi, *d);
    R acc(0);
    for (std::size_t j = f_->valuation_bound(); j <= hi; ++j) {
      R a = f_->at(j);
      if (ring_traits<R>::is_zero(a)) continue;
      acc += a * power(j)->at(n);
    }
    return acc;
  }

 private:
  const node_ptr<R>& power(std::size_t j) {
    if (powers_.empty()) powers_.push_back(std::make_shared<polynomial_node<R>>(std::vector<R>{R(1)}));
    while (powers_.size() <= j) {
      if (powers_.size() == 1)
        powers_.push_back(g_);
      else
        powers_.push_back(std::make_shared<product_node<R>>(powers_.back(), g_));
    }
    return powers_[j];
  }

  node_ptr<R> f_, g_;
  std::size_t vg_ = 1;
  std::vector<node_ptr<R>> powers_;
  bool checked_ = false;
};

}  // namespace detail

template <class R>
basic_series<R> operator+(const basic_series<R>& f, const basic_series<R>& g) {
  return basic_series<R>(std::make_shared<detail::sum_node<R>>(f.node(), g.node(), false));
}
template <class R>
basic_series<R> operator-(const basic_series<R>& f, const basic_series<R>& g) {
  return basic_series<R>(std::make_shared<detail::sum_node<R>>(f.node(), g.node(), true));
}
template <class R>
basic_series<R> operator-(const basic_series<R>& f) {
  return basic_series<R>(std::make_shared<detail::scale_node<R>>(f.node(), R(-1)));
}
template <class R>
basic_series<R> operator*(const basic_series<R>& f, const basic_series<R>& g) {
  return basic_series<R>(std::make_shared<detail::product_node<R>>(f.node(), g.node()));
}
template <class R>
basic_series<R> scale(const basic_series<R>& f, R c) {
  return basic_series<R>(std::make_shared<detail::scale_node<R>>(f.node(), std::move(c)));
}
template <class R>
basic_series<R> operator*(const R& c, const basic_series<R>& f) {
  return scale(f, c);
}
template <class R>
basic_series<R> hadamard(const basic_series<R>& f, const basic_series<R>& g) {
  return basic_series<R>(std::make_shared<detail::hadamard_node<R>>(f.node(), g.node()));
}
/// 1/(1-f); requires f_0 = 0.
template <class R>
basic_series<R> quasi_inverse(const basic_series<R>& f) {
  return basic_series<R>(std::make_shared<detail::quasi_inverse_node<R>>(f.node()));
}
/// 1/f; requires f_0 to be a unit.
template <class R>
basic_series<R> inverse(const basic_series<R>& f) {
  return basic_series<R>(std::make_shared<detail::inverse_node<R>>(f.node()));
}
template <class R>
basic_series<R> operator/(const basic_series<R>& f, const basic_series<R>& g) {
  return f * inverse(g);
}
/// exp(f); requires f_0 = 0.
template <class R>
basic_series<R> exp(const basic_series<R>& f) {
  return basic_series<R>(std::make_shared<detail::exp_node<R>>(f.node()));
}
/// log(1/(1-f)); requires f_0 = 0.
template <class R>
basic_series<R> log_inv(const basic_series<R>& f) {
  return basic_series<R>(std::make_shared<detail::log_inv_node<R>>(f.node()));
}
/// f^alpha. Nonnegative integer powers take any f; otherwise f_0 must be 1
/// (negative integer powers only need f_0 to be a unit).
template <class R>
basic_series<R> power(const basic_series<R>& f, const Rational& alpha) {
  if (denominator_of(alpha) == 1) {
    Integer p = numerator_of(alpha);
    if (p < 0) return power(inverse(f), Rational(-p));
    basic_series<R> result = basic_series<R>::one(), base = f;
    unsigned long e = p.convert_to<unsigned long>();
    bool first = true;
    while (e > 0) {
      if (e & 1UL) {
        result = first ? base : result * base;
        first = false;
      }
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return result;
  }
  return basic_series<R>(std::make_shared<detail::power_node<R>>(f.node(), alpha));
}
/// f(z^k), k >= 1.
template <class R>
basic_series<R> dilate(const basic_series<R>& f, std::size_t k) {
  if (k == 0) throw series_domain_error("dilation factor must be positive");
  if (k == 1) return f;
  return basic_series<R>(std::make_shared<detail::dilate_node<R>>(f.node(), k));
}
/// f(c z).
template <class R>
basic_series<R> scale_argument(const basic_series<R>& f, R c) {
  return basic_series<R>(std::make_shared<detail::scale_argument_node<R>>(f.node(), std::move(c)));
}
/// z^k f for k >= 0; for k < 0 drops the first |k| coefficients and divides by z^|k|.
template <class R>
basic_series<R> shift(const basic_series<R>& f, long k) {
  if (k == 0) return f;
  return basic_series<R>(std::make_shared<detail::shift_node<R>>(f.node(), k));
}
template <class R>
basic_series<R> differentiate(const basic_series<R>& f) {
  return basic_series<R>(std::make_shared<detail::differentiate_node<R>>(f.node()));
}
/// Antiderivative with zero constant term.
template <class R>
basic_series<R> integrate(const basic_series<R>& f) {
  return basic_series<R>(std::make_shared<detail::integrate_node<R>>(f.node()));
}
/// Partial sums f_0 + ... + f_n, i.e. f/(1-z).
template <class R>
basic_series<R> cumulative(const basic_series<R>& f) {
  return basic_series<R>(std::make_shared<detail::cumulative_node<R>>(f.node()));
}
/// f * N(z) / D(z) with D(0) a unit.
template <class R>
basic_series<R> rational_multiply(const basic_series<R>& f, std::vector<R> num, std::vector<R> den) {
  return basic_series<R>(std::make_shared<detail::rational_multiply_node<R>>(f.node(), std::move(num), std::move(den)));
}
/// sum_{k>=1} f(z^k)/k.
template <class R>
basic_series<R> polya_exponent(const basic_series<R>& f) {
  return basic_series<R>(std::make_shared<detail::polya_exponent_node<R>>(f.node()));
}
/// Unlabelled multiset: exp(sum_{k>=1} f(z^k)/k).
template <class R>
basic_series<R> polya_set(const basic_series<R>& f) {
  return exp(polya_exponent(f));
}
/// Unlabelled cycle: sum_{k>=1} phi(k)/k log(1/(1-f(z^k))).
template <class R>
basic_series<R> polya_cycle(const basic_series<R>& f) {
  return basic_series<R>(std::make_shared<detail::polya_cycle_node<R>>(log_inv(f).node()));
}
/// f o g; requires g_0 = 0.
template <class R>
basic_series<R> substitute(const basic_series<R>& f, const basic_series<R>& g) {
  return basic_series<R>(std::make_shared<detail::substitute_node<R>>(f.node(), g.node()));
}

/// Coefficients f_0..f_{order-1} frozen into a polynomial series.
template <class R>
basic_series<R> truncate(const basic_series<R>& f, std::size_t order) {
  return basic_series<R>::from_coefficients(f.prefix(order));
}

/// Coefficient-wise image under a ring map, e.g. evaluating u in a BiSeries.
template <class S, class R, class Fn>
basic_series<S> map_coefficients(const basic_series<R>& f, Fn fn) {
  auto src = f;
  return basic_series<S>::from_generator([src, fn](std::size_t n) { return S(fn(src.ref(n))); }, f.valuation_bound());
}

// Named entry points with the operation-selector shape used by the CLI.

enum class combine_op { add, mul, hadamard };
enum class exp_log_kind { exp, log_inv };
enum class calculus_kind { differentiate, integrate };

template <class R>
R coefficient(const basic_series<R>& f, std::size_t n) {
  return f.coefficient(n);
}

template <class R>
basic_series<R> combine(combine_op op, const basic_series<R>& f, const basic_series<R>& g) {
  switch (op) {
    case combine_op::add: return f + g;
    case combine_op::mul: return f * g;
    case combine_op::hadamard: return hadamard(f, g);
  }
  throw std::invalid_argument("combine: unknown operation");
}

template <class R>
basic_series<R> exp_log(const basic_series<R>& f, exp_log_kind kind) {
  return kind == exp_log_kind::exp ? exp(f) : log_inv(f);
}

template <class R>
basic_series<R> calculus(const basic_series<R>& f, calculus_kind kind) {
  return kind == calculus_kind::differentiate ? differentiate(f) : integrate(f);
}

/// Truncating variants: the result is materialized up to z^{order}.
template <class R>
basic_series<R> polya_set(const basic_series<R>& f, std::size_t order) {
  return polya_set(f).ensure(order);
}
template <class R>
basic_series<R> polya_cycle(const basic_series<R>& f, std::size_t order) {
  return polya_cycle(f).ensure(order);
}

}  // namespace anacomb::series
