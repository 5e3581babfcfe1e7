#pragma once

// Lazily evaluated univariate formal power series over a coefficient ring R.
//
// A series is a handle to a node in an expression DAG. Each node memoizes its
// coefficients in index order; asking for coefficient n computes 0..n once and
// never changes them afterwards. Nodes carry a structural lower bound on the
// valuation and, for polynomials, an upper bound on the degree; products and
// substitutions use these bounds so that recursive definitions only ever
// request strictly smaller indices of themselves.
//
// Thread safety: a series may be moved between threads, but coefficient
// requests on one DAG must be serialized by the caller.

#include "anacomb/numeric.hpp"
#include "anacomb/series/ring.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace anacomb::series {

class series_domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class R>
class basic_series;

namespace detail {

template <class R>
class node {
 public:
  explicit node(std::size_t valuation = 0, std::optional<std::size_t> degree = std::nullopt)
      : valuation_(valuation), degree_(degree) {}
  virtual ~node() = default;
  node(const node&) = delete;
  node& operator=(const node&) = delete;

  /// Reference into the memo table; valid until this node grows again.
  const R& at(std::size_t n) {
    if (n < valuation_ || (degree_ && n > *degree_)) return zero();
    ensure(n);
    return memo_[n];
  }

  void ensure(std::size_t n) {
    if (degree_ && n > *degree_) n = *degree_;
    while (memo_.size() <= n) {
      const std::size_t k = memo_.size();
      if (busy_)
        throw series_domain_error("coefficient " + std::to_string(k) +
                                  " requested while it is being computed: the definition is not well-founded");
      if (k < valuation_) {
        memo_.push_back(R(0));
        continue;
      }
      busy_ = true;
      try {
        R v = compute(k);
        busy_ = false;
        memo_.push_back(std::move(v));
      } catch (...) {
        busy_ = false;
        throw;
      }
    }
  }

  std::size_t valuation_bound() const { return valuation_; }
  std::optional<std::size_t> degree_bound() const { return degree_; }
  std::size_t computed() const { return memo_.size(); }

 protected:
  virtual R compute(std::size_t n) = 0;

  /// Own coefficients computed so far (self-referential recurrences).
  const std::vector<R>& memo() const { return memo_; }

  static const R& zero() {
    static const R z(0);
    return z;
  }

  std::size_t valuation_;
  std::optional<std::size_t> degree_;

 private:
  std::vector<R> memo_;
  bool busy_ = false;
};

template <class R>
using node_ptr = std::shared_ptr<node<R>>;

/// Valuation bound of the zero series; large enough to dominate any index,
/// small enough that sums of a few of them do not wrap.
inline constexpr std::size_t infinite_valuation = std::size_t(1) << 48;

template <class R>
class polynomial_node final : public node<R> {
 public:
  explicit polynomial_node(std::vector<R> coeffs) : node<R>(0, std::nullopt), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && ring_traits<R>::is_zero(coeffs_.back())) coeffs_.pop_back();
    std::size_t v = 0;
    while (v < coeffs_.size() && ring_traits<R>::is_zero(coeffs_[v])) ++v;
    this->valuation_ = coeffs_.empty() ? infinite_valuation : v;
    this->degree_ = coeffs_.empty() ? 0 : coeffs_.size() - 1;
  }

 protected:
  R compute(std::size_t n) override { return n < coeffs_.size() ? coeffs_[n] : R(0); }

 private:
  std::vector<R> coeffs_;
};

template <class R>
class generator_node final : public node<R> {
 public:
  generator_node(std::function<R(std::size_t)> gen, std::size_t valuation)
      : node<R>(valuation), gen_(std::move(gen)) {}

 protected:
  R compute(std::size_t n) override { return gen_(n); }

 private:
  std::function<R(std::size_t)> gen_;
};

}  // namespace detail

/// Handle to a lazily evaluated power series. Copies share the memo table.
template <class R>
class basic_series {
 public:
  using coefficient_type = R;

  basic_series() : node_(std::make_shared<detail::polynomial_node<R>>(std::vector<R>{})) {}
  basic_series(R constant)  // NOLINT: constants embed as series
      : node_(std::make_shared<detail::polynomial_node<R>>(std::vector<R>{std::move(constant)})) {}
  explicit basic_series(detail::node_ptr<R> node) : node_(std::move(node)) {}

  static basic_series zero() { return basic_series(); }
  static basic_series one() { return basic_series(R(1)); }
  /// The series c z^k.
  static basic_series monomial(R c, std::size_t k) {
    std::vector<R> v(k + 1, R(0));
    v[k] = std::move(c);
    return from_coefficients(std::move(v));
  }
  static basic_series variable() { return monomial(R(1), 1); }
  static basic_series from_coefficients(std::vector<R> coeffs) {
    return basic_series(std::make_shared<detail::polynomial_node<R>>(std::move(coeffs)));
  }
  /// Coefficients produced on demand by gen(n). valuation is a promise that
  /// gen(n) == 0 for n < valuation.
  static basic_series from_generator(std::function<R(std::size_t)> gen, std::size_t valuation = 0) {
    return basic_series(std::make_shared<detail::generator_node<R>>(std::move(gen), valuation));
  }

  R coefficient(std::size_t n) const { return node_->at(n); }
  R operator[](std::size_t n) const { return node_->at(n); }
  const R& ref(std::size_t n) const { return node_->at(n); }

  /// Coefficients of indices 0 .. count-1.
  std::vector<R> prefix(std::size_t count) const {
    if (count > 0) node_->ensure(count - 1);
    std::vector<R> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) out.push_back(node_->at(n));
    return out;
  }

  /// Makes sure coefficients 0..order are memoized.
  const basic_series& ensure(std::size_t order) const {
    node_->ensure(order);
    return *this;
  }

  std::size_t valuation_bound() const { return node_->valuation_bound(); }
  std::optional<std::size_t> degree_bound() const { return node_->degree_bound(); }

  /// Index of the first nonzero coefficient among 0..up_to, if any.
  std::optional<std::size_t> valuation(std::size_t up_to) const {
    for (std::size_t n = valuation_bound(); n <= up_to; ++n)
      if (!ring_traits<R>::is_zero(node_->at(n))) return n;
    return std::nullopt;
  }

  const detail::node_ptr<R>& node() const { return node_; }

 private:
  detail::node_ptr<R> node_;
};

using Series = basic_series<Rational>;
using FloatSeries = basic_series<Float>;
using BiSeries = basic_series<Polynomial<Rational>>;

/// True when f and g agree on indices 0..order-1.
template <class R>
bool agree_to_order(const basic_series<R>& f, const basic_series<R>& g, std::size_t order) {
  for (std::size_t n = 0; n < order; ++n)
    if (!(f.ref(n) == g.ref(n))) return false;
  return true;
}

}  // namespace anacomb::series
