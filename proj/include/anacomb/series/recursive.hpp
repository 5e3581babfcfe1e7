#pragma once

// Mutually recursive series definitions.
//
// Unknowns are placeholders with a declared valuation; every definition may
// mention any unknown. A coefficient of an unknown forwards to its definition,
// and the declared valuations let products and substitutions avoid touching the
// coefficient being computed. An ill-founded system surfaces as
// series_domain_error at the first coefficient request that would loop.
//
// Ownership: definitions hold placeholders strongly, placeholders hold the
// shared state weakly, and solution handles alias the state. No cycles.

#include "anacomb/series/ops.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace anacomb::series {

template <class R>
class recursive_system {
  struct state {
    std::vector<detail::node_ptr<R>> unknowns;
    std::vector<detail::node_ptr<R>> definitions;
    std::vector<std::string> names;
  };

  class unknown_node final : public detail::node<R> {
   public:
    unknown_node(std::weak_ptr<state> st, std::size_t index, std::size_t valuation)
        : detail::node<R>(valuation), st_(std::move(st)), index_(index) {}

   protected:
    R compute(std::size_t n) override {
      auto st = st_.lock();
      if (!st) throw series_domain_error("recursive system no longer exists");
      const auto& def = st->definitions.at(index_);
      if (!def) throw series_domain_error("unknown '" + st->names[index_] + "' has no definition");
      if (!checked_) {
        for (std::size_t k = 0; k < this->valuation_; ++k)
          if (!ring_traits<R>::is_zero(def->at(k)))
            throw series_domain_error("definition of '" + st->names[index_] +
                                      "' has a nonzero coefficient below its declared valuation");
        checked_ = true;
      }
      return def->at(n);
    }

   private:
    std::weak_ptr<state> st_;
    std::size_t index_;
    bool checked_ = false;
  };

 public:
  recursive_system() : st_(std::make_shared<state>()) {}

  /// New placeholder whose coefficients below `valuation` are promised to vanish.
  basic_series<R> unknown(std::size_t valuation, std::string name = {}) {
    const std::size_t index = st_->unknowns.size();
    if (name.empty()) name = "#" + std::to_string(index);
    auto node = std::make_shared<unknown_node>(st_, index, valuation);
    st_->unknowns.push_back(node);
    st_->definitions.push_back(nullptr);
    st_->names.push_back(std::move(name));
    return basic_series<R>(std::shared_ptr<detail::node<R>>(node));
  }

  void define(std::size_t index, const basic_series<R>& rhs) {
    if (index >= st_->definitions.size()) throw std::out_of_range("recursive_system::define: no such unknown");
    if (st_->definitions[index]) throw std::logic_error("unknown '" + st_->names[index] + "' defined twice");
    st_->definitions[index] = rhs.node();
  }

  std::size_t size() const { return st_->unknowns.size(); }

  /// Handle to the solution for an unknown; keeps the whole system alive.
  basic_series<R> solution(std::size_t index) const {
    const auto& node = st_->unknowns.at(index);
    return basic_series<R>(detail::node_ptr<R>(st_, node.get()));
  }

 private:
  std::shared_ptr<state> st_;
};

/// The unique y with y = phi(y), solved lazily. `valuation` is the promised
/// valuation of y; phi(y) must reach index n through coefficients of y below n.
template <class R>
basic_series<R> fixed_point(const std::function<basic_series<R>(const basic_series<R>&)>& phi, std::size_t valuation) {
  recursive_system<R> sys;
  auto y = sys.unknown(valuation, "y");
  sys.define(0, phi(y));
  return sys.solution(0);
}

}  // namespace anacomb::series
