#pragma once

#include "anacomb/series/series.hpp"

#include <map>
#include <ostream>
#include <stdexcept>

namespace anacomb::series {

/// Exact law of an integer parameter at a fixed size. Probabilities are
/// nonnegative and sum to exactly 1.
class DistributionTable {
 public:
  DistributionTable() = default;

  /// Normalizes nonnegative weights; throws on negative weight or zero mass.
  static DistributionTable from_weights(std::size_t size, const std::map<long, Rational>& weights) {
    Rational total(0);
    for (const auto& [v, w] : weights) {
      if (w < 0) throw std::domain_error("distribution weight is negative at value " + std::to_string(v));
      total += w;
    }
    if (total == 0) throw std::domain_error("distribution has zero total mass");
    DistributionTable t;
    t.size_ = size;
    for (const auto& [v, w] : weights)
      if (w != 0) t.prob_[v] = w / total;
    t.finish();
    return t;
  }

  std::size_t size() const { return size_; }
  const std::map<long, Rational>& probabilities() const { return prob_; }
  Rational probability(long value) const {
    auto it = prob_.find(value);
    return it == prob_.end() ? Rational(0) : it->second;
  }
  const Rational& mean() const { return mean_; }
  const Rational& variance() const { return variance_; }
  Rational total() const {
    Rational t(0);
    for (const auto& [v, p] : prob_) t += p;
    return t;
  }

  /// Rows `n,value,prob_num,prob_den`, without header.
  void write_csv_rows(std::ostream& os) const {
    for (const auto& [v, p] : prob_) os << size_ << ',' << v << ',' << numerator_of(p) << ',' << denominator_of(p) << '\n';
  }

 private:
  void finish() {
    Rational m(0), s(0);
    for (const auto& [v, p] : prob_) {
      m += p * v;
      s += p * v * v;
    }
    mean_ = m;
    variance_ = s - m * m;
  }

  std::size_t size_ = 0;
  std::map<long, Rational> prob_;
  Rational mean_{0}, variance_{0};
};

inline void write_distribution_csv(const std::vector<DistributionTable>& tables, std::ostream& os) {
  os << "n,value,prob_num,prob_den\n";
  for (const auto& t : tables) t.write_csv_rows(os);
}

/// Law of the marked parameter at size n: value j has weight [u^j][z^n]F.
inline DistributionTable bivariate_distribution(const BiSeries& F, std::size_t n) {
  const auto& poly = F.ref(n);
  std::map<long, Rational> w;
  for (std::size_t j = 0; j < poly.size(); ++j)
    if (poly[j] != 0) w[static_cast<long>(j)] = poly[j];
  return DistributionTable::from_weights(n, w);
}

}  // namespace anacomb::series
