#pragma once

#include "anacomb/series/distribution.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace anacomb::limitlaw {

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

/// sup_x |F(x) - G(x)| where F is the law of transform(X) for the integer
/// table and G a continuous CDF: at each atom both one-sided gaps count.
inline double ks_distance(const series::DistributionTable& t, const std::function<double(long)>& transform,
                          const std::function<double(double)>& cdf) {
  double below = 0, worst = 0;
  Rational acc(0);
  for (const auto& [v, p] : t.probabilities()) {
    acc += p;
    const double above = to_double(acc);
    const double g = cdf(transform(v));
    worst = std::max({worst, std::fabs(below - g), std::fabs(above - g)});
    below = above;
  }
  return worst;
}

/// KS distance between the standardized table and the standard normal.
inline double ks_to_normal(const series::DistributionTable& t) {
  const double var = to_double(t.variance());
  if (!(var > 0)) throw std::domain_error("KS distance to a normal law needs positive variance");
  const double mu = to_double(t.mean()), sd = std::sqrt(var);
  return ks_distance(t, [&](long v) { return (static_cast<double>(v) - mu) / sd; }, normal_cdf);
}

inline std::vector<double> gaussian_convergence_check(const std::vector<series::DistributionTable>& tables) {
  std::vector<double> out;
  out.reserve(tables.size());
  for (const auto& t : tables) out.push_back(ks_to_normal(t));
  return out;
}

/// [{"n": .., "ks": ..}, ...]
inline nlohmann::json ks_report_json(const std::vector<series::DistributionTable>& tables, const std::vector<double>& ks) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t i = 0; i < tables.size() && i < ks.size(); ++i) j.push_back({{"n", tables[i].size()}, {"ks", ks[i]}});
  return j;
}

}  // namespace anacomb::limitlaw
