#pragma once

// The basic scale (1 - z)^{-alpha} (log 1/(1 - z))^beta, its coefficient
// asymptotics n^{alpha-1} (log n)^beta / Gamma(alpha), and expansions built
// from it at a dominant singularity rho.

#include "anacomb/numeric.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace anacomb::singular {

/// 1/Gamma(alpha) vanishes: the element contributes no leading term.
class gamma_pole_error : public std::domain_error {
 public:
  explicit gamma_pole_error(double alpha)
      : std::domain_error("Gamma-pole: leading term vanishes (alpha = " + std::to_string(alpha) + ")") {}
};

inline bool is_gamma_pole(double alpha) { return alpha <= 0 && alpha == std::floor(alpha); }

/// Gamma with the pole check.
inline double gamma_checked(double alpha) {
  if (is_gamma_pole(alpha)) throw gamma_pole_error(alpha);
  return boost::math::tgamma(alpha);
}

/// n^{alpha-1} (log n)^beta / Gamma(alpha).
inline double scale_asymptotic(double alpha, unsigned beta, std::size_t n) {
  if (n < 2) throw std::domain_error("scale_asymptotic needs n >= 2");
  const double g = gamma_checked(alpha);
  const double ln = std::log(static_cast<double>(n));
  return std::exp((alpha - 1) * ln) * std::pow(ln, static_cast<double>(beta)) / g;
}

/// c (1 - z/rho)^{-alpha} (log 1/(1 - z/rho))^beta.
struct ScaleElement {
  double c = 0;
  double alpha = 0;
  unsigned beta = 0;

  bool operator==(const ScaleElement&) const = default;
};

/// Lexicographic asymptotic dominance on (alpha, beta).
inline bool dominates(const ScaleElement& a, const ScaleElement& b) {
  return a.alpha > b.alpha || (a.alpha == b.alpha && a.beta > b.beta);
}

struct error_term {
  double alpha = 0;
  unsigned beta = 0;
  bool operator==(const error_term&) const = default;
};

struct SingularExpansion {
  double rho = 0;
  std::vector<ScaleElement> elements;
  std::optional<error_term> error_order;

  /// Sorts by dominance and merges equal (alpha, beta) pairs.
  void normalize() {
    std::sort(elements.begin(), elements.end(), dominates);
    std::vector<ScaleElement> merged;
    for (const auto& e : elements) {
      if (!merged.empty() && merged.back().alpha == e.alpha && merged.back().beta == e.beta)
        merged.back().c += e.c;
      else
        merged.push_back(e);
    }
    elements.clear();
    for (const auto& e : merged)
      if (e.c != 0) elements.push_back(e);
  }

  /// rho > 0, strictly decreasing dominance, error term dominated by the last element.
  bool valid() const {
    if (!(rho > 0)) return false;
    for (std::size_t i = 1; i < elements.size(); ++i)
      if (!dominates(elements[i - 1], elements[i])) return false;
    if (error_order && !elements.empty()) {
      ScaleElement err{1, error_order->alpha, error_order->beta};
      if (!dominates(elements.back(), err)) return false;
    }
    return true;
  }
};

/// rho^{-n} sum_i c_i n^{alpha_i - 1}(log n)^{beta_i}/Gamma(alpha_i), in 50-digit
/// floats so that rho^{-n} cannot overflow. Elements at Gamma poles are
/// skipped; if every element is a pole, gamma_pole_error is thrown.
inline Float transfer(const SingularExpansion& se, std::size_t n) {
  if (!(se.rho > 0)) throw std::domain_error("transfer: rho must be positive");
  Float acc(0);
  bool any = false;
  std::optional<double> pole;
  for (const auto& e : se.elements) {
    if (is_gamma_pole(e.alpha)) {
      pole = e.alpha;
      continue;
    }
    acc += Float(e.c) * Float(scale_asymptotic(e.alpha, e.beta, n));
    any = true;
  }
  if (!any) throw gamma_pole_error(pole.value_or(0));
  return acc * mp::exp(-Float(static_cast<unsigned long>(n)) * mp::log(Float(se.rho)));
}

/// Coefficient formula derived from an expansion, plus periodicity and the
/// oscillation flag for cases where no point asymptotics hold.
struct AsymptoticForm {
  double rho = 0;
  std::vector<ScaleElement> elements;
  bool oscillation = false;
  std::optional<error_term> error_order;
  std::size_t period = 1;
  std::size_t residue = 0;

  static AsymptoticForm from_expansion(const SingularExpansion& se) {
    AsymptoticForm a;
    a.rho = se.rho;
    a.elements = se.elements;
    a.error_order = se.error_order;
    return a;
  }

  SingularExpansion expansion() const { return SingularExpansion{rho, elements, error_order}; }

  /// Predicted f_n; zero off the residue class when period > 1.
  Float evaluate(std::size_t n) const {
    if (period > 1 && n % period != residue % period) return Float(0);
    Float v = transfer(expansion(), n);
    return period > 1 ? Float(v * static_cast<unsigned long>(period)) : v;
  }

  /// Leading constant c/Gamma(alpha) of the dominant non-pole element.
  double leading_constant() const {
    for (const auto& e : elements)
      if (!is_gamma_pole(e.alpha)) return e.c / gamma_checked(e.alpha);
    throw gamma_pole_error(elements.empty() ? 0.0 : elements.front().alpha);
  }
};

inline void to_json(nlohmann::json& j, const ScaleElement& e) { j = {{"c", e.c}, {"alpha", e.alpha}, {"beta", e.beta}}; }
inline void from_json(const nlohmann::json& j, ScaleElement& e) {
  e.c = j.at("c").get<double>();
  e.alpha = j.at("alpha").get<double>();
  e.beta = j.at("beta").get<unsigned>();
}

inline void to_json(nlohmann::json& j, const AsymptoticForm& a) {
  j = nlohmann::json::object();
  j["rho"] = a.rho;
  j["elements"] = a.elements;
  j["oscillation"] = a.oscillation;
  if (a.error_order)
    j["error_order"] = {{"alpha", a.error_order->alpha}, {"beta", a.error_order->beta}};
  else
    j["error_order"] = nullptr;
  if (a.period > 1) {
    j["period"] = a.period;
    j["residue"] = a.residue;
  }
}

inline void from_json(const nlohmann::json& j, AsymptoticForm& a) {
  a.rho = j.at("rho").get<double>();
  a.elements = j.at("elements").get<std::vector<ScaleElement>>();
  a.oscillation = j.at("oscillation").get<bool>();
  a.error_order.reset();
  if (j.contains("error_order") && !j.at("error_order").is_null())
    a.error_order = error_term{j["error_order"].at("alpha").get<double>(), j["error_order"].at("beta").get<unsigned>()};
  a.period = j.value("period", std::size_t{1});
  a.residue = j.value("residue", std::size_t{0});
}

}  // namespace anacomb::singular
