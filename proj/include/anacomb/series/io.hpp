#pragma once

#include "anacomb/series/series.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace anacomb::series {

/// Writes f_0..f_{count-1} as CSV with header `n,numerator,denominator`.
inline void export_csv(const Series& f, std::size_t count, std::ostream& os) {
  os << "n,numerator,denominator\n";
  for (std::size_t n = 0; n < count; ++n) {
    const Rational& q = f.ref(n);
    os << n << ',' << numerator_of(q) << ',' << denominator_of(q) << '\n';
  }
}

/// Reads a coefficient table; indices may be sparse and unordered, missing ones are 0.
inline std::vector<Rational> import_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("coefficient CSV: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "n,numerator,denominator") throw std::runtime_error("coefficient CSV: bad header '" + line + "'");
  std::vector<Rational> out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string a, b, c;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c))
      throw std::runtime_error("coefficient CSV line " + std::to_string(lineno) + ": expected three fields");
    try {
      std::size_t n = std::stoul(a);
      Integer num(b), den(c);
      if (den == 0) throw std::domain_error("zero denominator");
      if (out.size() <= n) out.resize(n + 1, Rational(0));
      out[n] = Rational(num, den);
    } catch (const std::exception& e) {
      throw std::runtime_error("coefficient CSV line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

inline Series import_csv_series(std::istream& is) { return Series::from_coefficients(import_csv(is)); }

}  // namespace anacomb::series
