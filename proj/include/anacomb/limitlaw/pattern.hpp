#pragma once

// Occurrences of a word as a contiguous block in random Bernoulli strings.
// The prefix automaton of the pattern is a finite-state device whose
// transition matrix T(u) carries u on every completed occurrence, so the
// bivariate GF is initial (I - z T(u))^{-1} final.

#include "anacomb/limitlaw/quasi_powers.hpp"
#include "anacomb/series/distribution.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace anacomb::limitlaw {

using series::BiSeries;
using series::DistributionTable;
using UPoly = Polynomial<Rational>;

class model_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct TransferModel {
  std::size_t states = 0;
  std::vector<std::vector<UPoly>> T;  // T[i][j]: weight of i -> j, a polynomial in u
  std::vector<Rational> initial;
  std::vector<Rational> final_;

  /// Numeric T(u).
  Eigen::MatrixXd at(double u) const {
    Eigen::MatrixXd M(states, states);
    for (std::size_t i = 0; i < states; ++i)
      for (std::size_t j = 0; j < states; ++j) M(i, j) = T[i][j].evaluate_double(u);
    return M;
  }

  /// Row sums of T(1) all equal 1.
  bool stochastic() const {
    for (std::size_t i = 0; i < states; ++i) {
      Rational s(0);
      for (std::size_t j = 0; j < states; ++j) s += T[i][j].evaluate(Rational(1));
      if (s != 1) return false;
    }
    return true;
  }
};

/// Letter probabilities keyed by letter.
using alphabet_t = std::map<char, Rational>;

namespace detail {

/// KMP failure function: fail[k] = length of the longest proper border of pattern[0..k).
inline std::vector<std::size_t> failure_function(const std::string& p) {
  std::vector<std::size_t> fail(p.size() + 1, 0);
  for (std::size_t k = 2; k <= p.size(); ++k) {
    std::size_t b = fail[k - 1];
    while (b > 0 && p[b] != p[k - 1]) b = fail[b];
    if (p[b] == p[k - 1]) ++b;
    fail[k] = b;
  }
  return fail;
}

}  // namespace detail

/// States 0..m-1 are the lengths of the longest pattern prefix that is a
/// suffix of the text read so far; a completed match falls back to the
/// border of the full pattern.
inline TransferModel build_pattern_model(const std::string& pattern, const alphabet_t& alphabet) {
  if (pattern.empty()) throw model_error("pattern must be nonempty");
  Rational total(0);
  for (const auto& [a, p] : alphabet) {
    if (p < 0) throw model_error("letter probabilities must be nonnegative");
    total += p;
  }
  if (total != 1) throw model_error("letter probabilities must sum to 1");
  for (char c : pattern)
    if (!alphabet.count(c)) throw model_error(std::string("pattern letter '") + c + "' is not in the alphabet");

  const std::size_t m = pattern.size();
  auto fail = detail::failure_function(pattern);
  TransferModel M;
  M.states = m;
  M.T.assign(m, std::vector<UPoly>(m));
  for (std::size_t s = 0; s < m; ++s) {
    for (const auto& [a, p] : alphabet) {
      if (p == 0) continue;
      std::size_t k = s;
      while (k > 0 && pattern[k] != a) k = fail[k];
      if (pattern[k] == a) ++k;
      if (k == m)
        M.T[s][fail[m]] += UPoly::monomial(p, 1);
      else
        M.T[s][k] += UPoly(p);
    }
  }
  M.initial.assign(m, Rational(0));
  M.initial[0] = 1;
  M.final_.assign(m, Rational(1));
  return M;
}

/// Lazy [z^n] = initial T(u)^n final.
inline BiSeries model_biseries(const TransferModel& m) {
  struct state {
    TransferModel model;
    std::vector<std::vector<UPoly>> rows;  // rows[n] = initial T^n
  };
  auto st = std::make_shared<state>();
  st->model = m;
  std::vector<UPoly> v0;
  for (const auto& q : m.initial) v0.emplace_back(q);
  st->rows.push_back(std::move(v0));
  return BiSeries::from_generator(
      [st](std::size_t n) {
        const auto& M = st->model;
        while (st->rows.size() <= n) {
          const auto& v = st->rows.back();
          std::vector<UPoly> w(M.states);
          for (std::size_t i = 0; i < M.states; ++i) {
            if (v[i].is_zero()) continue;
            for (std::size_t j = 0; j < M.states; ++j)
              if (!M.T[i][j].is_zero()) w[j] += v[i] * M.T[i][j];
          }
          st->rows.push_back(std::move(w));
        }
        UPoly acc;
        for (std::size_t i = 0; i < M.states; ++i) acc += st->rows[n][i] * UPoly(M.final_[i]);
        return acc;
      },
      0);
}

/// Exact occurrence distributions at each requested n by dynamic programming
/// over (state, count) with integer weights on a common denominator.
inline std::vector<DistributionTable> pattern_distributions(const TransferModel& m, std::vector<std::size_t> ns) {
  if (ns.empty()) return {};
  std::sort(ns.begin(), ns.end());
  // Common denominator D of all transition weights; weights become integers.
  Integer D(1);
  for (const auto& row : m.T)
    for (const auto& p : row)
      for (const auto& c : p.coefficients()) D = mp::lcm(D, denominator_of(c));
  struct edge {
    std::size_t to;
    std::size_t mark;
    Integer w;
  };
  std::vector<std::vector<edge>> out(m.states);
  for (std::size_t i = 0; i < m.states; ++i)
    for (std::size_t j = 0; j < m.states; ++j) {
      const auto& p = m.T[i][j];
      for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] != 0) out[i].push_back({j, k, numerator_of(p[k] * Rational(D))});
    }
  std::size_t max_mark = 0;
  for (const auto& es : out)
    for (const auto& e : es) max_mark = std::max(max_mark, e.mark);

  const std::size_t n_max = ns.back();
  const std::size_t width = max_mark * n_max + 1;
  std::vector<std::vector<Integer>> cur(m.states, std::vector<Integer>(1, Integer(0)));
  for (std::size_t i = 0; i < m.states; ++i) {
    if (denominator_of(m.initial[i]) != 1 && m.initial[i] != 0) throw model_error("initial vector must be integral");
    cur[i][0] = numerator_of(m.initial[i]);
  }
  std::vector<DistributionTable> tables;
  std::size_t next_req = 0;
  auto emit = [&](std::size_t n) {
    std::map<long, Rational> w;
    for (std::size_t i = 0; i < m.states; ++i)
      for (std::size_t k = 0; k < cur[i].size(); ++k)
        if (cur[i][k] != 0) w[static_cast<long>(k)] += Rational(cur[i][k]) * m.final_[i];
    tables.push_back(DistributionTable::from_weights(n, w));
  };
  while (next_req < ns.size() && ns[next_req] == 0) emit(ns[next_req++]);
  for (std::size_t n = 1; n <= n_max && next_req < ns.size(); ++n) {
    std::size_t len = std::min(width, max_mark * n + 1);
    std::vector<std::vector<Integer>> nxt(m.states, std::vector<Integer>(len, Integer(0)));
    for (std::size_t i = 0; i < m.states; ++i)
      for (std::size_t k = 0; k < cur[i].size(); ++k) {
        if (cur[i][k] == 0) continue;
        for (const auto& e : out[i]) nxt[e.to][k + e.mark] += cur[i][k] * e.w;
      }
    cur = std::move(nxt);
    while (next_req < ns.size() && ns[next_req] == n) emit(ns[next_req++]);
  }
  return tables;
}

/// Positive T(1)^k for some k <= (s-1)^2 + 1 (Wielandt bound).
inline bool primitive_at_one(const TransferModel& m) {
  const std::size_t s = m.states;
  std::vector<std::vector<char>> A(s, std::vector<char>(s, 0)), P;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) A[i][j] = m.T[i][j].evaluate(Rational(1)) > 0;
  P = A;
  const std::size_t bound = (s - 1) * (s - 1) + 1;
  for (std::size_t k = 1; k <= bound; ++k) {
    bool all = true;
    for (const auto& row : P)
      for (char c : row) all = all && c;
    if (all) return true;
    std::vector<std::vector<char>> Q(s, std::vector<char>(s, 0));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t l = 0; l < s; ++l)
        if (P[i][l])
          for (std::size_t j = 0; j < s; ++j) Q[i][j] = Q[i][j] || A[l][j];
    P = std::move(Q);
  }
  return false;
}

/// Dominant (Perron) eigenvalue of T(u) for u > 0.
inline double perron_root(const TransferModel& m, double u) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(m.at(u), false);
  const auto& ev = es.eigenvalues();
  Eigen::Index top = 0;
  for (Eigen::Index i = 1; i < ev.size(); ++i)
    if (std::abs(ev[i]) > std::abs(ev[top])) top = i;
  if (!(ev[top].real() > 0) || std::fabs(ev[top].imag()) > 1e-12 * std::abs(ev[top]))
    throw model_error("no positive dominant eigenvalue");
  return ev[top].real();
}

/// rho(u) = 1/lambda(u) and its first two derivatives at u = 1.
inline QuasiPowerModel perron_analysis(const TransferModel& m, double h = 1e-4) {
  if (!primitive_at_one(m)) throw model_error("transfer matrix at u = 1 is reducible or periodic");
  return movable_singularity_model([&](double u) { return 1.0 / perron_root(m, u); }, h);
}

}  // namespace anacomb::limitlaw
