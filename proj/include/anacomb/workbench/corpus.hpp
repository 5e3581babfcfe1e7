#pragma once

// Named end-to-end examples. Each entry builds its generating function,
// computes exact coefficients, predicts them independently and compares.

#include "anacomb/limitlaw/factors.hpp"
#include "anacomb/limitlaw/gaussian.hpp"
#include "anacomb/limitlaw/height.hpp"
#include "anacomb/limitlaw/noncrossing.hpp"
#include "anacomb/limitlaw/pattern.hpp"
#include "anacomb/series/numeric_series.hpp"
#include "anacomb/series/solvers.hpp"
#include "anacomb/singular/estimate.hpp"
#include "anacomb/singular/simple_variety.hpp"
#include "anacomb/specdsl/compile.hpp"
#include "anacomb/specdsl/parser.hpp"
#include "anacomb/workbench/report.hpp"

#include <boost/math/constants/constants.hpp>

#include <functional>
#include <future>
#include <mutex>
#include <set>

namespace anacomb::workbench {

using series::Series;

struct run_options {
  std::optional<std::size_t> order;
  std::vector<std::size_t> ns;
  std::optional<double> tolerance;
};

/// Names of public operations exercised by corpus runs in this process.
class coverage_log {
 public:
  static coverage_log& instance() {
    static coverage_log log;
    return log;
  }
  void use(std::initializer_list<const char*> names) {
    std::lock_guard<std::mutex> lock(m_);
    for (const char* n : names) used_.insert(n);
  }
  std::set<std::string> used() const {
    std::lock_guard<std::mutex> lock(m_);
    return used_;
  }

 private:
  mutable std::mutex m_;
  std::set<std::string> used_;
};

namespace corpus_detail {

inline void use(std::initializer_list<const char*> names) { coverage_log::instance().use(names); }

struct resolved {
  std::size_t order;
  std::vector<std::size_t> ns;
  tolerance_profile tol;
};

inline resolved resolve(const run_options& o, std::size_t default_order, std::vector<std::size_t> default_ns, tolerance_profile tol) {
  resolved r{o.order.value_or(default_order), o.ns.empty() ? std::move(default_ns) : o.ns, tol};
  std::sort(r.ns.begin(), r.ns.end());
  r.ns.erase(std::unique(r.ns.begin(), r.ns.end()), r.ns.end());
  if (!r.ns.empty()) r.order = std::max(r.order, r.ns.back());
  if (o.tolerance) r.tol.limit = *o.tolerance;
  return r;
}

inline std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

inline Series compile_class(const std::string& text, const std::string& cls, std::size_t order,
                            const std::map<std::string, Series>& tables = {}) {
  use({"parse_spec", "validate_wellfounded", "compile_to_series"});
  specdsl::parse_options po;
  for (const auto& [name, s] : tables) po.externals.push_back(name);
  auto spec = specdsl::parse_spec(text, po);
  auto rep = specdsl::validate_wellfounded(spec);
  if (!rep.accepted) throw std::runtime_error("corpus specification rejected");
  return specdsl::compile_to_series(spec, cls, order, tables);
}

/// Estimate on the upper half of the available coefficients and compare its
/// rho with the located one.
inline void estimate_agrees(ComparisonReport& r, const Series& f, std::size_t order, double rho, double tol) {
  use({"estimate_from_coefficients"});
  auto e = singular::estimate_from_coefficients(f, order / 2, order);
  r.estimate = summarize(e);
  r.check(std::fabs(e.rho_hat - rho) <= tol, "estimated rho " + fmt(e.rho_hat) + " within " + fmt(tol) + " of " + fmt(rho));
}

/// Mean binary-tree diversity index numerators K_n (sum of indices over all
/// trees with n internal nodes), from the inclusion-exclusion GF.
inline std::vector<Integer> diversity_index_coefficients(std::size_t N) {
  auto cat = [](std::size_t k) {
    return binomial(static_cast<unsigned>(2 * k), static_cast<unsigned>(k)) / Integer(static_cast<unsigned long>(k + 1));
  };
  // D[k][m] = [z^m](sqrt(1 - 4z + 4z^{k+1}) - sqrt(1 - 4z)), expanded in w = 4z^{k+1}:
  // sum_{j>=1} binom(1/2, j) 4^j z^{j(k+1)} (1 - 4z)^{1/2 - j}, all integral.
  std::vector<std::vector<Integer>> D(N + 1, std::vector<Integer>(N + 2, Integer(0)));
  for (std::size_t j = 1; j <= N + 1; ++j) {
    const std::size_t L = N + 2 - j;
    std::vector<Integer> c(L, Integer(1));
    for (std::size_t i = 1; i < L; ++i)
      c[i] = c[i - 1] * Integer(static_cast<long>(2 * (2 * i + 2 * j) - 6)) / Integer(static_cast<unsigned long>(i));
    const Integer bj = (j % 2 == 1 ? Integer(2) : Integer(-2)) * cat(j - 1);
    for (std::size_t k = 0; k <= N && j * (k + 1) <= N + 1; ++k)
      for (std::size_t m = j * (k + 1); m <= N + 1; ++m) D[k][m] += bj * c[m - j * (k + 1)];
  }
  std::vector<Integer> K(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    Integer acc(0);
    for (std::size_t k = 0; k <= n; ++k) acc += cat(k) * D[k][n + 1];
    K[n] = acc / 2;
  }
  return K;
}

/// K(z) evaluated numerically. Each difference of square roots is taken in
/// conjugate form d / (sqrt(a + d) + sqrt(a)) to avoid cancellation.
inline std::complex<double> diversity_index_value(std::complex<double> z) {
  const std::complex<double> a = 1.0 - 4.0 * z, base = std::sqrt(a);
  std::complex<double> acc(0), zk = z;  // zk = z^{k+1}
  double cat = 1;
  for (std::size_t k = 0; k < 2000; ++k) {
    const std::complex<double> d = 4.0 * zk;
    const std::complex<double> t = cat * d / (std::sqrt(a + d) + base);
    acc += t;
    if (std::abs(t) < 1e-18 * std::abs(acc)) break;
    cat = cat * 2 * (2 * static_cast<double>(k) + 1) / (static_cast<double>(k) + 2);
    zk *= z;
  }
  return acc / (2.0 * z);
}

/// Binomial(n, 1/2) entropy by direct summation in 50-digit floats, given log k! for k <= n.
inline Float binomial_entropy(std::size_t n, const std::function<Float(std::size_t)>& log_factorial) {
  const Float ln2 = mp::log(Float(2));
  const Float lfn = log_factorial(n);
  Float H(0);
  for (std::size_t k = 0; k <= n; ++k) {
    Float lp = lfn - log_factorial(k) - log_factorial(n - k) - ln2 * static_cast<unsigned long>(n);
    H -= mp::exp(lp) * lp;
  }
  return H;
}

inline Float entropy_prediction(std::size_t n) {
  const Float pi = boost::math::constants::pi<Float>();
  return mp::log(Float(static_cast<unsigned long>(n))) / 2 + Float(1) / 2 + mp::log(mp::sqrt(2 * pi * Float(1) / 4));
}

}  // namespace corpus_detail

inline ComparisonReport run_catalan(const run_options& o) {
  using namespace corpus_detail;
  auto R = resolve(o, 2000, {100, 200, 500, 1000, 2000}, {0.01, false, false});
  Series T = compile_class("unlabelled\nT = EPS + Z*T*T\n", "T", R.order);
  const Series z = Series::variable();
  use({"combine", "simple_variety_asym", "compare", "transfer", "scale_asymptotic", "coefficient"});
  Series phi = series::combine(series::combine_op::mul, Series::one() + z, Series::one() + z);
  auto a = singular::simple_variety_asym(phi);
  auto r = compare(T, a, R.ns);
  r.name = "catalan";
  r.assumptions.push_back("Delta-continuability of the tree function at 1/4");
  apply_tolerance(r, R.tol);
  r.check(series::coefficient(T, 5) == 42, "T_5 = 42");
  use({"locate_singularity", "solve_fixed_point"});
  series::bivariate_polynomial<Rational> P;
  P.c = {{0, 1}, {-1}, {1}};
  auto loc = singular::locate_singularity(singular::algebraic_shape{P, Rational(0)});
  r.check(std::fabs(loc.rho - 0.25) < 1e-12 && loc.kind == singular::singularity_kind::sqrt_branch, "branch point of y = z + y^2 at 1/4");
  auto y = series::solve_fixed_point<Rational>([&](const Series& s) { return z + s * s; }, 1);
  r.check(y.coefficient(5) == 14, "[z^5] of y = z + y^2 is 14");
  estimate_agrees(r, T, R.order, a.rho, 1e-3);
  finish_verdict(r);
  return r;
}

inline ComparisonReport run_two_regular(const run_options& o) {
  using namespace corpus_detail;
  auto R = resolve(o, 500, {50, 100, 200, 500}, {0.02, false, false});
  Series G = compile_class("labelled\nG = SET((1/2)*UCYCLE(>=3, Z))\n", "G", R.order);
  const Series z = Series::variable();
  use({"exp_log", "singular_expansion", "compare", "transfer", "cauchy_extract"});
  Series f = series::scale(series::log_inv(z), make_rational(1, 2)) - series::scale(z, make_rational(1, 2)) -
             series::scale(z * z, make_rational(1, 4));
  Series closed = series::exp_log(f, series::exp_log_kind::exp);
  auto se = singular::singular_expansion(singular::exp_log_shape{f, Rational(1), make_rational(1, 2)});
  auto a = singular::AsymptoticForm::from_expansion(se);
  auto r = compare(G, a, R.ns);
  r.name = "two_regular";
  r.assumptions.push_back("Delta-continuability of exp(-z/2 - z^2/4)/sqrt(1 - z) at 1");
  apply_tolerance(r, R.tol);
  r.check(series::agree_to_order(G, closed, std::min<std::size_t>(R.order, 60)), "specification and closed form agree to order 60");
  r.check(G.coefficient(6) * Rational(factorial(6)) == 70, "6! [z^6] G = 70");
  r.check(std::fabs(se.elements.at(0).c - std::exp(-0.75)) < 1e-12, "leading amplitude e^{-3/4}");
  auto c = series::cauchy_extract(
      [](std::complex<double> w) { return std::exp(-w / 2.0 - w * w / 4.0) / std::sqrt(1.0 - w); }, 0.5, 8);
  r.check(std::fabs(c[6] - 70.0 / 720) < 1e-9, "Cauchy extraction at n = 6 within 1e-9");
  finish_verdict(r);
  return r;
}

inline ComparisonReport run_two_three_trees(const run_options& o) {
  using namespace corpus_detail;
  auto R = resolve(o, 400, {100, 200, 300, 400}, {0, false, false});
  Series T = compile_class("unlabelled\nT = Z + SUBST(T, Z^2 + Z^3)\n", "T", R.order);
  use({"substitute", "estimate_from_coefficients"});
  ComparisonReport r;
  r.name = "two_three_trees";
  for (std::size_t n : R.ns) r.rows.push_back(make_row(n, to_float(T.coefficient(n)), std::nullopt));
  r.assumptions.push_back("no point asymptotics: coefficients carry a periodic fluctuation in log n");
  const double phi = (1 + std::sqrt(5.0)) / 2;
  auto e = singular::estimate_from_coefficients(T, R.order / 2, R.order);
  r.estimate = summarize(e);
  r.check(std::fabs(e.rho_hat - 1 / phi) < 1e-3, "estimated rho " + fmt(e.rho_hat) + " within 1e-3 of 1/phi");
  std::vector<double> s, ns;
  const Float lphi = mp::log(Float(phi));
  for (std::size_t n = R.order / 2; n <= R.order; ++n) {
    ns.push_back(static_cast<double>(n));
    s.push_back(static_cast<double>(to_float(T.coefficient(n)) * static_cast<unsigned long>(n) *
                                    mp::exp(-lphi * static_cast<unsigned long>(n))));
  }
  auto osc = singular::oscillation_indicator(s, ns);
  r.check(osc.fires, "oscillation indicator on n T_n phi^-n: range " + fmt(osc.raw_range) + " vs noise " + fmt(osc.noise));
  r.verdict = r.pass ? "oscillation detected; no point asymptotics claimed" : "tolerance violation";
  return r;
}

inline ComparisonReport run_diversity_index(const run_options& o) {
  using namespace corpus_detail;
  auto R = resolve(o, 500, {100, 200, 300, 400, 500}, {0.05, false, true});
  auto K = diversity_index_coefficients(R.order);
  std::vector<Rational> kq(K.begin(), K.end());
  Series Ks = Series::from_coefficients(kq);
  const double C = std::sqrt(8 * std::log(2.0) / boost::math::constants::pi<double>());
  ComparisonReport r;
  r.name = "diversity_index";
  r.assumptions.push_back("Delta-continuability of K(z); singular type outside the implemented scale, trend check only");
  double lo = 1e300, hi = -1e300;
  for (std::size_t n : R.ns) {
    Rational mean = Rational(K[n]) / Rational(binomial(static_cast<unsigned>(2 * n), static_cast<unsigned>(n)) / Integer(static_cast<unsigned long>(n + 1)));
    const double nd = static_cast<double>(n);
    Float pred(C * nd / std::sqrt(std::log(nd)));
    r.rows.push_back(make_row(n, to_float(mean), pred));
    const double ratio = to_double(mean) / (nd / std::sqrt(std::log(nd)));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  apply_tolerance(r, R.tol);
  r.check(hi - lo < 0.01 * C, "mean sqrt(log n)/n varies by " + fmt(hi - lo) + " over the rows");
  use({"cauchy_extract"});
  auto c = series::cauchy_extract(diversity_index_value, 0.2, 24);
  bool ok = true;
  for (std::size_t n = 0; n < c.size(); ++n) {
    const double exact = to_double(kq[n]);
    if (std::fabs(c[n] - exact) > 1e-9 * std::max(1.0, std::fabs(exact))) ok = false;
  }
  r.check(ok, "Cauchy extraction of K(z) at r = 0.2 matches the exact K_n, n < 24");
  estimate_agrees(r, Ks, R.order, 0.25, 1e-3);
  finish_verdict(r, "trend consistent");
  return r;
}

inline ComparisonReport run_entropy(const run_options& o) {
  using namespace corpus_detail;
  auto R = resolve(o, 10000, {100, 1000, 10000}, {5e-3, true, false});
  std::vector<Float> lf(R.order + 1, Float(0));
  for (std::size_t k = 2; k <= R.order; ++k) lf[k] = lf[k - 1] + mp::log(Float(static_cast<unsigned long>(k)));
  ComparisonReport r;
  r.name = "entropy";
  for (std::size_t n : R.ns)
    r.rows.push_back(make_row(n, binomial_entropy(n, [&](std::size_t k) { return lf[k]; }), entropy_prediction(n)));
  r.assumptions.push_back("50-digit floating summation (log-probabilities are irrational)");
  apply_tolerance(r, R.tol);
  finish_verdict(r);
  return r;
}

inline ComparisonReport run_polylog_entropy(const run_options& o) {
  using namespace corpus_detail;
  auto R = resolve(o, 2000, {100, 500, 1000, 2000}, {5e-3, true, false});
  use({"polylog", "combine", "quasi_inverse"});
  const Series z = Series::variable();
  auto logfact = series::to_float_series(series::quasi_inverse(z)) * series::polylog(Float(0), 1, R.order);
  logfact.ensure(R.order);
  ComparisonReport r;
  r.name = "polylog_entropy";
  for (std::size_t n : R.ns)
    r.rows.push_back(make_row(n, binomial_entropy(n, [&](std::size_t k) { return logfact.coefficient(k); }), entropy_prediction(n)));
  r.assumptions.push_back("log k! taken from (1 - z)^{-1} Li_{0,1}(z) at 50 digits");
  apply_tolerance(r, R.tol);
  r.check(mp::abs(logfact.coefficient(4) - mp::log(Float(24))) < Float(1e-40), "[z^4] (1 - z)^{-1} Li_{0,1} = log 24");
  finish_verdict(r);
  return r;
}

inline ComparisonReport run_quicksort(const run_options& o) {
  using namespace corpus_detail;
  auto R = resolve(o, 2000, {100, 500, 1000, 2000}, {0.10, false, false});
  use({"linear_operator_solve", "calculus", "combine", "quasi_inverse", "singular_expansion", "transfer"});
  const Series z = Series::variable();
  Series toll = Series::from_generator([](std::size_t n) { return Rational(n > 0 ? static_cast<long>(n) - 1 : 0); }, 2);
  series::linear_operator L({series::linear_step::multiply({Rational(1)}, {Rational(1), Rational(-1)}),
                             series::linear_step::integral(), series::linear_step::times(Rational(2))});
  Series f = series::linear_operator_solve(toll, L);
  f.ensure(R.order);
  // f = (2/(1-z)^2)(log 1/(1-z) - z): leading two elements.
  singular::composite_shape shape;
  shape.parts.push_back(singular::power_log_shape{Polynomial<Rational>{Rational(2)}, Rational(1), 2.0, 1});
  shape.parts.push_back(singular::power_log_shape{Polynomial<Rational>{Rational(0), Rational(-2)}, Rational(1), 2.0, 0});
  auto se = singular::singular_expansion(shape, 1.0);
  auto a = singular::AsymptoticForm::from_expansion(se);
  auto r = compare(f, a, R.ns);
  r.name = "quicksort";
  r.assumptions.push_back("Delta-continuability of the comparison GF at 1");
  apply_tolerance(r, R.tol);
  bool exact_ok = true;
  Rational H(0);
  for (std::size_t n = 1; n <= R.order; ++n) {
    H += make_rational(1, static_cast<long long>(n));
    if (f.coefficient(n) != Rational(2 * (static_cast<long>(n) + 1)) * H - Rational(4 * static_cast<long>(n))) exact_ok = false;
  }
  r.check(exact_ok, "f_n = 2(n+1)H_n - 4n exactly for n <= " + std::to_string(R.order));
  Series lhs = toll + series::scale(series::calculus(series::combine(series::combine_op::mul, series::quasi_inverse(z), f),
                                                     series::calculus_kind::integrate),
                                    Rational(2));
  r.check(series::agree_to_order(f, lhs, std::min<std::size_t>(R.order, 200)), "f = t + L[f] to order 200");
  bool monotone = true;
  for (std::size_t i = 1; i < r.rows.size(); ++i)
    if (!(*r.rows[i].rel_error < *r.rows[i - 1].rel_error)) monotone = false;
  r.check(monotone, "relative error decreases with n");
  finish_verdict(r);
  return r;
}

inline ComparisonReport run_pattern(const run_options& o) {
  using namespace corpus_detail;
  auto R = resolve(o, 2000, {250, 500, 1000, 2000}, {0.005, false, false});
  use({"build_pattern_model", "perron_analysis", "gaussian_convergence_check", "bivariate_distribution"});
  limitlaw::alphabet_t ab{{'a', make_rational(1, 2)}, {'b', make_rational(1, 2)}};
  auto M = limitlaw::build_pattern_model("aba", ab);
  auto tables = limitlaw::pattern_distributions(M, R.ns);
  auto ks = limitlaw::gaussian_convergence_check(tables);
  auto qp = limitlaw::perron_analysis(M);
  ComparisonReport r;
  r.name = "pattern";
  for (const auto& t : tables) r.rows.push_back(make_row(t.size(), to_float(t.mean()), Float(qp.predicted_mean(t.size()))));
  r.assumptions.push_back("Bernoulli source, uniform binary alphabet, pattern aba");
  apply_tolerance(r, R.tol);
  bool decreasing = true;
  for (std::size_t i = 1; i < ks.size(); ++i) decreasing = decreasing && ks[i] < ks[i - 1];
  r.check(decreasing, "KS distance to the normal strictly decreasing");
  r.check(ks.back() < 0.05, "KS at n = " + std::to_string(tables.back().size()) + " is " + fmt(ks.back()) + " < 0.05");
  r.check(std::fabs(limitlaw::perron_root(M, 1.0) - 1) < 1e-10, "lambda(1) = 1");
  if (tables.size() >= 2) {
    const auto& a = tables[tables.size() / 2 - (tables.size() > 2 ? 1 : 0)];
    const auto& b = tables.back();
    const double dn = static_cast<double>(b.size() - a.size());
    const double ms = to_double(b.mean() - a.mean()) / dn, vs = to_double(b.variance() - a.variance()) / dn;
    r.check(std::fabs(ms / qp.mean_coefficient() - 1) < 0.005, "mean slope " + fmt(ms) + " vs predicted " + fmt(qp.mean_coefficient()));
    r.check(std::fabs(vs / qp.variance_coefficient() - 1) < 0.02,
            "variance slope " + fmt(vs) + " vs predicted " + fmt(qp.variance_coefficient()));
  }
  bool lin = true;
  for (const auto& t : tables) lin = lin && t.mean() == make_rational(static_cast<long long>(t.size()) - 2, 8);
  r.check(lin, "exact mean (n - 2)/8");
  auto d = series::bivariate_distribution(limitlaw::model_biseries(limitlaw::build_pattern_model("aa", ab)), 2);
  r.check(d.probability(1) == make_rational(1, 4), "pattern aa at n = 2: P(one occurrence) = 1/4");
  r.assumptions.push_back("KS report: " + limitlaw::ks_report_json(tables, ks).dump());
  finish_verdict(r);
  return r;
}

inline ComparisonReport run_fq_factors(const run_options& o) {
  using namespace corpus_detail;
  auto R = resolve(o, 60, {5, 10, 15, 20}, {0.001, false, false});
  use({"factor_count_model", "polya_set", "polya_cycle", "singular_expansion", "bivariate_distribution"});
  ComparisonReport r;
  r.name = "fq_factors";
  for (std::size_t n : R.ns)
    r.rows.push_back(make_row(n, Float(limitlaw::irreducible_count(2, n)), mp::pow(Float(2), static_cast<unsigned long>(n)) / static_cast<unsigned long>(n)));
  r.assumptions.push_back("q = 2; factors counted with multiplicity");
  apply_tolerance(r, R.tol);
  const Series z = Series::variable();
  Series I = limitlaw::irreducible_series(2);
  Series P = series::polya_set(I);
  bool geo = true;
  for (std::size_t n = 0; n <= 60; ++n) geo = geo && P.coefficient(n) == Rational(ipow(Integer(2), static_cast<unsigned>(n)));
  r.check(geo, "polya_set(I) = 1/(1 - 2z) to order 60");
  auto F = limitlaw::factor_count_model(2, R.order);
  bool total = true;
  for (std::size_t n = 0; n <= R.order; ++n) total = total && F.ref(n).evaluate(Rational(1)) == Rational(ipow(Integer(2), static_cast<unsigned>(n)));
  r.check(total, "factor-count model sums to 2^n for n <= " + std::to_string(R.order));
  auto d2 = series::bivariate_distribution(F, 2);
  r.check(d2.probability(1) == make_rational(1, 4) && d2.probability(2) == make_rational(3, 4), "degree 2: P(1) = 1/4, P(2) = 3/4");
  const std::size_t n1 = R.order;
  const Rational m1 = series::bivariate_distribution(F, n1).mean(), m0 = series::bivariate_distribution(F, n1 - 1).mean();
  const double slope = to_double(m1 - m0) * static_cast<double>(n1);
  r.check(std::fabs(slope - 1) < 0.05, "n (mean_n - mean_{n-1}) = " + fmt(slope) + " near 1");
  auto se = singular::singular_expansion(singular::exp_log_shape{I, make_rational(1, 2), Rational(1), true});
  r.check(std::fabs(se.elements.at(0).c - 1) < 1e-9, "exp-log prefactor at 1/2 is " + fmt(se.elements.at(0).c));
  // Binary necklaces of length n: one per primitive necklace of each length d | n.
  Series N = series::polya_cycle(series::scale(z, Rational(2)));
  bool neck = true;
  for (std::size_t n = 1; n <= 30; ++n) {
    Integer s(0);
    for (std::size_t d : divisors(n)) s += limitlaw::irreducible_count(2, d);
    neck = neck && N.coefficient(n) == Rational(s);
  }
  r.check(neck, "necklace counts from polya_cycle match sums of irreducible counts");
  finish_verdict(r);
  return r;
}

inline ComparisonReport run_noncrossing(const run_options& o) {
  using namespace corpus_detail;
  auto R = resolve(o, 400, {100, 200, 300, 400}, {0.02, false, false});
  use({"solve_fixed_point", "locate_singularity", "singular_expansion", "transfer"});
  Series G = limitlaw::noncrossing_series(Rational(1));
  G.ensure(R.order);
  const auto shape = singular::algebraic_shape{limitlaw::noncrossing_reduced(Rational(1)), Rational(1)};
  auto loc = singular::locate_singularity(shape);
  auto se = singular::singular_expansion(shape, loc.rho);
  auto a = singular::AsymptoticForm::from_expansion(se);
  ComparisonReport r;
  r.name = "noncrossing";
  // G_n = h_{n-1} with G = 1 + z h.
  for (std::size_t n : R.ns) r.rows.push_back(make_row(n, to_float(G.coefficient(n)), a.evaluate(n - 1)));
  r.assumptions.push_back("Delta-continuability of the cubic branch at rho(1)");
  apply_tolerance(r, R.tol);
  const double rho1 = 1.5 - std::sqrt(2.0);
  r.check(std::fabs(loc.rho - rho1) < 1e-10, "located rho " + fmt(loc.rho) + " equals 3/2 - sqrt 2 within 1e-10");
  estimate_agrees(r, G, R.order, loc.rho, 1e-4);
  const std::vector<long> small{1, 1, 2, 8, 48, 352, 2880};
  bool ok = true;
  for (std::size_t n = 0; n < small.size(); ++n) ok = ok && G.coefficient(n) == small[n];
  r.check(ok, "G_0..G_6 = 1, 1, 2, 8, 48, 352, 2880");
  auto J = limitlaw::noncrossing_jet_series();
  auto qa = limitlaw::noncrossing_moments(J, 100), qb = limitlaw::noncrossing_moments(J, 200);
  auto qp = limitlaw::noncrossing_quasi_power();
  const double ms = to_double(qb.mean - qa.mean) / 100, vs = to_double(qb.variance - qa.variance) / 100;
  r.check(std::fabs(ms / qp.mean_coefficient() - 1) < 0.01, "component mean slope " + fmt(ms) + " vs " + fmt(qp.mean_coefficient()));
  r.check(std::fabs(vs / qp.variance_coefficient() - 1) < 0.02, "component variance slope " + fmt(vs) + " vs " + fmt(qp.variance_coefficient()));
  finish_verdict(r);
  return r;
}

inline ComparisonReport run_height_theta(const run_options& o) {
  using namespace corpus_detail;
  auto R = resolve(o, 400, {50, 100, 200, 400}, {0.10, false, false});
  use({"height_distribution", "theta_density"});
  ComparisonReport r;
  r.name = "height_theta";
  const double theta_mean = std::sqrt(boost::math::constants::pi<double>());
  std::vector<double> ks;
  series::DistributionTable last;
  for (std::size_t n : R.ns) {
    auto t = limitlaw::height_distribution(n);
    const double s = 2 * std::sqrt(static_cast<double>(n));
    r.rows.push_back(make_row(n, to_float(t.mean()) / Float(s), Float(theta_mean)));
    ks.push_back(limitlaw::height_theta_ks(t));
    last = t;
  }
  r.assumptions.push_back("height counts edges to the deepest leaf; n counts external nodes");
  apply_tolerance(r, R.tol);
  const double norm = limitlaw::theta_normalization();
  r.check(std::fabs(norm - 1) < 1e-6, "theta density integrates to 1 within 1e-6");
  bool decreasing = true;
  for (std::size_t i = 1; i < ks.size(); ++i) decreasing = decreasing && ks[i] < ks[i - 1];
  r.check(decreasing, "KS distance to the theta law decreasing in n");
  r.check(ks.back() < 0.05, "KS at n = " + std::to_string(R.ns.back()) + " is " + fmt(ks.back()) + " < 0.05");
  // Modes: histogram of height/(2 sqrt n) against the density maximum.
  long hmode = 0;
  Rational best(-1);
  for (const auto& [h, p] : last.probabilities())
    if (p > best) {
      best = p;
      hmode = h;
    }
  double xmode = 0.1, dmax = 0;
  for (double x = 0.1; x < 4; x += 1e-3)
    if (limitlaw::theta_density(x) > dmax) {
      dmax = limitlaw::theta_density(x);
      xmode = x;
    }
  const double emp = static_cast<double>(hmode) / (2 * std::sqrt(static_cast<double>(last.size())));
  r.check(std::fabs(emp - xmode) < 0.25, "histogram mode " + fmt(emp) + " vs density mode " + fmt(xmode));
  finish_verdict(r);
  return r;
}

inline ComparisonReport run_simple_variety(const run_options& o) {
  using namespace corpus_detail;
  auto R = resolve(o, 300, {50, 100, 200, 300}, {0.01, false, false});
  use({"solve_fixed_point", "simple_variety_asym", "combine", "compare", "coefficient"});
  const Series z = Series::variable();
  Series T = series::solve_fixed_point<Rational>([&](const Series& y) { return z * series::exp(y); }, 1);
  T.ensure(R.order);
  auto a = singular::simple_variety_asym(series::exp(z));
  auto r = compare(T, a, R.ns);
  r.name = "simple_variety";
  r.assumptions.push_back("Cayley trees y = z e^y; EGF coefficients");
  apply_tolerance(r, R.tol);
  Series fact = Series::from_generator([](std::size_t n) { return Rational(factorial(static_cast<unsigned>(n))); }, 0);
  Series counts = series::combine(series::combine_op::hadamard, T, fact);
  bool cay = true;
  for (std::size_t n = 1; n <= std::min<std::size_t>(R.order, 100); ++n)
    cay = cay && counts.coefficient(n) == Rational(ipow(Integer(static_cast<unsigned long>(n)), static_cast<unsigned>(n - 1)));
  r.check(cay, "n! [z^n] T = n^{n-1} for n <= 100");
  r.check(std::fabs(a.rho - std::exp(-1.0)) < 1e-12 && std::fabs(a.leading_constant() - 1 / std::sqrt(2 * boost::math::constants::pi<double>())) < 1e-10,
          "rho = 1/e, c = 1/sqrt(2 pi)");
  auto bin = singular::simple_variety_asym(series::power(Series::one() + z, Rational(2)));
  r.check(std::fabs(bin.rho - 0.25) < 1e-10 && std::fabs(bin.leading_constant() - 1 / std::sqrt(boost::math::constants::pi<double>())) < 1e-10,
          "phi = (1 + y)^2: rho = 1/4, c = 1/sqrt(pi)");
  auto per = singular::simple_variety_asym(Series::one() + z * z);
  Series Y = series::solve_fixed_point<Rational>([&](const Series& y) { return z * (Series::one() + y * y); }, 1);
  const double err = static_cast<double>(mp::abs(per.evaluate(201) / to_float(Y.coefficient(201)) - 1));
  r.check(per.period == 2 && per.residue == 1 && per.evaluate(200) == 0 && err < 0.02,
          "phi = 1 + y^2: period 2 on odd n, error at n = 201 is " + fmt(err));
  finish_verdict(r);
  return r;
}

struct corpus_entry {
  std::string name;
  std::string description;
  std::function<ComparisonReport(const run_options&)> run;
};

inline const std::vector<corpus_entry>& corpus() {
  static const std::vector<corpus_entry> entries{
      {"catalan", "binary trees T = 1 + z T^2 against the simple-variety law", run_catalan},
      {"two_regular", "labelled 2-regular graphs, sets of undirected cycles of length >= 3", run_two_regular},
      {"two_three_trees", "balanced 2-3 trees T = z + T(z^2 + z^3), empirical only", run_two_three_trees},
      {"diversity_index", "mean diversity index of binary trees, trend only", run_diversity_index},
      {"entropy", "entropy of the binomial(n, 1/2) law", run_entropy},
      {"quicksort", "quicksort comparisons via the divide-and-conquer operator", run_quicksort},
      {"pattern", "occurrences of aba in random binary strings", run_pattern},
      {"fq_factors", "irreducible factors of random polynomials over F_2", run_fq_factors},
      {"noncrossing", "non-crossing graphs and their components", run_noncrossing},
      {"height_theta", "height of binary trees against the theta law", run_height_theta},
      {"polylog_entropy", "binomial entropy from the log-factorial polylogarithm series", run_polylog_entropy},
      {"simple_variety", "Cayley trees y = z e^y and periodic varieties", run_simple_variety},
  };
  return entries;
}

inline ComparisonReport run_example(const std::string& name, const run_options& o = {}) {
  coverage_log::instance().use({"run_example"});
  for (const auto& e : corpus())
    if (e.name == name) return e.run(o);
  throw std::invalid_argument("unknown corpus entry '" + name + "'");
}

/// Every entry, concurrently; the result order follows corpus().
inline std::vector<ComparisonReport> run_all(const run_options& o = {}) {
  std::vector<std::future<ComparisonReport>> jobs;
  for (const auto& e : corpus()) jobs.push_back(std::async(std::launch::async, [&e, o] { return run_example(e.name, o); }));
  std::vector<ComparisonReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace anacomb::workbench
