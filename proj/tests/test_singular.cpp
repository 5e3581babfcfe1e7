#include "anacomb/limitlaw/factors.hpp"
#include "anacomb/limitlaw/noncrossing.hpp"
#include "anacomb/series/numeric_series.hpp"
#include "anacomb/series/ops.hpp"
#include "anacomb/series/solvers.hpp"
#include "anacomb/singular/estimate.hpp"
#include "anacomb/singular/locate.hpp"
#include "anacomb/singular/scale.hpp"
#include "anacomb/singular/simple_variety.hpp"

#include <boost/math/constants/constants.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>

using namespace anacomb;
using namespace anacomb::singular;
using series::Series;

namespace {

const double pi = std::numbers::pi;

Integer catalan(unsigned n) { return binomial(2 * n, n) / Integer(n + 1); }

Series one_minus_z_pow(const Rational& minus_alpha) {
  return series::power(Series::one() - Series::variable(), minus_alpha);
}

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }
double rel(const Float& got, const Float& want) { return mp::abs((got - want) / want).convert_to<double>(); }

// Binary trees by internal nodes: y = 1 + z y^2.
Series catalan_series() {
  const Series z = Series::variable();
  return series::solve_fixed_point<Rational>([z](const Series& s) { return Series::one() + z * s * s; }, 0);
}

}  // namespace

// ---- scale_asymptotic ----

TEST(ScaleAsymptotic, HalfIsInverseSqrtPiN) {
  for (std::size_t n : {2u, 10u, 1000u, 123456u})
    EXPECT_NEAR(scale_asymptotic(0.5, 0, n) * std::sqrt(pi * n), 1.0, 1e-13);
}

TEST(ScaleAsymptotic, GeometricIsOne) {
  for (std::size_t n : {2u, 17u, 99999u}) EXPECT_NEAR(scale_asymptotic(1.0, 0, n), 1.0, 1e-15);
}

TEST(ScaleAsymptotic, NLogNTracksExactCoefficients) {
  // [z^n](1-z)^{-2} log 1/(1-z) = (n+1)(H_{n+1} - 1).
  Series f = one_minus_z_pow(Rational(-2)) * series::log_inv(Series::variable());
  long double H = 1;
  std::size_t next = 100;
  double prev = 1e9;
  for (std::size_t m = 2; m <= 1000001; ++m) {
    H += 1.0L / m;
    const std::size_t n = m - 1;
    if (n != next) continue;
    const double exact = static_cast<double>((n + 1) * (H - 1));
    if (n <= 1000) EXPECT_NEAR(to_double(f.coefficient(n)) / exact, 1.0, 1e-12);
    const double err = rel(scale_asymptotic(2.0, 1, n), exact);
    EXPECT_LT(err, prev) << n;
    prev = err;
    next *= 10;
  }
  // (1 - gamma)/log n at n = 10^6.
  EXPECT_LT(prev, 0.035);
}

TEST(ScaleAsymptotic, GammaPoleSignals) {
  for (double a : {0.0, -1.0, -4.0}) EXPECT_THROW(scale_asymptotic(a, 0, 10), gamma_pole_error);
  EXPECT_THROW(scale_asymptotic(1.0, 0, 1), std::domain_error);
  EXPECT_NO_THROW(scale_asymptotic(-0.5, 0, 10));
}

TEST(ScaleAsymptotic, GammaRecurrence) {
  for (double x = -3.75; x <= 12.0; x += 0.3125) {
    if (is_gamma_pole(x) || is_gamma_pole(x + 1)) continue;
    EXPECT_NEAR(gamma_checked(x + 1) / (x * gamma_checked(x)), 1.0, 1e-12) << x;
  }
}

TEST(ScaleAsymptotic, DominanceGrowsWithoutBound) {
  const std::vector<std::pair<ScaleElement, ScaleElement>> pairs = {
      {{1, 1.5, 0}, {1, 0.5, 0}}, {{1, 1.0, 1}, {1, 1.0, 0}}, {{1, 0.5, 2}, {1, 0.5, 1}}, {{1, 2.0, 0}, {1, 1.5, 1}}};
  for (const auto& [a, b] : pairs) {
    ASSERT_TRUE(dominates(a, b));
    auto ratio = [&](std::size_t n) { return scale_asymptotic(a.alpha, a.beta, n) / scale_asymptotic(b.alpha, b.beta, n); };
    EXPECT_GT(ratio(1000000), ratio(10000));
    EXPECT_GT(ratio(10000), ratio(100));
    EXPECT_GT(ratio(1000000), 1.0);
  }
}

// ---- transfer ----

TEST(Transfer, CatalanNegativeHalfBranch) {
  // (1 - sqrt(1 - 4z))/2 = sum Cat_{n-1} z^n.
  SingularExpansion se{0.25, {{-0.5, -0.5, 0}}, std::nullopt};
  ASSERT_TRUE(se.valid());
  Float exact = to_float(Rational(catalan(99)));
  EXPECT_LT(rel(transfer(se, 100), exact), 0.02);
  Float closed = mp::pow(Float(4), 100) * mp::pow(Float(100), Float(-1.5)) / (4 * mp::sqrt(boost::math::constants::pi<Float>()));
  EXPECT_LT(rel(transfer(se, 100), closed), 1e-12);
}

TEST(Transfer, TwoRegularAmplitude) {
  SingularExpansion se{1.0, {{std::exp(-0.75), 0.5, 0}}, std::nullopt};
  for (std::size_t n : {10u, 100u, 1000u})
    EXPECT_NEAR(transfer(se, n).convert_to<double>() * std::sqrt(pi * n), std::exp(-0.75), 1e-12);
}

TEST(Transfer, ConstantLambda) {
  SingularExpansion se{1.0, {{2.75, 1.0, 0}}, std::nullopt};
  for (std::size_t n : {2u, 50u, 5000u}) EXPECT_NEAR(transfer(se, n).convert_to<double>(), 2.75, 1e-12);
}

TEST(Transfer, PoleElementFallsThrough) {
  SingularExpansion se{0.5, {{3.0, 0.0, 0}, {1.0, -0.5, 0}}, std::nullopt};
  EXPECT_NEAR(transfer(se, 40).convert_to<double>(), (transfer({0.5, {{1.0, -0.5, 0}}, std::nullopt}, 40)).convert_to<double>(), 1e-3);
  EXPECT_THROW(transfer({1.0, {{1.0, -1.0, 0}}, std::nullopt}, 10), gamma_pole_error);
  EXPECT_THROW(transfer({0.0, {{1.0, 1.0, 0}}, std::nullopt}, 10), std::domain_error);
}

TEST(Transfer, LargeNDoesNotOverflow) {
  SingularExpansion se{0.01, {{1.0, 1.0, 0}}, std::nullopt};
  Float v = transfer(se, 5000);
  EXPECT_NEAR((mp::log10(v)).convert_to<double>(), 10000.0, 1e-9);
}

class TransferPowerLaw : public ::testing::TestWithParam<Rational> {};

// Relative error of the leading term against exact binomial coefficients, at
// the stated 0.3/n bound.
TEST_P(TransferPowerLaw, RelativeErrorWithinPointThreeOverN) {
  const Rational alpha = GetParam();
  Series f = one_minus_z_pow(-alpha);
  SingularExpansion se{1.0, {{1.0, to_double(alpha), 0}}, std::nullopt};
  double worst = 0;
  for (std::size_t n = 50; n <= 400; n += 25)
    worst = std::max(worst, rel(transfer(se, n), to_float(f.coefficient(n))) * static_cast<double>(n));
  EXPECT_LE(worst, 0.3) << "max n * relative error = " << worst;
}

// The first-order correction is alpha(alpha-1)/(2n).
TEST_P(TransferPowerLaw, FirstOrderCorrectionConstant) {
  const Rational alpha = GetParam();
  const double a = to_double(alpha);
  Series f = one_minus_z_pow(-alpha);
  SingularExpansion se{1.0, {{1.0, a, 0}}, std::nullopt};
  const std::size_t n = 4000;
  double ratio = (to_float(f.coefficient(n)) / transfer(se, n)).convert_to<double>();
  EXPECT_NEAR((ratio - 1) * n, a * (a - 1) / 2, 0.01);
}

INSTANTIATE_TEST_SUITE_P(Alphas, TransferPowerLaw,
                         ::testing::Values(make_rational(1, 2), make_rational(3, 2), Rational(2), make_rational(5, 2)),
                         [](const auto& info) { return "alpha_" + std::to_string(static_cast<int>(to_double(info.param) * 2)) + "_halves"; });

// ---- locate_singularity ----

TEST(Locate, RationalPole) {
  auto s = locate_singularity(rational_shape{Polynomial<Rational>{Rational(1)}, Polynomial<Rational>{Rational(1), Rational(-2)}});
  EXPECT_NEAR(s.rho, 0.5, 1e-12);
  EXPECT_EQ(s.kind, singularity_kind::pole);
}

TEST(Locate, NoncrossingBranchPoint) {
  auto s = locate_singularity(algebraic_shape{limitlaw::noncrossing_reduced(Rational(1)), Rational(1)});
  EXPECT_NEAR(s.rho, 1.5 - std::sqrt(2.0), 1e-12);
  EXPECT_EQ(s.kind, singularity_kind::sqrt_branch);
}

TEST(Locate, CatalanBranchPoint) {
  series::bivariate_polynomial<Rational> P;
  P.c = {{0, 1}, {-1}, {1}};  // z - y + y^2
  auto s = locate_singularity(algebraic_shape{P, Rational(0)});
  EXPECT_NEAR(s.rho, 0.25, 1e-12);
  EXPECT_EQ(s.kind, singularity_kind::sqrt_branch);
}

TEST(Locate, QuasiInverseAndLog) {
  const Series z = Series::variable();
  auto q = locate_singularity(quasi_inverse_shape{z + z * z});
  EXPECT_NEAR(q.rho, (std::sqrt(5.0) - 1) / 2, 1e-12);
  EXPECT_EQ(q.kind, singularity_kind::pole);
  auto l = locate_singularity(log_inverse_shape{series::scale(z, Rational(2))});
  EXPECT_NEAR(l.rho, 0.5, 1e-12);
  EXPECT_EQ(l.kind, singularity_kind::log);
}

TEST(Locate, CompositeTakesSmallest) {
  composite_shape c;
  c.parts.push_back(rational_shape{Polynomial<Rational>{Rational(1)}, Polynomial<Rational>{Rational(1), Rational(-3)}});
  c.parts.push_back(entire_shape{});
  c.parts.push_back(power_log_shape{Polynomial<Rational>{Rational(1)}, make_rational(1, 2), 0.5, 0});
  auto s = locate_singularity(c);
  EXPECT_NEAR(s.rho, 1.0 / 3, 1e-12);
  EXPECT_THROW(locate_singularity(entire_shape{}), std::domain_error);
  EXPECT_THROW(locate_singularity(composite_shape{}), unsupported_shape_error);
}

// ---- singular_expansion ----

TEST(Expansion, TwoRegularPrefactor) {
  const Series z = Series::variable();
  Series f = series::scale(series::log_inv(z), make_rational(1, 2)) - series::scale(z, make_rational(1, 2)) -
             series::scale(z * z, make_rational(1, 4));
  auto se = singular_expansion(exp_log_shape{f, Rational(1), make_rational(1, 2)});
  EXPECT_DOUBLE_EQ(se.rho, 1.0);
  ASSERT_FALSE(se.elements.empty());
  EXPECT_NEAR(se.elements[0].c, std::exp(-0.75), 1e-12);
  EXPECT_EQ(se.elements[0].alpha, 0.5);
  EXPECT_EQ(se.elements[0].beta, 0u);
  EXPECT_TRUE(se.valid());
  // A'(1) = (-1/2 - 1/2) e^{-3/4}: second element c = -rho A'(rho) at alpha - 1.
  ASSERT_EQ(se.elements.size(), 2u);
  EXPECT_NEAR(se.elements[1].c, std::exp(-0.75), 1e-12);
  EXPECT_EQ(se.elements[1].alpha, -0.5);
}

TEST(Expansion, SimplePole) {
  auto se = singular_expansion(rational_shape{Polynomial<Rational>{Rational(1)}, Polynomial<Rational>{Rational(1), Rational(-2)}});
  EXPECT_NEAR(se.rho, 0.5, 1e-12);
  ASSERT_EQ(se.elements.size(), 1u);
  EXPECT_NEAR(se.elements[0].c, 1.0, 1e-12);
  EXPECT_EQ(se.elements[0].alpha, 1.0);
  EXPECT_EQ(se.elements[0].beta, 0u);
}

TEST(Expansion, IrreduciblePolynomialsFactorize) {
  Series I = limitlaw::irreducible_series(2);
  auto se = singular_expansion(exp_log_shape{I, make_rational(1, 2), Rational(1), true});
  EXPECT_NEAR(se.rho, 0.5, 1e-12);
  EXPECT_NEAR(se.elements.at(0).c, 1.0, 1e-9);
  EXPECT_EQ(se.elements[0].alpha, 1.0);
  // Prediction against exact P_n = 2^n.
  for (std::size_t n : {20u, 60u})
    EXPECT_NEAR((transfer(se, n) / mp::pow(Float(2), static_cast<unsigned long>(n))).convert_to<double>(), 1.0, 1e-6);
}

TEST(Expansion, AlgebraicCatalan) {
  series::bivariate_polynomial<Rational> P;
  P.c = {{0, 1}, {-1}, {1}};
  auto se = singular_expansion(algebraic_shape{P, Rational(0)});
  ASSERT_EQ(se.elements.size(), 2u);
  EXPECT_NEAR(se.elements[0].c, 0.5, 1e-9);
  EXPECT_NEAR(se.elements[1].c, -0.5, 1e-9);
  EXPECT_EQ(se.elements[1].alpha, -0.5);
  EXPECT_TRUE(se.valid());
}

TEST(Expansion, DoublePoleUnsupported) {
  EXPECT_THROW(singular_expansion(rational_shape{Polynomial<Rational>{Rational(1)},
                                                 Polynomial<Rational>{Rational(1), Rational(-2), Rational(1)}},
                                  1.0),
               unsupported_shape_error);
  EXPECT_THROW(singular_expansion(entire_shape{}, 1.0), std::domain_error);
}

TEST(Expansion, NormalizeMergesAndSorts) {
  SingularExpansion se{1.0, {{1, 0.5, 0}, {2, 1.0, 0}, {3, 0.5, 0}, {-2, 1.0, 0}}, error_term{-1, 0}};
  se.normalize();
  ASSERT_EQ(se.elements.size(), 1u);
  EXPECT_EQ(se.elements[0].c, 4);
  EXPECT_TRUE(se.valid());
  SingularExpansion bad{1.0, {{1, 0.5, 0}}, error_term{1.0, 0}};
  EXPECT_FALSE(bad.valid());
}

// ---- simple varieties ----

TEST(SimpleVariety, BinaryTrees) {
  const Series y = Series::variable();
  auto a = simple_variety_asym((Series::one() + y) * (Series::one() + y));
  EXPECT_NEAR(a.rho, 0.25, 1e-12);
  EXPECT_EQ(a.period, 1u);
  // T_n = Cat_n, with y = z(1 + y)^2 counting internal nodes.
  const std::size_t n = 200;
  EXPECT_LT(rel(a.evaluate(n), to_float(Rational(catalan(n)))), 0.015);
  Float lead = mp::pow(Float(4), static_cast<unsigned long>(n)) * mp::pow(Float(n), Float(-1.5)) / mp::sqrt(boost::math::constants::pi<Float>());
  EXPECT_NEAR(a.leading_constant(), 1 / std::sqrt(pi), 1e-12);
  EXPECT_LT(rel(lead, to_float(Rational(catalan(n)))), 0.015);
  EXPECT_LT(rel(a.evaluate(n), lead), 0.015);
}

TEST(SimpleVariety, CayleyTrees) {
  Series phi = series::exp(Series::variable());
  auto sv = simple_variety_point(phi);
  EXPECT_NEAR(sv.tau, 1.0, 1e-10);
  EXPECT_NEAR(sv.rho, std::exp(-1.0), 1e-10);
  EXPECT_NEAR(std::sqrt(sv.phi_tau / (2 * pi * sv.phi2_tau)), 1 / std::sqrt(2 * pi), 1e-10);
  auto a = simple_variety_asym(phi);
  for (std::size_t n : {100u, 300u}) {
    // n! [z^n] T = n^{n-1}.
    Float exact = mp::pow(Float(n), static_cast<unsigned long>(n - 1)) / mp::tgamma(Float(n + 1));
    EXPECT_LT(rel(a.evaluate(n), exact), 2.0 / n);
  }
}

TEST(SimpleVariety, PeriodTwo) {
  const Series y = Series::variable();
  Series phi = Series::one() + y * y;
  auto a = simple_variety_asym(phi);
  EXPECT_EQ(a.period, 2u);
  EXPECT_EQ(a.residue, 1u);
  const Series z = Series::variable();
  Series T = series::solve_fixed_point<Rational>([&](const Series& s) { return z * (Series::one() + s * s); }, 1);
  for (std::size_t n = 0; n <= 40; n += 2) EXPECT_EQ(T.coefficient(n), 0);
  EXPECT_EQ(a.evaluate(200), 0);
  const std::size_t n = 201;
  EXPECT_LT(rel(a.evaluate(n), to_float(T.coefficient(n))), 0.02);
}

TEST(SimpleVariety, Rejections) {
  const Series y = Series::variable();
  EXPECT_THROW(simple_variety_asym(y + y * y), std::domain_error);
  EXPECT_THROW(simple_variety_asym(Series::one() + y), std::domain_error);
  EXPECT_THROW(simple_variety_asym(Series::one() - y * y), std::domain_error);
}

// ---- estimation ----

TEST(Estimate, CatalanWindow) {
  auto e = estimate_from_coefficients(catalan_series(), 200, 400);
  EXPECT_NEAR(e.rho_hat, 0.25, 1e-4);
  EXPECT_NEAR(e.alpha_hat - 1, -1.5, 0.05);
  EXPECT_FALSE(e.oscillation.fires);
  EXPECT_EQ(e.period, 1u);
}

TEST(Estimate, TwoThreeTreesOscillate) {
  const Series z = Series::variable();
  Series T = series::solve_fixed_point<Rational>(
      [&](const Series& s) { return z + series::substitute(s, z * z + z * z * z); }, 1);
  auto e = estimate_from_coefficients(T, 200, 400);
  EXPECT_TRUE(e.oscillation.fires);
  EXPECT_NEAR(e.rho_hat, (std::sqrt(5.0) - 1) / 2, 1e-3);
}

TEST(Estimate, AllOnes) {
  auto e = estimate_from_coefficients(Series::from_generator([](std::size_t) { return Rational(1); }, 0), 20, 60);
  EXPECT_NEAR(e.rho_hat, 1.0, 1e-9);
  EXPECT_NEAR(e.alpha_hat, 1.0, 1e-6);
}

TEST(Estimate, Errors) {
  Series ones = Series::from_generator([](std::size_t) { return Rational(1); }, 0);
  EXPECT_THROW(estimate_from_coefficients(ones, 10, 16), std::invalid_argument);
  Series gap = Series::from_generator([](std::size_t n) { return Rational(n == 30 ? 0 : 1); }, 0);
  EXPECT_THROW(estimate_from_coefficients(gap, 20, 40), std::domain_error);
  EXPECT_THROW(estimate_from_coefficients(Series::zero(), 20, 40), std::domain_error);
}

TEST(Estimate, PeriodDetected) {
  Series even = Series::from_generator([](std::size_t n) { return Rational(n % 2 == 0 ? static_cast<long>(n + 1) : 0); }, 0);
  auto e = estimate_from_coefficients(even, 40, 80);
  EXPECT_EQ(e.period, 2u);
  EXPECT_EQ(e.residue, 0u);
  EXPECT_NEAR(e.rho_hat, 1.0, 1e-5);
}

// ---- corpus-wide invariants ----

namespace {

struct corpus_gf {
  std::string name;
  Series f;
  double rho;                 // located structurally
  std::optional<Rational> exact_rho;
  std::size_t lo, hi;
};

std::vector<corpus_gf> corpus_gfs() {
  const Series z = Series::variable();
  std::vector<corpus_gf> out;
  {
    series::bivariate_polynomial<Rational> P;
    P.c = {{0, 1}, {-1}, {1}};
    out.push_back({"catalan", series::algebraic_fixed_point(P, Rational(0)), locate_singularity(algebraic_shape{P, Rational(0)}).rho,
                   make_rational(1, 4), 200, 400});
  }
  {
    Series f = series::scale(series::log_inv(z), make_rational(1, 2)) - series::scale(z, make_rational(1, 2)) -
               series::scale(z * z, make_rational(1, 4));
    out.push_back({"two_regular", series::exp(f), locate_singularity(exp_log_shape{f, Rational(1), make_rational(1, 2)}).rho,
                   Rational(1), 250, 500});
  }
  {
    Series f = series::scale(one_minus_z_pow(Rational(-2)) * (series::log_inv(z) - z), Rational(2));
    composite_shape c;
    c.parts.push_back(power_log_shape{Polynomial<Rational>{Rational(2)}, Rational(1), 2.0, 1});
    c.parts.push_back(power_log_shape{Polynomial<Rational>{Rational(0), Rational(-2)}, Rational(1), 2.0, 0});
    out.push_back({"quicksort", f, locate_singularity(c).rho, Rational(1), 1000, 2000});
  }
  {
    Series I = limitlaw::irreducible_series(2);
    out.push_back({"irreducibles", I, locate_singularity(log_inverse_shape{series::scale(z, Rational(2))}).rho,
                   make_rational(1, 2), 200, 400});
    out.push_back({"polynomials", series::polya_set(I),
                   locate_singularity(exp_log_shape{I, make_rational(1, 2), Rational(1), true}).rho, make_rational(1, 2), 100, 200});
  }
  {
    auto P = limitlaw::noncrossing_reduced(Rational(1));
    out.push_back({"noncrossing", series::algebraic_fixed_point(P, Rational(1)),
                   locate_singularity(algebraic_shape{P, Rational(1)}).rho, std::nullopt, 200, 400});
  }
  {
    Series T = series::solve_fixed_point<Rational>([&](const Series& s) { return z * series::exp(s); }, 1);
    out.push_back({"cayley", T, simple_variety_point(series::exp(z)).rho, std::nullopt, 150, 300});
  }
  return out;
}

}  // namespace

TEST(CorpusInvariants, LocateAgreesWithEstimate) {
  for (auto& g : corpus_gfs()) {
    auto e = estimate_from_coefficients(g.f, g.lo, g.hi);
    EXPECT_NEAR(e.rho_hat, g.rho, 1e-3) << g.name;
  }
}

TEST(CorpusInvariants, RescalingIdentityExact) {
  for (auto& g : corpus_gfs()) {
    if (!g.exact_rho) continue;
    const Rational rho = *g.exact_rho;
    ASSERT_NEAR(to_double(rho), g.rho, 1e-12) << g.name;
    Series scaled = series::scale_argument(g.f, rho);
    for (unsigned n = 0; n <= 50; ++n) {
      Rational rn = 1;
      for (unsigned k = 0; k < n; ++k) rn *= rho;
      EXPECT_EQ(g.f.coefficient(n), scaled.coefficient(n) / rn) << g.name << " n=" << n;
    }
  }
}

TEST(CorpusInvariants, CauchyMatchesClosedForms) {
  using C = std::complex<double>;
  struct closed {
    std::string name;
    Series f;
    std::function<C(C)> eval;
    double rho;
  };
  const Series z = Series::variable();
  std::vector<closed> cases;
  cases.push_back({"catalan", catalan_series(), [](C w) { return (1.0 - std::sqrt(1.0 - 4.0 * w)) / (2.0 * w); }, 0.25});
  cases.push_back({"two_regular", series::exp(series::scale(series::log_inv(z), make_rational(1, 2)) -
                                              series::scale(z, make_rational(1, 2)) - series::scale(z * z, make_rational(1, 4))),
                   [](C w) { return std::exp(-w / 2.0 - w * w / 4.0) / std::sqrt(1.0 - w); }, 1.0});
  cases.push_back({"quicksort", series::scale(one_minus_z_pow(Rational(-2)) * (series::log_inv(z) - z), Rational(2)),
                   [](C w) { return 2.0 * (std::log(1.0 / (1.0 - w)) - w) / ((1.0 - w) * (1.0 - w)); }, 1.0});
  cases.push_back({"polynomials", series::polya_set(limitlaw::irreducible_series(2)), [](C w) { return 1.0 / (1.0 - 2.0 * w); }, 0.5});
  for (auto& c : cases) {
    auto got = series::cauchy_extract(c.eval, c.rho / 2, 10);
    for (std::size_t n = 1; n < got.size(); ++n) {
      double want = to_double(c.f.coefficient(n));
      EXPECT_LT(std::fabs(got[n] - want), 1e-9 * std::max(1.0, std::fabs(want))) << c.name << " n=" << n;
    }
  }
}

TEST(AsymptoticFormJson, RoundTrip) {
  AsymptoticForm a;
  a.rho = 0.0857864376269049;
  a.elements = {{1.25, 0.0, 0}, {-0.3125, -0.5, 0}, {0.5, -1.0, 2}};
  a.error_order = error_term{-1.5, 1};
  a.period = 3;
  a.residue = 1;
  nlohmann::json j = a;
  auto b = j.get<AsymptoticForm>();
  EXPECT_EQ(b.rho, a.rho);
  EXPECT_EQ(b.elements, a.elements);
  EXPECT_EQ(b.error_order, a.error_order);
  EXPECT_EQ(b.period, 3u);
  EXPECT_EQ(b.residue, 1u);
  AsymptoticForm plain;
  plain.rho = 1;
  plain.elements = {{1, 1, 0}};
  nlohmann::json k = plain;
  EXPECT_FALSE(k.contains("period"));
  EXPECT_TRUE(k["error_order"].is_null());
  EXPECT_EQ(k.get<AsymptoticForm>().period, 1u);
}

TEST(AsymptoticFormEval, FiniteForAdmissibleAlpha) {
  AsymptoticForm a;
  a.rho = 0.3;
  a.elements = {{1, 2.5, 1}, {-1, 0.5, 0}, {1, -0.5, 0}};
  for (std::size_t n : {2u, 3u, 100u, 100000u}) EXPECT_TRUE(mp::isfinite(a.evaluate(n)));
  EXPECT_NEAR(a.leading_constant(), 1 / std::tgamma(2.5), 1e-15);
}
