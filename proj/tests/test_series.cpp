#include "anacomb/series/distribution.hpp"
#include "anacomb/series/io.hpp"
#include "anacomb/series/numeric_series.hpp"
#include "anacomb/series/solvers.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace anacomb;
using namespace anacomb::series;

namespace {

const Series z = Series::variable();
const Series one = Series::one();
constexpr std::size_t N = 24;

// Random rational series: lazily generated, reproducible per seed.
Series random_series(std::uint32_t seed, bool zero_constant = false, std::size_t valuation = 0) {
  return Series::from_generator(
      [seed, zero_constant, valuation](std::size_t n) {
        if (n < valuation || (zero_constant && n == 0)) return Rational(0);
        std::mt19937 g(seed * 7919u + static_cast<std::uint32_t>(n));
        const long p = std::uniform_int_distribution<long>(-6, 6)(g);
        const long q = std::uniform_int_distribution<long>(1, 5)(g);
        return make_rational(p, q);
      },
      zero_constant ? std::max<std::size_t>(valuation, 1) : valuation);
}

}  // namespace

TEST(Coefficient, Examples) {
  auto f = power(one - z, make_rational(-1, 2));
  EXPECT_EQ(coefficient(f, 4), make_rational(35, 128));
  EXPECT_EQ(coefficient(f, 4), Rational(binomial(8, 4)) / Rational(256));
  EXPECT_EQ(coefficient(quasi_inverse(z), 10), 1);
  auto cat = solve_fixed_point<Rational>([](const Series& y) { return one + z * y * y; }, 0);
  EXPECT_EQ(coefficient(cat, 5), 42);
}

TEST(Coefficient, MemoizationIsStable) {
  auto f = exp(random_series(3, true));
  std::vector<Rational> first = f.prefix(10);
  f.ensure(60);
  for (std::size_t n = 0; n < 10; ++n) EXPECT_EQ(f.coefficient(n), first[n]);
  const Rational& a = f.ref(7);
  const Rational& b = f.ref(7);
  EXPECT_EQ(&a, &b);
  auto v = f.valuation(60);
  ASSERT_TRUE(v.has_value());
  for (std::size_t n = 0; n < *v; ++n) EXPECT_EQ(f.coefficient(n), 0);
  EXPECT_LE(f.valuation_bound(), *v);
}

TEST(Combine, Examples) {
  auto g = random_series(11);
  EXPECT_TRUE(agree_to_order(combine(combine_op::hadamard, quasi_inverse(z), g), g, N));
  auto sq = combine(combine_op::mul, quasi_inverse(z), quasi_inverse(z));
  for (std::size_t n = 0; n < N; ++n) EXPECT_EQ(sq.coefficient(n), Rational(static_cast<long>(n + 1)));
  auto h = power(one - z, make_rational(-1, 2));
  EXPECT_EQ(combine(combine_op::hadamard, h, h).coefficient(2), make_rational(9, 64));
  auto s = combine(combine_op::add, h, g);
  for (std::size_t n = 0; n < N; ++n) EXPECT_EQ(s.coefficient(n), h.coefficient(n) + g.coefficient(n));
}

TEST(QuasiInverse, Examples) {
  auto a = quasi_inverse(z), b = quasi_inverse(scale(z, Rational(2))), c = quasi_inverse(z + z * z);
  Rational f0(1), f1(1);
  for (std::size_t n = 0; n < N; ++n) {
    EXPECT_EQ(a.coefficient(n), 1);
    EXPECT_EQ(b.coefficient(n), Rational(ipow(Integer(2), static_cast<unsigned>(n))));
    EXPECT_EQ(c.coefficient(n), f0);
    Rational next = f0 + f1;
    f0 = f1;
    f1 = next;
  }
  EXPECT_THROW(quasi_inverse(one + z).ensure(3), series_domain_error);
}

TEST(ExpLog, Examples) {
  auto e = exp_log(z, exp_log_kind::exp);
  auto l = exp_log(z, exp_log_kind::log_inv);
  for (unsigned n = 0; n < N; ++n) {
    EXPECT_EQ(e.coefficient(n), Rational(1) / Rational(factorial(n)));
    if (n > 0) EXPECT_EQ(l.coefficient(n), make_rational(1, n));
  }
  auto g = exp(scale(log_inv(z), make_rational(1, 2)) - scale(z, make_rational(1, 2)) - scale(z * z, make_rational(1, 4)));
  EXPECT_EQ(g.coefficient(6), make_rational(70, 720));
  EXPECT_THROW(exp(one + z).ensure(2), series_domain_error);
  EXPECT_THROW(log_inv(one + z).ensure(2), series_domain_error);
}

TEST(Polya, Examples) {
  auto s = polya_set(z, N);
  auto c = polya_cycle(z, N);
  for (std::size_t n = 0; n < N; ++n) {
    EXPECT_EQ(s.coefficient(n), 1);
    if (n > 0) EXPECT_EQ(c.coefficient(n), 1);
  }
  auto counts = oracle::gf2_irreducible_counts(12);
  std::vector<Rational> I(counts.begin(), counts.end());
  auto P = polya_set(Series::from_coefficients(I), 12);
  EXPECT_EQ(P.coefficient(4), 16);
  for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(P.coefficient(n), Rational(ipow(Integer(2), static_cast<unsigned>(n))));
  EXPECT_THROW(polya_set(one + z, 4).ensure(3), series_domain_error);
}

TEST(Substitute, Examples) {
  auto f = random_series(5);
  EXPECT_TRUE(agree_to_order(substitute(f, z), f, N));
  EXPECT_TRUE(agree_to_order(substitute(quasi_inverse(z), z + z * z), quasi_inverse(z + z * z), N));
  auto half = scale(z, make_rational(1, 2));
  EXPECT_TRUE(agree_to_order(exp(log_inv(half)), quasi_inverse(half), N));
  EXPECT_THROW(substitute(f, one + z).ensure(3), series_domain_error);
}

TEST(Calculus, Examples) {
  auto d = calculus(quasi_inverse(z), calculus_kind::differentiate);
  for (std::size_t n = 0; n < N; ++n) EXPECT_EQ(d.coefficient(n), Rational(static_cast<long>(n + 1)));
  EXPECT_TRUE(agree_to_order(calculus(quasi_inverse(z), calculus_kind::integrate), log_inv(z), N));
  auto f = random_series(8);
  EXPECT_TRUE(agree_to_order(differentiate(integrate(f)), f, N));
}

TEST(Polylog, Examples) {
  auto li01 = polylog(Float(0), 1, 30);
  EXPECT_LT(mp::abs(li01.coefficient(2) - mp::log(Float(2))), Float(1e-45));
  auto li10 = polylog(Float(1), 0, 30);
  for (unsigned n = 1; n < 30; ++n) EXPECT_LT(mp::abs(li10.coefficient(n) - Float(1) / n), Float(1e-45));
  auto lf = to_float_series(quasi_inverse(z)) * li01;
  EXPECT_LT(mp::abs(lf.coefficient(4) - mp::log(Float(24))), Float(1e-45));
}

TEST(LinearOperator, Examples) {
  auto t = random_series(21);
  EXPECT_TRUE(agree_to_order(linear_operator_solve(t, linear_operator()), t, N));

  linear_operator bst({linear_step::multiply({Rational(1)}, {Rational(1), Rational(-1)}), linear_step::integral(), linear_step::times(Rational(2))});
  auto toll = Series::from_generator([](std::size_t n) { return Rational(n > 0 ? static_cast<long>(n) - 1 : 0); }, 2);
  auto f = linear_operator_solve(toll, bst);
  EXPECT_EQ(f.coefficient(2), 1);
  EXPECT_EQ(f.coefficient(3), make_rational(8, 3));
  // Direct recurrence f_n = t_n + (2/n) sum_{k<n} f_k.
  auto check = [&](const Series& sol, auto tn) {
    Rational acc(0);
    for (std::size_t n = 0; n < 60; ++n) {
      Rational expect = tn(n) + (n > 0 ? Rational(2) * acc / Rational(static_cast<long>(n)) : Rational(0));
      EXPECT_EQ(sol.coefficient(n), expect) << n;
      acc += expect;
    }
  };
  check(f, [](std::size_t n) { return Rational(n > 0 ? static_cast<long>(n) - 1 : 0); });
  check(linear_operator_solve(z, bst), [](std::size_t n) { return Rational(n == 1 ? 1 : 0); });

  linear_operator bad({linear_step::multiply({Rational(1)}, {Rational(1), Rational(-1)})});
  EXPECT_THROW(linear_operator_solve(toll, bad), series_domain_error);
}

TEST(LinearOperator, ResidualVanishes) {
  linear_operator L({linear_step::argument(make_rational(1, 2)), linear_step::multiply({Rational(0), Rational(1)}, {Rational(1)})});
  L.terms.push_back({linear_step::integral(), linear_step::times(make_rational(3, 2))});
  for (std::uint32_t seed = 0; seed < 6; ++seed) {
    auto t = random_series(100 + seed);
    auto f = linear_operator_solve(t, L);
    EXPECT_TRUE(agree_to_order(f, t + L.apply(f), 40));
  }
}

TEST(FixedPoint, Examples) {
  auto y = solve_fixed_point<Rational>([](const Series& s) { return z + s * s; }, 1);
  EXPECT_EQ(y.coefficient(4), 5);
  auto T = solve_fixed_point<Rational>([](const Series& s) { return z + substitute(s, z * z + z * z * z); }, 1);
  EXPECT_EQ(T.coefficient(5), 2);
}

TEST(FixedPoint, NonContractionIsReported) {
  EXPECT_THROW(iterate_fixed_point<Rational>([](const Series& s) { return s + z; }, 5), non_contraction_error);
  auto bad = solve_fixed_point<Rational>([](const Series& s) { return s + z; }, 0);
  EXPECT_THROW(bad.ensure(3), series_domain_error);
}

TEST(CauchyExtract, Examples) {
  auto c = cauchy_extract([](std::complex<double> w) { return 1.0 / (1.0 - w); }, 0.5, 16);
  for (double v : c) EXPECT_NEAR(v, 1.0, 1e-10);
  auto g = cauchy_extract([](std::complex<double> w) { return std::exp(-w / 2.0 - w * w / 4.0) / std::sqrt(1.0 - w); }, 0.5, 10);
  EXPECT_NEAR(g[6], 70.0 / 720, 1e-9);
}

TEST(Distribution, Examples) {
  auto F = BiSeries::from_generator([](std::size_t n) {
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    return Polynomial<Rational>(c);
  });
  auto d = bivariate_distribution(F, 3);
  EXPECT_EQ(d.probability(3), 1);
  EXPECT_EQ(d.mean(), 3);
  EXPECT_EQ(d.variance(), 0);
  auto zero = BiSeries::from_generator([](std::size_t) { return Polynomial<Rational>(); });
  EXPECT_THROW(bivariate_distribution(zero, 2), std::exception);
}

TEST(Io, CsvRoundTrip) {
  auto f = random_series(42);
  std::stringstream ss;
  export_csv(f, 30, ss);
  EXPECT_EQ(ss.str().substr(0, ss.str().find('\n')), "n,numerator,denominator");
  auto g = import_csv_series(ss);
  EXPECT_TRUE(agree_to_order(f, g, 30));
}

// Property suites: exact rational identities on random series, zero tolerance.

class SeriesLaws : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(SeriesLaws, RingAxioms) {
  const std::uint32_t s = GetParam();
  auto f = random_series(s), g = random_series(s + 1000), h = random_series(s + 2000);
  EXPECT_TRUE(agree_to_order(f + g, g + f, N));
  EXPECT_TRUE(agree_to_order((f + g) + h, f + (g + h), N));
  EXPECT_TRUE(agree_to_order(f * g, g * f, N));
  EXPECT_TRUE(agree_to_order((f * g) * h, f * (g * h), N));
  EXPECT_TRUE(agree_to_order(f * (g + h), f * g + f * h, N));
  EXPECT_TRUE(agree_to_order(hadamard(f, g), hadamard(g, f), N));
  EXPECT_TRUE(agree_to_order(f - f, Series::zero(), N));
}

TEST_P(SeriesLaws, QuasiInverseIdentity) {
  auto f = random_series(GetParam(), true);
  EXPECT_TRUE(agree_to_order(quasi_inverse(f) * (one - f), one, N));
}

TEST_P(SeriesLaws, ExpLogIdentities) {
  auto f = random_series(GetParam(), true);
  // log 1/(1 - (1 - e^{-f})) = f and e^{log 1/(1-f)} = 1/(1-f).
  EXPECT_TRUE(agree_to_order(log_inv(one - exp(-f)), f, N));
  EXPECT_TRUE(agree_to_order(exp(log_inv(f)), quasi_inverse(f), N));
  EXPECT_TRUE(agree_to_order(exp(f) * exp(-f), one, N));
}

TEST_P(SeriesLaws, PolyaSetWithoutSubstitutedTermsIsExp) {
  auto f = random_series(GetParam(), true);
  Series higher = Series::zero();
  for (std::size_t k = 2; k < N; ++k) higher = higher + scale(dilate(f, k), make_rational(1, static_cast<long long>(k)));
  // log polya_set(f) = sum_k f(z^k)/k.
  auto logP = -log_inv(one - polya_set(f, N));
  EXPECT_TRUE(agree_to_order(logP - higher, f, N));
  EXPECT_TRUE(agree_to_order(exp(logP - higher), exp(f), N));
}

TEST_P(SeriesLaws, NewtonMatchesPlainIteration) {
  std::mt19937 g(GetParam());
  std::uniform_int_distribution<long> d(-3, 3);
  // P(z, y) = -y + b(z) + z sum_j a_j(z) y^j with b(0) = 0, so y0 = 0 is simple.
  bivariate_polynomial<Rational> P;
  const std::size_t deg = 2 + GetParam() % 3;
  P.c.assign(deg + 1, {});
  P.c[0] = {Rational(0), Rational(d(g)), Rational(d(g))};
  P.c[1] = {Rational(-1), Rational(d(g)), Rational(d(g))};
  for (std::size_t j = 2; j <= deg; ++j) P.c[j] = {Rational(0), Rational(d(g)), Rational(d(g))};
  auto phi = [&](const Series& y) {
    Series rhs = Series::zero();
    Series yp = one;
    for (std::size_t j = 0; j <= deg; ++j) {
      auto row = P.c[j];
      if (j == 1) row[0] = 0;
      rhs = rhs + Series::from_coefficients(row) * yp;
      yp = yp * y;
    }
    return rhs;
  };
  auto plain = iterate_fixed_point<Rational>(phi, N);
  auto newton = newton_algebraic(P, Rational(0), N);
  EXPECT_EQ(plain, newton);
  auto lazy = algebraic_fixed_point(P, Rational(0));
  EXPECT_EQ(lazy.prefix(N), plain);
  for (const auto& r : algebraic_residual(P, newton, N)) EXPECT_EQ(r, 0);
}

TEST_P(SeriesLaws, FixedPointResidualVanishes) {
  auto a = random_series(GetParam(), false);
  auto phi = [&](const Series& y) { return z * (a + y * y + substitute(y, z * z)); };
  auto y = solve_fixed_point<Rational>(phi, 1);
  EXPECT_TRUE(agree_to_order(phi(y), y, N));
}

TEST_P(SeriesLaws, CalculusInverse) {
  auto f = random_series(GetParam());
  EXPECT_TRUE(agree_to_order(differentiate(integrate(f)), f, N));
  auto g = random_series(GetParam(), true);
  EXPECT_TRUE(agree_to_order(integrate(differentiate(g)), g, N));
  // Leibniz rule.
  auto h = random_series(GetParam() + 5);
  EXPECT_TRUE(agree_to_order(differentiate(f * h), differentiate(f) * h + f * differentiate(h), N));
}

TEST_P(SeriesLaws, DistributionNormalization) {
  std::mt19937 g(GetParam());
  std::uniform_int_distribution<long> d(0, 9);
  std::vector<Polynomial<Rational>> coeffs;
  for (std::size_t n = 0; n < 12; ++n) {
    std::vector<Rational> c(n + 1);
    for (auto& x : c) x = Rational(d(g));
    c[n] += 1;
    coeffs.emplace_back(c);
  }
  auto F = BiSeries::from_coefficients(coeffs);
  for (std::size_t n = 0; n < 12; ++n) {
    auto t = bivariate_distribution(F, n);
    EXPECT_EQ(t.total(), 1);
    Rational m(0);
    for (const auto& [v, p] : t.probabilities()) {
      EXPECT_GE(p, 0);
      m += p * v;
    }
    EXPECT_EQ(m, t.mean());
  }
}

INSTANTIATE_TEST_SUITE_P(Random, SeriesLaws, ::testing::Range<std::uint32_t>(1, 13));
