#include "oracles.hpp"

#include "anacomb/series/ops.hpp"
#include "anacomb/specdsl/compile.hpp"
#include "anacomb/specdsl/parser.hpp"
#include "anacomb/workbench/analyze.hpp"
#include "anacomb/workbench/corpus.hpp"
#include "anacomb/workbench/report.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <sstream>

using namespace anacomb;
using namespace anacomb::workbench;
using series::Series;

namespace {

std::string emit(const ComparisonReport& r, report_format f) {
  std::ostringstream os;
  emit_report(r, f, os);
  return os.str();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

singular::AsymptoticForm constant_form(double c, double alpha) {
  singular::AsymptoticForm a;
  a.rho = 1;
  a.elements = {{c, alpha, 0}};
  return a;
}

Series geometric() { return Series::from_generator([](std::size_t) { return Rational(1); }, 0); }

}  // namespace

// ---- compare ----

TEST(Compare, GeometricHasZeroError) {
  auto r = compare(geometric(), constant_form(1, 1), {500, 2, 10, 77});
  ASSERT_EQ(r.rows.size(), 4u);
  for (std::size_t i = 1; i < r.rows.size(); ++i) EXPECT_LT(r.rows[i - 1].n, r.rows[i].n);
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.exact, 1);
    EXPECT_EQ(*row.rel_error, 0.0);
  }
}

TEST(Compare, InverseSqrtErrorIsOneEighthOverN) {
  Series f = series::power(Series::one() - Series::variable(), make_rational(-1, 2));
  auto r = compare(f, constant_form(1, 0.5), {100, 400, 1600});
  for (const auto& row : r.rows) EXPECT_NEAR(*row.rel_error * row.n, 0.125, 0.002) << row.n;
}

TEST(Compare, RejectsEmptyIndexList) { EXPECT_THROW(compare(geometric(), constant_form(1, 1), {}), std::invalid_argument); }

TEST(Compare, ZeroExactUsesAbsoluteError) {
  auto row = make_row(3, Float(0), Float(0.25));
  EXPECT_DOUBLE_EQ(*row.rel_error, 0.25);
  auto bare = make_row(3, Float(2), std::nullopt);
  EXPECT_FALSE(bare.rel_error.has_value());
}

TEST(Compare, ToleranceProfiles) {
  ComparisonReport r;
  r.rows = {make_row(1, Float(1), Float(1.5)), make_row(2, Float(1), Float(1.001))};
  auto last = r;
  apply_tolerance(last, {0.01, false, false});
  EXPECT_TRUE(last.pass);
  auto every = r;
  apply_tolerance(every, {0.01, false, true});
  EXPECT_FALSE(every.pass);
  finish_verdict(every);
  EXPECT_EQ(every.verdict, "tolerance violation");
  ASSERT_EQ(every.checks.size(), 1u);
  EXPECT_EQ(every.checks[0].rfind("FAILED: ", 0), 0u);
}

// ---- emit_report ----

namespace {

ComparisonReport sample_report() {
  auto r = compare(geometric(), constant_form(2, 1), {10, 20, 30});
  r.name = "sample";
  apply_tolerance(r, {0.01, false, false});
  finish_verdict(r);
  return r;
}

}  // namespace

TEST(Emit, CsvHeader) {
  auto ls = lines(emit(sample_report(), report_format::csv));
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[0], "n,exact,predicted,rel_error");
  EXPECT_EQ(ls[1], "10,1.0000000000000000e+00,2.0000000000000000e+00,1.0000000000000000e+00");
}

TEST(Emit, JsonFields) {
  auto j = nlohmann::json::parse(emit(sample_report(), report_format::json));
  for (const char* k : {"name", "verdict", "pass", "rows", "checks", "assumptions", "estimate"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["name"], "sample");
  EXPECT_FALSE(j["pass"].get<bool>());
  EXPECT_EQ(j["rows"].size(), 3u);
  EXPECT_EQ(j["rows"][0]["n"], 10);
  EXPECT_EQ(j["rows"][0]["exact"], "1.0000000000000000e+00");
  EXPECT_TRUE(j["estimate"].is_null());
}

TEST(Emit, MarkdownRowCount) {
  for (std::vector<std::size_t> ns : {std::vector<std::size_t>{5}, {5, 6, 7, 8, 9}}) {
    auto r = compare(geometric(), constant_form(1, 1), ns);
    std::size_t rows = 0;
    for (const auto& l : lines(emit(r, report_format::markdown)))
      if (l.rfind("| ", 0) == 0 && l.rfind("| n ", 0) != 0) ++rows;
    EXPECT_EQ(rows, ns.size());
  }
}

TEST(Emit, Formats) {
  EXPECT_EQ(parse_format("csv"), report_format::csv);
  EXPECT_EQ(parse_format("md"), report_format::markdown);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

// ---- corpus ----

TEST(Corpus, NamesAreTheDocumentedSet) {
  std::set<std::string> names;
  for (const auto& e : corpus()) names.insert(e.name);
  const std::set<std::string> want{"catalan", "two_regular", "two_three_trees", "diversity_index", "entropy", "quicksort",
                                   "pattern", "fq_factors", "noncrossing", "height_theta", "polylog_entropy", "simple_variety"};
  EXPECT_EQ(names, want);
  EXPECT_THROW(run_example("no_such_entry"), std::invalid_argument);
}

TEST(Corpus, TwoRegularAtTwoHundred) {
  auto r = run_example("two_regular", {std::nullopt, {200}, std::nullopt});
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_LT(*r.rows[0].rel_error, 0.02);
  EXPECT_TRUE(r.pass) << r.verdict;
}

TEST(Corpus, CatalanAtFiveHundred) {
  auto r = run_example("catalan", {std::nullopt, {500}, std::nullopt});
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_LT(*r.rows[0].rel_error, 0.01);
  EXPECT_TRUE(r.pass) << r.verdict;
}

TEST(Corpus, TwoThreeTreesVerdict) {
  auto r = run_example("two_three_trees");
  EXPECT_EQ(r.verdict, "oscillation detected; no point asymptotics claimed");
  ASSERT_TRUE(r.estimate.has_value());
  EXPECT_TRUE(r.estimate->oscillation);
  for (const auto& row : r.rows) EXPECT_FALSE(row.predicted.has_value());
}

TEST(Corpus, DiversityIsTrendOnly) {
  auto r = run_example("diversity_index");
  ASSERT_TRUE(r.estimate.has_value());
  EXPECT_NEAR(r.estimate->rho_hat, 0.25, 1e-3);
  EXPECT_FALSE(r.assumptions.empty());
}

TEST(Corpus, DiversityNumeratorsMatchEnumeration) {
  auto K = corpus_detail::diversity_index_coefficients(9);
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(K[n], oracle::diversity_total(n)) << n;
}

TEST(Corpus, OrderOverrideRaisedToLargestIndex) {
  auto r = run_example("catalan", {std::size_t{50}, {60, 80}, std::nullopt});
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[1].n, 80u);
  EXPECT_EQ(r.rows[1].exact, to_float(Rational(binomial(160, 80) / Integer(81))));
}

TEST(Corpus, ToleranceOverrideReportsViolation) {
  auto r = run_example("catalan", {std::nullopt, {100}, 1e-9});
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.verdict, "tolerance violation");
}

class CorpusEntry : public ::testing::TestWithParam<std::string> {};

// Desk-scale budget and byte-identical reruns at default options.
TEST_P(CorpusEntry, BudgetAndGoldenStability) {
  const auto t0 = std::chrono::steady_clock::now();
  auto first = run_example(GetParam());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_LE(secs, 60.0);
  auto second = run_example(GetParam());
  EXPECT_EQ(emit(first, report_format::csv), emit(second, report_format::csv));
  EXPECT_EQ(emit(first, report_format::json), emit(second, report_format::json));
  EXPECT_FALSE(first.rows.empty());
  EXPECT_FALSE(first.verdict.empty());
  for (std::size_t i = 1; i < first.rows.size(); ++i) EXPECT_LT(first.rows[i - 1].n, first.rows[i].n);
}

INSTANTIATE_TEST_SUITE_P(All, CorpusEntry, ::testing::ValuesIn([] {
                           std::vector<std::string> v;
                           for (const auto& e : corpus()) v.push_back(e.name);
                           return v;
                         }()),
                         [](const auto& info) { return info.param; });

TEST(Corpus, FullRunCoversEveryOperation) {
  auto reports = run_all();
  EXPECT_EQ(reports.size(), corpus().size());
  const auto used = coverage_log::instance().used();
  for (const char* op :
       {"parse_spec", "validate_wellfounded", "compile_to_series", "coefficient", "combine", "quasi_inverse", "exp_log",
        "polya_set", "substitute", "calculus", "polylog", "linear_operator_solve", "solve_fixed_point", "cauchy_extract",
        "bivariate_distribution", "scale_asymptotic", "transfer", "locate_singularity", "singular_expansion",
        "simple_variety_asym", "estimate_from_coefficients", "build_pattern_model", "perron_analysis", "factor_count_model",
        "gaussian_convergence_check", "height_distribution", "theta_density", "run_example", "compare"})
    EXPECT_TRUE(used.count(op)) << op;
}

// ---- analysis of specification files ----

TEST(Analyze, PolynomialEquationForBinaryTrees) {
  auto s = specdsl::parse_spec("unlabelled\nT = EPS + Z*T*T\n");
  auto P = polynomial_equation(s, "T");
  ASSERT_TRUE(P.has_value());
  Series T = specdsl::compile_to_series(s, "T", 40);
  auto res = series::algebraic_residual(*P, T.prefix(40), 40);
  for (const auto& c : res) EXPECT_EQ(c, 0);
}

TEST(Analyze, NonPolynomialFallsBackToEstimate) {
  auto s = specdsl::parse_spec("unlabelled\nC = SEQ(SEQ(>=1, Z))\n");
  EXPECT_FALSE(polynomial_equation(s, "C").has_value());
  Series C = specdsl::compile_to_series(s, "C", 200);
  auto d = derive_form(C, s, "C", 200);
  EXPECT_EQ(d.method, "estimated");
  EXPECT_NEAR(d.form.rho, 0.5, 1e-6);
  // C_n = 2^{n-1} for n >= 1.
  EXPECT_NEAR(static_cast<double>(d.form.evaluate(150) / to_float(C.coefficient(150))), 1.0, 1e-3);
}

TEST(Analyze, MotzkinIsLocated) {
  auto s = specdsl::parse_spec("unlabelled\nM = Z + Z*M + Z*M^2\n");
  Series M = specdsl::compile_to_series(s, "M", 400);
  auto d = derive_form(M, s, "M", 400);
  EXPECT_EQ(d.method, "located");
  EXPECT_NEAR(d.form.rho, 1.0 / 3, 1e-12);
  EXPECT_LT(std::fabs(static_cast<double>(d.form.evaluate(400) / to_float(M.coefficient(400))) - 1), 0.01);
}
