#pragma once

// Comparison of exact coefficients with predictions, and report emission.
// Numbers are printed with 17 significant digits in scientific notation, so
// output is byte-stable for fixed input.

#include "anacomb/singular/estimate.hpp"
#include "anacomb/singular/scale.hpp"

#include <nlohmann/json.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace anacomb::workbench {

struct ComparisonRow {
  std::size_t n = 0;
  Float exact{0};
  std::optional<Float> predicted;
  std::optional<double> rel_error;
};

/// `limit` bounds the relative error (or the absolute error when `absolute`)
/// on the last row, or on every row when `all_rows`.
struct tolerance_profile {
  double limit = 0.01;
  bool absolute = false;
  bool all_rows = false;
};

struct estimate_summary {
  double rho_hat = 0;
  double alpha_hat = 0;
  bool oscillation = false;
  std::size_t period = 1;
  bool log_linear_fallback = false;
};

struct ComparisonReport {
  std::string name;
  std::vector<ComparisonRow> rows;
  bool pass = true;
  std::string verdict;
  std::vector<std::string> checks;       // one line per auxiliary check
  std::vector<std::string> assumptions;  // declared, not verified
  std::optional<estimate_summary> estimate;

  void check(bool ok, const std::string& what) {
    checks.push_back(std::string(ok ? "ok: " : "FAILED: ") + what);
    if (!ok) pass = false;
  }
};

inline std::optional<double> relative_error(const Float& exact, const Float& predicted) {
  if (exact != 0) return static_cast<double>(mp::abs((predicted - exact) / exact));
  return static_cast<double>(mp::abs(predicted - exact));
}

/// Rows sorted by n with exact = f_n and predicted = a(n).
inline ComparisonReport compare(const series::Series& f, const singular::AsymptoticForm& a, std::vector<std::size_t> ns) {
  if (ns.empty()) throw std::invalid_argument("compare needs at least one index");
  std::sort(ns.begin(), ns.end());
  ComparisonReport r;
  for (std::size_t n : ns) {
    ComparisonRow row;
    row.n = n;
    row.exact = to_float(f.coefficient(n));
    row.predicted = a.evaluate(n);
    row.rel_error = relative_error(row.exact, *row.predicted);
    r.rows.push_back(std::move(row));
  }
  return r;
}

inline ComparisonRow make_row(std::size_t n, const Float& exact, std::optional<Float> predicted) {
  ComparisonRow row;
  row.n = n;
  row.exact = exact;
  row.predicted = std::move(predicted);
  if (row.predicted) row.rel_error = relative_error(exact, *row.predicted);
  return row;
}

/// Applies the tolerance profile to the rows and records the outcome.
inline void apply_tolerance(ComparisonReport& r, const tolerance_profile& t) {
  bool ok = true;
  double worst = 0;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (!t.all_rows && i + 1 != r.rows.size()) continue;
    const auto& row = r.rows[i];
    if (!row.predicted) continue;
    double e = t.absolute ? static_cast<double>(mp::abs(*row.predicted - row.exact)) : row.rel_error.value_or(0);
    worst = std::max(worst, e);
    if (!(e <= t.limit)) ok = false;
  }
  std::ostringstream os;
  os << (t.absolute ? "absolute" : "relative") << " error " << std::setprecision(3) << worst << " <= " << t.limit
     << (t.all_rows ? " on all rows" : " at the largest n");
  r.check(ok, os.str());
}

inline void finish_verdict(ComparisonReport& r, const std::string& pass_text = "pass") {
  if (r.verdict.empty()) r.verdict = r.pass ? pass_text : "tolerance violation";
}

namespace detail {

inline std::string sci(const Float& x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(16) << x;
  return os.str();
}

inline std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(16) << x;
  return os.str();
}

}  // namespace detail

enum class report_format { csv, json, markdown };

inline report_format parse_format(const std::string& s) {
  if (s == "csv") return report_format::csv;
  if (s == "json") return report_format::json;
  if (s == "markdown" || s == "md") return report_format::markdown;
  throw std::invalid_argument("unknown format '" + s + "' (csv, json, markdown)");
}

inline nlohmann::json report_json(const ComparisonReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["verdict"] = r.verdict;
  j["pass"] = r.pass;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json jr;
    jr["n"] = row.n;
    jr["exact"] = detail::sci(row.exact);
    jr["predicted"] = row.predicted ? nlohmann::json(detail::sci(*row.predicted)) : nlohmann::json(nullptr);
    jr["rel_error"] = row.rel_error ? nlohmann::json(detail::sci(*row.rel_error)) : nlohmann::json(nullptr);
    j["rows"].push_back(jr);
  }
  j["checks"] = r.checks;
  j["assumptions"] = r.assumptions;
  if (r.estimate) {
    j["estimate"] = {{"rho_hat", r.estimate->rho_hat},
                     {"alpha_hat", r.estimate->alpha_hat},
                     {"oscillation", r.estimate->oscillation},
                     {"period", r.estimate->period},
                     {"log_linear_fallback", r.estimate->log_linear_fallback}};
  } else {
    j["estimate"] = nullptr;
  }
  return j;
}

/// Writes the report; the CSV form carries only the rows.
inline void emit_report(const ComparisonReport& r, report_format f, std::ostream& os) {
  switch (f) {
    case report_format::csv:
      os << "n,exact,predicted,rel_error\n";
      for (const auto& row : r.rows)
        os << row.n << ',' << detail::sci(row.exact) << ',' << (row.predicted ? detail::sci(*row.predicted) : "") << ','
           << (row.rel_error ? detail::sci(*row.rel_error) : "") << '\n';
      return;
    case report_format::json: os << report_json(r).dump(2) << '\n'; return;
    case report_format::markdown:
      os << "## " << r.name << "\n\n";
      os << "| n | exact | predicted | rel_error |\n|---|---|---|---|\n";
      for (const auto& row : r.rows)
        os << "| " << row.n << " | " << detail::sci(row.exact) << " | " << (row.predicted ? detail::sci(*row.predicted) : "n/a")
           << " | " << (row.rel_error ? detail::sci(*row.rel_error) : "n/a") << " |\n";
      os << "\n**verdict:** " << r.verdict << "\n";
      for (const auto& c : r.checks) os << "\n- " << c;
      if (!r.checks.empty()) os << '\n';
      return;
  }
}

inline estimate_summary summarize(const singular::coefficient_estimate& e) {
  return {e.rho_hat, e.alpha_hat, e.oscillation.fires, e.period, e.log_linear_fallback};
}

}  // namespace anacomb::workbench
