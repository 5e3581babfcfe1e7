#include "anacomb/series/io.hpp"
#include "anacomb/workbench/analyze.hpp"
#include "anacomb/workbench/corpus.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace anacomb;
using workbench::report_format;

constexpr int exit_pass = 0;
constexpr int exit_error = 1;
constexpr int exit_violation = 2;

struct common_flags {
  std::size_t order = 0;
  std::vector<std::size_t> ns;
  std::string format = "csv";
  std::string out;
  std::optional<double> tolerance;
};

void add_common(CLI::App* c, common_flags& f, bool with_n = true) {
  c->add_option("--order", f.order, "truncation order");
  if (with_n) c->add_option("--n", f.ns, "comma-separated indices")->delimiter(',');
  c->add_option("--format", f.format, "csv, json or markdown")->check(CLI::IsMember({"csv", "json", "markdown", "md"}));
  c->add_option("--out", f.out, "output file (default stdout)");
  c->add_option("--tolerance", f.tolerance, "override the relative tolerance");
}

/// Runs `body` on the requested destination.
template <class Fn>
void with_output(const std::string& path, Fn body) {
  if (path.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  body(os);
  if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

struct loaded_class {
  specdsl::SpecSystem spec;
  std::string cls;
  series::Series f;
};

loaded_class load(const std::string& file, std::string cls, std::size_t order) {
  auto spec = specdsl::parse_spec(read_file(file));
  auto rep = specdsl::validate_wellfounded(spec);
  if (!rep.accepted) throw std::runtime_error("specification is not well founded");
  if (cls.empty()) cls = spec.definitions.at(0).name;
  auto f = specdsl::compile_to_series(spec, cls, order);
  return {std::move(spec), cls, f};
}

std::string rational_text(const Rational& q) {
  std::ostringstream os;
  os << numerator_of(q);
  if (denominator_of(q) != 1) os << '/' << denominator_of(q);
  return os.str();
}

int cmd_coeffs(const std::string& file, const std::string& cls, const common_flags& f) {
  const std::size_t order = f.order ? f.order : 20;
  auto L = load(file, cls, order);
  const auto fmt = workbench::parse_format(f.format);
  with_output(f.out, [&](std::ostream& os) {
    if (fmt == report_format::csv) {
      series::export_csv(L.f, order + 1, os);
    } else if (fmt == report_format::json) {
      nlohmann::json j{{"class", L.cls}, {"labelled", L.spec.labelled}, {"coefficients", nlohmann::json::array()}};
      for (std::size_t n = 0; n <= order; ++n) j["coefficients"].push_back(rational_text(L.f.coefficient(n)));
      os << j.dump(2) << '\n';
    } else {
      os << "| n | coefficient |\n|---|---|\n";
      for (std::size_t n = 0; n <= order; ++n) os << "| " << n << " | " << rational_text(L.f.coefficient(n)) << " |\n";
    }
  });
  return exit_pass;
}

int cmd_asym(const std::string& file, const std::string& cls, const common_flags& f) {
  const std::size_t order = f.order ? f.order : 400;
  auto L = load(file, cls, order);
  auto d = workbench::derive_form(L.f, L.spec, L.cls, order);
  with_output(f.out, [&](std::ostream& os) {
    nlohmann::json j = d.form;
    j["method"] = d.method;
    os << j.dump(2) << '\n';
  });
  return exit_pass;
}

int cmd_compare(const std::string& file, const std::string& cls, const std::string& form_file, const common_flags& f) {
  std::vector<std::size_t> ns = f.ns;
  if (ns.empty()) ns = {100, 200, 400};
  std::sort(ns.begin(), ns.end());
  const std::size_t order = std::max(f.order ? f.order : 400, ns.back());
  auto L = load(file, cls, order);
  singular::AsymptoticForm a;
  std::string method = "supplied";
  if (!form_file.empty()) {
    a = nlohmann::json::parse(read_file(form_file)).get<singular::AsymptoticForm>();
  } else {
    auto d = workbench::derive_form(L.f, L.spec, L.cls, order);
    a = d.form;
    method = d.method;
  }
  auto r = workbench::compare(L.f, a, ns);
  r.name = L.cls;
  r.assumptions.push_back("form " + method);
  workbench::apply_tolerance(r, {f.tolerance.value_or(0.01), false, false});
  workbench::finish_verdict(r);
  with_output(f.out, [&](std::ostream& os) { workbench::emit_report(r, workbench::parse_format(f.format), os); });
  return r.pass ? exit_pass : exit_violation;
}

/// Uniform probabilities over the letters of the word, at least two letters.
limitlaw::alphabet_t uniform_alphabet(const std::string& w) {
  if (w.empty()) throw std::invalid_argument("empty pattern");
  limitlaw::alphabet_t ab;
  for (char c : w) ab[c] = Rational(0);
  if (ab.size() < 2) ab[w.front() == 'a' ? 'b' : 'a'] = Rational(0);
  for (auto& [c, p] : ab) p = make_rational(1, static_cast<long long>(ab.size()));
  return ab;
}

std::vector<series::DistributionTable> model_tables(const std::string& model, const std::vector<std::size_t>& ns) {
  std::vector<series::DistributionTable> out;
  if (model.rfind("pattern:", 0) == 0) {
    const std::string w = model.substr(8);
    return limitlaw::pattern_distributions(limitlaw::build_pattern_model(w, uniform_alphabet(w)), ns);
  }
  if (model == "height") {
    for (std::size_t n : ns) out.push_back(limitlaw::height_distribution(n));
    return out;
  }
  if (model == "factors") {
    const std::size_t top = *std::max_element(ns.begin(), ns.end());
    auto F = limitlaw::factor_count_model(2, top);
    for (std::size_t n : ns) out.push_back(series::bivariate_distribution(F, n));
    return out;
  }
  throw std::invalid_argument("unknown model '" + model + "' (pattern:WORD, height, factors)");
}

int cmd_dist(const std::string& model, const common_flags& f) {
  std::vector<std::size_t> ns = f.ns;
  if (ns.empty()) ns = {100};
  auto tables = model_tables(model, ns);
  const auto fmt = workbench::parse_format(f.format);
  with_output(f.out, [&](std::ostream& os) {
    if (fmt == report_format::json) {
      nlohmann::json j{{"model", model}, {"tables", nlohmann::json::array()}};
      for (const auto& t : tables) {
        nlohmann::json p = nlohmann::json::object();
        for (const auto& [v, q] : t.probabilities()) p[std::to_string(v)] = rational_text(q);
        j["tables"].push_back({{"n", t.size()}, {"mean", rational_text(t.mean())}, {"variance", rational_text(t.variance())}, {"probabilities", p}});
      }
      // KS distance to the limit law: theta for heights, normal otherwise.
      std::vector<double> ks;
      for (const auto& t : tables) {
        if (model == "height")
          ks.push_back(limitlaw::height_theta_ks(t));
        else
          ks.push_back(t.variance() > 0 ? limitlaw::ks_to_normal(t) : 1.0);
      }
      j["ks"] = limitlaw::ks_report_json(tables, ks);
      os << j.dump(2) << '\n';
    } else {
      series::write_distribution_csv(tables, os);
    }
  });
  return exit_pass;
}

int cmd_qp(const std::string& model, const common_flags& f) {
  limitlaw::QuasiPowerModel qp;
  if (model == "noncrossing") {
    qp = limitlaw::noncrossing_quasi_power();
  } else if (model.rfind("pattern:", 0) == 0) {
    const std::string w = model.substr(8);
    qp = limitlaw::perron_analysis(limitlaw::build_pattern_model(w, uniform_alphabet(w)));
  } else {
    throw std::invalid_argument("unknown model '" + model + "' (pattern:WORD, noncrossing)");
  }
  with_output(f.out, [&](std::ostream& os) {
    nlohmann::json j{{"model", model},
                     {"kind", qp.kind == limitlaw::QuasiPowerModel::kind_t::movable_singularity ? "movable_singularity" : "movable_exponent"},
                     {"value", qp.value},
                     {"mean_coefficient", qp.mean_coefficient()},
                     {"variance_coefficient", qp.variance_coefficient()},
                     {"valid", qp.valid()}};
    os << j.dump(2) << '\n';
  });
  return exit_pass;
}

int cmd_corpus_list(const common_flags& f) {
  with_output(f.out, [&](std::ostream& os) {
    for (const auto& e : workbench::corpus()) os << e.name << '\t' << e.description << '\n';
  });
  return exit_pass;
}

int cmd_corpus_run(const std::string& name, const common_flags& f) {
  workbench::run_options o;
  if (f.order) o.order = f.order;
  o.ns = f.ns;
  o.tolerance = f.tolerance;
  std::vector<workbench::ComparisonReport> reports;
  if (name == "all")
    reports = workbench::run_all(o);
  else
    reports.push_back(workbench::run_example(name, o));
  const auto fmt = workbench::parse_format(f.format);
  bool pass = true;
  with_output(f.out, [&](std::ostream& os) {
    if (fmt == report_format::json && reports.size() > 1) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : reports) j.push_back(workbench::report_json(r));
      os << j.dump(2) << '\n';
    } else {
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i > 0 && fmt != report_format::csv) os << '\n';
        if (fmt == report_format::csv && reports.size() > 1) os << "# " << reports[i].name << '\n';
        workbench::emit_report(reports[i], fmt, os);
      }
    }
  });
  for (const auto& r : reports) {
    pass = pass && r.pass;
    std::cerr << r.name << ": " << r.verdict << '\n';
  }
  return pass ? exit_pass : exit_violation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anacomb: generating functions, singularity analysis and limit laws"};
  app.require_subcommand(1);
  common_flags flags;
  std::string file, cls, form, model, name;

  auto* coeffs = app.add_subcommand("coeffs", "exact coefficients of a specified class");
  coeffs->add_option("file", file, "specification file")->required();
  coeffs->add_option("--class", cls, "class name (default: first definition)");
  add_common(coeffs, flags, false);

  auto* asym = app.add_subcommand("asym", "asymptotic form of a specified class (JSON)");
  asym->add_option("file", file)->required();
  asym->add_option("--class", cls);
  add_common(asym, flags, false);

  auto* cmp = app.add_subcommand("compare", "exact coefficients against an asymptotic form");
  cmp->add_option("file", file)->required();
  cmp->add_option("--class", cls);
  cmp->add_option("--form", form, "AsymptoticForm JSON file (default: derived)");
  add_common(cmp, flags);

  auto* dist = app.add_subcommand("dist", "exact distributions: pattern:WORD, height, factors");
  dist->add_option("model", model)->required();
  add_common(dist, flags);

  auto* qp = app.add_subcommand("qp", "quasi-power parameters: pattern:WORD, noncrossing");
  qp->add_option("model", model)->required();
  add_common(qp, flags, false);

  auto* corpus = app.add_subcommand("corpus", "named examples");
  corpus->require_subcommand(1);
  auto* list = corpus->add_subcommand("list", "list corpus entries");
  add_common(list, flags, false);
  auto* run = corpus->add_subcommand("run", "run an entry, or all of them");
  run->add_option("name", name)->required();
  add_common(run, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_error;
  }

  try {
    if (*coeffs) return cmd_coeffs(file, cls, flags);
    if (*asym) return cmd_asym(file, cls, flags);
    if (*cmp) return cmd_compare(file, cls, form, flags);
    if (*dist) return cmd_dist(model, flags);
    if (*qp) return cmd_qp(model, flags);
    if (*list) return cmd_corpus_list(flags);
    if (*run) return cmd_corpus_run(name, flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
