#include "judgcode/reports.hpp"

#include <cmath>
#include <map>

#include <fmt/format.h>

#include "judgcode/dataset_io.hpp"
#include "judgcode/quantity.hpp"

namespace judgcode::reports {

using nlohmann::ordered_json;

std::string stars(double p) {
  if (std::isnan(p)) return "";
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return "";
}

double percent_effect(double b) { return std::expm1(b); }

std::string fixed2(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  double r = round2(v);
  if (r == 0) r = 0;  // no "-0.00"
  return fmt::format("{:.2f}", r);
}

namespace {

ordered_json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

ordered_json fit_json(const stats::ModelFit& fit, int model, const std::vector<std::string>& dropped) {
  ordered_json j;
  j["model"] = model;
  j["n"] = fit.n;
  j["r2"] = num(fit.r2);
  j["adjusted_r2"] = num(fit.adjusted_r2);
  j["f"] = {{"f", num(fit.f.f)}, {"df1", fit.f.df1}, {"df2", fit.f.df2}, {"p", num(fit.f.p)}};
  ordered_json coefs = ordered_json::array();
  for (const auto& c : fit.coefficients)
    coefs.push_back({{"name", c.name},
                     {"b", num(c.b)},
                     {"se", num(c.se)},
                     {"t", num(c.t)},
                     {"p", num(c.p)},
                     {"stars", stars(c.p)},
                     {"percent_effect", num(100.0 * percent_effect(c.b))}});
  j["coefficients"] = coefs;
  j["dropped_columns"] = dropped;
  return j;
}

bool binary_column(const std::string& name) { return name != "(Constant)" && name != "n_offences"; }

}  // namespace

std::vector<std::string> effect_lines(const stats::ModelFit& fit, double alpha) {
  std::vector<std::string> out;
  for (const auto& c : fit.coefficients) {
    if (!binary_column(c.name) || !(c.p < alpha)) continue;
    double pct = 100.0 * percent_effect(c.b);
    out.push_back(fmt::format("{}: B = {}, {}{:.1f}% custodial months", c.name, fixed2(c.b), pct >= 0 ? "+" : "", pct));
  }
  return out;
}

std::string regression_text(const AnalysisResult& a) {
  const auto& h = a.hierarchy;
  std::string out = "Unstandardised coefficients (B, SE) of ln(prison months)\n\n";
  std::vector<std::string> rows;
  for (const auto& d : h.designs)
    for (const auto& n : d.names)
      if (std::find(rows.begin(), rows.end(), n) == rows.end()) rows.push_back(n);

  size_t width = 10;
  for (const auto& r : rows) width = std::max(width, r.size());
  constexpr size_t kCol = 24;
  out += fmt::format("{:<{}}", "", width);
  for (int m : h.models) out += fmt::format(" | {:<{}}", fmt::format("Model {}", m), kCol);
  out += "\n";
  for (const auto& r : rows) {
    out += fmt::format("{:<{}}", r, width);
    for (const auto& fit : h.fits) {
      const auto* c = fit.find(r);
      std::string cell = c ? fmt::format("{} ({}){}", fixed2(c->b), fixed2(c->se), stars(c->p)) : "";
      out += fmt::format(" | {:<{}}", cell, kCol);
    }
    out += "\n";
  }
  out += fmt::format("{:<{}}", "Adjusted R2", width);
  for (const auto& fit : h.fits) out += fmt::format(" | {:<{}}", fixed2(fit.adjusted_r2), kCol);
  out += "\n";
  out += fmt::format("{:<{}}", "F", width);
  for (const auto& fit : h.fits)
    out += fmt::format(" | {:<{}}", fmt::format("F({}, {}) = {}", fit.f.df1, fit.f.df2, fixed2(fit.f.f)), kCol);
  out += "\n";
  out += fmt::format("\nN = {} (valid listwise of {})\n", h.missingness.complete_rows, h.missingness.input_rows);
  out += "* p < 0.05, ** p < 0.01, *** p < 0.001\n";
  for (size_t i = 0; i < h.designs.size(); ++i)
    if (!h.designs[i].dropped.empty()) {
      out += fmt::format("Model {} dropped empty columns:", h.models[i]);
      for (const auto& d : h.designs[i].dropped) out += " " + d;
      out += "\n";
    }

  out += "\nDiagnostics (largest model)\n";
  if (a.durbin_watson) out += fmt::format("Durbin-Watson: {}\n", fixed2(*a.durbin_watson));
  if (!a.tolerances.empty()) {
    auto min = std::min_element(a.tolerances.begin(), a.tolerances.end(),
                                [](const auto& x, const auto& y) { return x.tolerance < y.tolerance; });
    out += fmt::format("Minimum tolerance: {} ({})\n", fixed2(min->tolerance), min->name);
  }
  if (!a.tolerances.empty()) {
    out += "Tolerance per predictor\n";
    for (const auto& t : a.tolerances) out += fmt::format("  {:<28} {}\n", t.name, fixed2(t.tolerance));
  }
  out += fmt::format("Outliers (|studentized residual| > {}): {}", dataset::format_number(a.outlier_threshold),
                     a.outliers.size());
  if (a.outlier_mean_prison_months)
    out += fmt::format(", mean sentence {} months", fixed2(*a.outlier_mean_prison_months));
  out += "\n";
  for (const auto& i : a.interactions)
    out += fmt::format("Interaction {}: delta R2 = {:.4f}, F({}, {}) = {}, p = {:.4f}\n", i.label, i.result.delta_r2,
                       i.result.df1, i.result.df2, fixed2(i.result.f_change), i.result.p);
  for (const auto& e : a.interaction_errors) out += "Interaction skipped: " + e + "\n";
  if (a.correlations && a.correlations->max_abs_offdiag) {
    const auto& c = *a.correlations;
    out += fmt::format("Maximum |r| between predictors: {} ({} x {})\n", fixed2(*c.max_abs_offdiag),
                       c.names[c.max_pair.first], c.names[c.max_pair.second]);
  }
  if (!h.fits.empty()) {
    auto lines = effect_lines(h.fits.back());
    if (!lines.empty()) out += "\nEffects (exp(B) - 1)\n";
    for (const auto& l : lines) out += l + "\n";
  }
  return out;
}

ordered_json regression_json(const AnalysisResult& a) {
  const auto& h = a.hierarchy;
  ordered_json j;
  ordered_json models = ordered_json::array();
  for (size_t i = 0; i < h.fits.size(); ++i) models.push_back(fit_json(h.fits[i], h.models[i], h.designs[i].dropped));
  j["models"] = models;
  j["listwise_n"] = h.missingness.complete_rows;
  j["input_n"] = h.missingness.input_rows;
  ordered_json miss = ordered_json::object();
  for (const auto& [name, count] : h.missingness.missing) miss[name] = count;
  j["missing"] = miss;

  ordered_json diag;
  diag["durbin_watson"] = a.durbin_watson ? num(*a.durbin_watson) : ordered_json(nullptr);
  ordered_json tol = ordered_json::array();
  for (const auto& t : a.tolerances) tol.push_back({{"name", t.name}, {"tolerance", num(t.tolerance)}});
  diag["tolerances"] = tol;
  diag["outliers"] = {{"threshold", a.outlier_threshold},
                      {"count", a.outliers.size()},
                      {"mean_prison_months", a.outlier_mean_prison_months ? num(*a.outlier_mean_prison_months)
                                                                          : ordered_json(nullptr)},
                      {"ecli", a.outliers}};
  ordered_json inter = ordered_json::array();
  for (const auto& i : a.interactions)
    inter.push_back({{"label", i.label},
                     {"delta_r2", num(i.result.delta_r2)},
                     {"f_change", num(i.result.f_change)},
                     {"df1", i.result.df1},
                     {"df2", i.result.df2},
                     {"p", num(i.result.p)},
                     {"terms", i.result.added},
                     {"dropped_terms", i.result.dropped}});
  diag["interactions"] = inter;
  diag["interaction_errors"] = a.interaction_errors;
  if (a.correlations) {
    const auto& c = *a.correlations;
    ordered_json corr;
    corr["variables"] = c.names;
    ordered_json m = ordered_json::array();
    for (Eigen::Index r = 0; r < c.r.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (Eigen::Index col = 0; col < c.r.cols(); ++col) row.push_back(num(c.r(r, col)));
      m.push_back(row);
    }
    corr["r"] = m;
    corr["max_abs_offdiag"] = c.max_abs_offdiag ? num(*c.max_abs_offdiag) : ordered_json(nullptr);
    if (c.max_abs_offdiag) corr["max_pair"] = {c.names[c.max_pair.first], c.names[c.max_pair.second]};
    diag["correlations"] = corr;
  }
  j["diagnostics"] = diag;
  j["effects"] = h.fits.empty() ? std::vector<std::string>{} : effect_lines(h.fits.back());
  return j;
}

std::string descriptives_text(const stats::Descriptives& d) {
  std::string out = "Ratio variables\n";
  out += fmt::format("{:<20} {:>8} {:>10} {:>10} {:>10} {:>10}\n", "Variable", "N", "Min", "Max", "Mean", "SD");
  auto opt = [](const std::optional<double>& v) { return v ? fixed2(*v) : std::string("-"); };
  for (const auto& r : d.ratio)
    out += fmt::format("{:<20} {:>8} {:>10} {:>10} {:>10} {:>10}\n", r.variable, r.n, opt(r.min), opt(r.max),
                       opt(r.mean), opt(r.sd));
  out += "\nDichotomous variables (value 1)\n";
  out += fmt::format("{:<24} {:>10} {:>8} {:>8}\n", "Variable", "Frequency", "Percent", "N");
  for (const auto& f : d.dichotomous)
    out += fmt::format("{:<24} {:>10} {:>8} {:>8}\n", f.variable, f.frequency, fmt::format("{:.1f}", f.percent),
                       f.valid_n);
  out += "\nCategorical variables\n";
  for (const auto& f : d.categorical)
    out += fmt::format("{:<16} {:<18} {:>10} {:>8}\n", f.variable, f.value, f.frequency,
                       fmt::format("{:.1f}", f.percent));
  out += "\nShare with special skills by year\n";
  for (const auto& y : d.special_skills_by_year)
    out += fmt::format("{} {:>6} of {:>6} {:>6}%\n", y.year, y.count, y.n, fmt::format("{:.1f}", y.percent));
  return out;
}

ordered_json descriptives_json(const stats::Descriptives& d) {
  ordered_json j;
  ordered_json ratio = ordered_json::array();
  auto opt = [](const std::optional<double>& v) { return v ? num(*v) : ordered_json(nullptr); };
  for (const auto& r : d.ratio)
    ratio.push_back({{"variable", r.variable}, {"n", r.n}, {"min", opt(r.min)}, {"max", opt(r.max)},
                     {"mean", opt(r.mean)}, {"sd", opt(r.sd)}});
  j["ratio"] = ratio;
  auto freq = [](const std::vector<stats::FrequencyRow>& rows) {
    ordered_json a = ordered_json::array();
    for (const auto& f : rows)
      a.push_back({{"variable", f.variable}, {"value", f.value}, {"frequency", f.frequency},
                   {"percent", num(f.percent)}, {"valid_n", f.valid_n}});
    return a;
  };
  j["dichotomous"] = freq(d.dichotomous);
  j["categorical"] = freq(d.categorical);
  auto yearly = [](const std::vector<stats::YearlyShare>& ys) {
    ordered_json a = ordered_json::array();
    for (const auto& y : ys) a.push_back({{"year", y.year}, {"n", y.n}, {"count", y.count}, {"percent", num(y.percent)}});
    return a;
  };
  j["special_skills_by_year"] = yearly(d.special_skills_by_year);
  j["basic_skills_by_year"] = yearly(d.basic_skills_by_year);
  return j;
}

std::string reliability_text(const std::vector<std::vector<stats::ReliabilityTally>>& sets,
                             const std::vector<std::string>& headings, size_t n) {
  std::string out = fmt::format("Reliability of the coding (N={})\n", n);
  for (size_t s = 0; s < sets.size(); ++s) {
    out += fmt::format("\n{}\n", s < headings.size() ? headings[s] : fmt::format("Set {}", s + 1));
    out += fmt::format("{:<14} {:>5} {:>5} {:>5} {:>5} {:>9} {:>6}\n", "Variable", "TP", "FP", "FN", "TN", "Accuracy",
                       "Kappa");
    for (const auto& t : sets[s])
      out += fmt::format("{:<14} {:>5} {:>5} {:>5} {:>5} {:>9} {:>6}\n", t.variable, t.tp, t.fp, t.fn, t.tn,
                         fixed2(t.accuracy), t.kappa ? fixed2(*t.kappa) : std::string(""));
  }
  return out;
}

ordered_json reliability_json(const std::vector<std::vector<stats::ReliabilityTally>>& sets,
                              const std::vector<std::string>& headings, size_t n) {
  ordered_json j;
  j["n"] = n;
  ordered_json arr = ordered_json::array();
  for (size_t s = 0; s < sets.size(); ++s) {
    ordered_json rows = ordered_json::array();
    for (const auto& t : sets[s])
      rows.push_back({{"variable", t.variable}, {"tp", t.tp}, {"fp", t.fp}, {"fn", t.fn}, {"tn", t.tn},
                      {"accuracy", num(t.accuracy)}, {"kappa", t.kappa ? num(*t.kappa) : ordered_json(nullptr)}});
    arr.push_back({{"heading", s < headings.size() ? headings[s] : fmt::format("Set {}", s + 1)}, {"rows", rows}});
  }
  j["sets"] = arr;
  return j;
}

std::string lint_csv(const lint::LintReport& r, const Date& checked) {
  std::string out = "ecli,date_checked,category,rule,excerpt\n";
  const std::string date = format_iso_date(checked);
  for (const auto& i : r.issues)
    out += fmt::format("{},{},{},{},{}\n", dataset::csv_escape(i.ecli), date, lint::short_name(i.category),
                       dataset::csv_escape(i.rule), dataset::csv_escape(i.excerpt));
  return out;
}

ordered_json lint_json(const lint::LintReport& r, const Date& checked) {
  ordered_json j;
  j["date_checked"] = format_iso_date(checked);
  ordered_json cats = ordered_json::object();
  for (const auto& [c, n] : r.per_category) cats[std::string(lint::short_name(c))] = n;
  j["per_category"] = cats;
  ordered_json rules = ordered_json::object();
  for (const auto& info : lint::rules())
    if (auto it = r.per_rule.find(std::string(info.id)); it != r.per_rule.end()) rules[std::string(info.id)] = it->second;
  j["per_rule"] = rules;
  ordered_json issues = ordered_json::array();
  for (const auto& i : r.issues)
    issues.push_back({{"ecli", i.ecli},
                      {"date_checked", format_iso_date(checked)},
                      {"category", lint::short_name(i.category)},
                      {"rule", i.rule},
                      {"severity", lint::to_string(i.severity)},
                      {"excerpt", i.excerpt}});
  j["issues"] = issues;
  return j;
}

std::string lint_summary(const lint::LintReport& r) {
  std::string out = fmt::format("{} findings\n", r.issues.size());
  for (const auto& [c, n] : r.per_category) out += fmt::format("  {} {}\n", lint::short_name(c), n);
  for (const auto& info : lint::rules())
    if (auto it = r.per_rule.find(std::string(info.id)); it != r.per_rule.end())
      out += fmt::format("  {:<26} {}\n", info.id, it->second);
  return out;
}

std::string chisq_text(const ChiSquareReport& r) {
  std::string out = fmt::format("Term \"{}\" x {}\n", r.term, r.split);
  out += fmt::format("{:<14} {:>10} {:>10}\n", "", r.split + "=1", r.split + "=0");
  out += fmt::format("{:<14} {:>10} {:>10}\n", "term present", r.a, r.b);
  out += fmt::format("{:<14} {:>10} {:>10}\n", "term absent", r.c, r.d);
  out += fmt::format("{}=1 among documents with the term: {:.1f}%\n", r.split, r.percent_present);
  out += fmt::format("{}=1 among documents without the term: {:.1f}%\n", r.split, r.percent_absent);
  out += fmt::format("chi2(1) = {:.1f}, p = {:.4g}\n", r.test.chi2, r.test.p);
  return out;
}

ordered_json chisq_json(const ChiSquareReport& r) {
  return {{"term", r.term},
          {"split", r.split},
          {"table", {{r.a, r.b}, {r.c, r.d}}},
          {"percent_present", num(r.percent_present)},
          {"percent_absent", num(r.percent_absent)},
          {"chi2", num(r.test.chi2)},
          {"df", 1},
          {"p", num(r.test.p)}};
}

}  // namespace judgcode::reports
