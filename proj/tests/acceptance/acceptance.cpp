// Prints one PASS/FAIL/SKIP line per acceptance criterion; exits nonzero on
// any FAIL.
#include <cmath>
#include <cstdlib>
#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "judgcode/codebook.hpp"
#include "judgcode/commands.hpp"
#include "judgcode/extract.hpp"
#include "judgcode/ingest.hpp"
#include "judgcode/lint.hpp"
#include "judgcode/numerals.hpp"
#include "judgcode/quantity.hpp"
#include "judgcode/record_json.hpp"
#include "judgcode/reports.hpp"
#include "judgcode/run_config.hpp"
#include "judgcode/segmenter.hpp"
#include "judgcode/stats/diagnostics.hpp"
#include "judgcode/stats/model_frame.hpp"
#include "judgcode/stats/ols.hpp"
#include "judgcode/stats/reliability.hpp"
#include "judgcode/stats/sampling.hpp"
#include "judgcode/tables.hpp"
#include "numeral_oracle.hpp"
#include "oracle.hpp"

using namespace judgcode;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  enum { pass, fail, skip } status;
  std::string detail;
};

Outcome pass(std::string d) { return {Outcome::pass, std::move(d)}; }
Outcome fail(std::string d) { return {Outcome::fail, std::move(d)}; }

double round2(double v) { return std::round(v * 100) / 100; }

Outcome reliability_table() {
  struct Row {
    long tp, fp, fn, tn;
    double acc, kappa;
  };
  const Row rows[] = {{197, 0, 4, 74, 0.99, 0.96}, {195, 31, 2, 47, 0.88, 0.67},
                      {200, 0, 1, 74, 1.00, 0.99}, {214, 12, 2, 47, 0.95, 0.84}};
  std::string got;
  for (const auto& r : rows) {
    auto k = stats::cohens_kappa(r.tp, r.fp, r.fn, r.tn);
    if (!k.kappa) return fail(fmt::format("no kappa for ({},{},{},{})", r.tp, r.fp, r.fn, r.tn));
    got += fmt::format(" {:.2f}/{:.2f}", round2(k.accuracy), round2(*k.kappa));
    if (std::fabs(round2(k.accuracy) - r.acc) > 0.005 || std::fabs(round2(*k.kappa) - r.kappa) > 0.005)
      return fail("got" + got);
  }
  return pass("accuracy/kappa" + got);
}

Outcome percent_effects() {
  const std::pair<double, double> rows[] = {{0.67, 95}, {0.58, 78}, {0.39, 48}, {0.11, 12}, {0.10, 10}};
  std::string got;
  for (auto [b, want] : rows) {
    double pct = reports::percent_effect(b) * 100;
    got += fmt::format(" {:+.1f}%", pct);
    if (std::fabs(pct - want) > 1.0) return fail("got" + got);
  }
  return pass("effects" + got);
}

Outcome ols_oracle() {
  std::mt19937_64 rng(20210101);
  std::normal_distribution<double> z(0, 1);
  double worst = 0;
  for (int inst = 0; inst < 200; ++inst) {
    size_t k = 2 + rng() % 8;  // intercept plus 1..8 predictors
    size_t n = k + 3 + rng() % (98 - k);
    testsupport::Mat x(n, std::vector<double>(k, 1));
    std::vector<double> y(n);
    Eigen::MatrixXd X(n, k);
    Eigen::VectorXd Y(n);
    std::vector<std::string> names = {"(Constant)"};
    for (size_t j = 1; j < k; ++j) names.push_back("x" + std::to_string(j));
    for (size_t i = 0; i < n; ++i) {
      y[i] = 1;
      for (size_t j = 1; j < k; ++j) {
        x[i][j] = z(rng) * static_cast<double>(j);
        y[i] += 0.2 * x[i][j];
      }
      y[i] += z(rng);
      for (size_t j = 0; j < k; ++j) X(i, j) = x[i][j];
      Y(i) = y[i];
    }
    auto want = testsupport::oracle(x, y);
    auto got = stats::fit_ols(X, Y, names);
    auto rel = [](double a, double b) { return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)}); };
    for (size_t j = 0; j < k; ++j) {
      worst = std::max({worst, rel(got.coefficients[j].b, want.b[j]), rel(got.coefficients[j].se, want.se[j])});
    }
    worst = std::max({worst, rel(got.r2, want.r2), rel(got.adjusted_r2, want.adj)});
  }
  std::string d = fmt::format("200 instances, max relative difference {:.2e}", worst);
  return worst <= 1e-8 ? pass(d) : fail(d);
}

Outcome published_round_trip() {
  auto dir = fs::path(JUDGCODE_FIXTURES) / "published";
  auto doc = ingest::normalize_judgment(read_file(dir / "ECLI_NL_RBMNE_2014_4790.xml"));
  segment::apply(doc);
  auto got = record_to_json(extract::code_judgment(doc));
  auto expected = nlohmann::ordered_json::parse(read_file(dir / "ECLI_NL_RBMNE_2014_4790.expected.json"));
  std::vector<std::string> diffs;
  for (const auto& [k, v] : expected.items())
    if (!got.contains(k) || got[k] != v) diffs.push_back(k);
  if (!diffs.empty()) {
    std::string d = "fields differ:";
    for (const auto& k : diffs) d += " " + k;
    return fail(d);
  }
  return pass(fmt::format("{} published fields equal", expected.size()));
}

Outcome numerals_durations() {
  for (int n = 1; n <= 360; ++n) {
    auto w = testsupport::dutch_words(n);
    if (numerals::parse_dutch_number(normalize_text(w)) != n) return fail("round trip failed at " + w);
  }
  auto q = parse_quantity("35 (thirty) months");
  if (!q || q->amount != 35 || !q->inconsistent) return fail("35 (thirty) months not flagged with value 35");
  double day = judgcode::round2(to_months(1, Unit::days));
  if (std::fabs(day - 0.03) > 1e-12) return fail(fmt::format("1 day -> {} months", day));
  return pass("1..360 round trip, 35 (thirty) flagged, 1 day = 0.03 months");
}

Outcome diagnostics() {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> z(0, 1);
  Eigen::VectorXd e(10000);
  for (auto& v : e) v = z(rng);
  double dw = stats::durbin_watson(e);
  if (dw < 1.8 || dw > 2.2) return fail(fmt::format("Durbin-Watson {:.3f}", dw));

  Eigen::MatrixXd F(16, 5);
  for (int i = 0; i < 16; ++i) {
    F(i, 0) = 1;
    for (int j = 0; j < 4; ++j) F(i, j + 1) = (i >> j) & 1 ? 1 : -1;
  }
  for (const auto& t : stats::tolerances(F, {"(Constant)", "a", "b", "c", "d"}))
    if (t.tolerance != 1.0) return fail(fmt::format("tolerance of {} is {}", t.name, t.tolerance));

  std::uniform_real_distribution<double> u(-std::sqrt(3.0), std::sqrt(3.0));
  Eigen::MatrixXd X(101, 2);
  Eigen::VectorXd y(101);
  for (int i = 0; i < 101; ++i) {
    X(i, 0) = 1;
    X(i, 1) = i / 10.0;
    y(i) = 1 + 2 * X(i, 1) + u(rng);
  }
  y(40) += 10;
  auto out = stats::studentized_outliers(stats::fit_ols(X, y, {"(Constant)", "x"}));
  if (out != std::vector<size_t>{40}) return fail(fmt::format("outliers found: {}", out.size()));
  return pass(fmt::format("DW {:.3f}, orthogonal tolerances 1, planted outlier alone", dw));
}

Outcome sampling() {
  std::vector<stats::SampleUnit> units;
  std::map<stats::Cell, long> pop;
  std::mt19937 rng(3);
  for (int c = 0; c < 11; ++c)
    for (int y = 2015; y <= 2020; ++y) {
      long n = 150 + static_cast<long>(rng() % 500);
      std::string court = fmt::format("Rechtbank {:02}", c);
      for (long i = 0; i < n; ++i) units.push_back({fmt::format("ECLI:NL:RB{:02}:{}:{}", c, y, i), court, y});
      pop[{court, y}] = n;
    }
  auto a = stats::stratified_sample(units, 275, 42);
  auto b = stats::stratified_sample(units, 275, 42);
  if (a != b) return fail("two runs with seed 42 differ");
  if (a.size() != 275) return fail(fmt::format("sample size {}", a.size()));
  std::map<std::string, stats::Cell> cell;
  for (const auto& u : units) cell[u.ecli] = {u.court, u.year};
  std::map<stats::Cell, long> got;
  for (const auto& e : a) ++got[cell[e]];
  double worst = 0;
  for (const auto& [c, n] : pop)
    worst = std::max(worst, std::fabs(static_cast<double>(got[c]) - 275.0 * static_cast<double>(n) /
                                                                        static_cast<double>(units.size())));
  if (worst >= 1.0) return fail(fmt::format("cell deviation {:.3f}", worst));
  return pass(fmt::format("66 cells, max deviation {:.3f}, identical across runs", worst));
}

Outcome full_corpus() {
  const char* dir = std::getenv("JUDGCODE_CORPUS_DIR");
  if (!dir || !*dir) return {Outcome::skip, "set JUDGCODE_CORPUS_DIR to a fetched corpus"};
  RunConfig cfg;
  auto res = Resources::load(cfg);
  auto corpus = commands::code_corpus(dir, res, 0);
  std::vector<codebook::AnalysisRow> rows;
  for (const auto& r : corpus.records) rows.push_back(codebook::derive_row(r, res.statutes));
  auto h = stats::fit_hierarchy(rows, {3});
  double adj = h.fits[0].adjusted_r2;
  double rate = corpus.summary.decision_rate;
  std::string d = fmt::format("{} coded, decision rate {:.1f}%, model 3 adjusted R2 {:.3f}, N {}", corpus.summary.coded,
                              rate, adj, h.fits[0].n);
  return rate >= 95.0 && std::fabs(adj - 0.39) <= 0.05 ? pass(d) : fail(d);
}

Outcome lint_fixtures() {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(fs::path(JUDGCODE_FIXTURES) / "lint")) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<lint::LintIssue> all;
  for (const auto& f : files) {
    auto doc = ingest::normalize_judgment(read_file(f));
    segment::apply(doc);
    auto v = lint::lint_judgment(doc, extract::code_judgment(doc));
    all.insert(all.end(), v.begin(), v.end());
  }
  auto report = lint::aggregate(all);
  for (const auto& r : lint::rules()) {
    size_t n = report.per_rule[std::string(r.id)];
    if (n != 1) return fail(fmt::format("rule {} found {} times", r.id, n));
  }
  for (const auto& i : report.issues)
    if (lint::find_rule(i.rule)->category != i.category) return fail("miscategorized " + i.rule);
  if (report.issues.size() != lint::rules().size())
    return fail(fmt::format("{} findings for {} rules", report.issues.size(), lint::rules().size()));
  return pass(fmt::format("{} rules, one finding each (A {}, S {}, V {})", lint::rules().size(),
                          report.per_category[lint::Category::A_anonymization],
                          report.per_category[lint::Category::S_spelling_consistency],
                          report.per_category[lint::Category::V_legal_basis]));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"reliability table kappa and accuracy", reliability_table},
      {"percentage effects exp(B)-1", percent_effects},
      {"OLS equals normal-equations oracle", ols_oracle},
      {"published record round trip", published_round_trip},
      {"numerals and durations", numerals_durations},
      {"regression diagnostics", diagnostics},
      {"stratified sampling", sampling},
      {"full open-data corpus", full_corpus},
      {"lint fixture corpus", lint_fixtures},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const char* label = o.status == Outcome::pass ? "PASS" : o.status == Outcome::skip ? "SKIP" : "FAIL";
    failures += o.status == Outcome::fail;
    std::cout << "criterion " << i + 1 << ": " << label << "  " << criteria[i].first << " - " << o.detail << "\n";
  }
  return failures == 0 ? 0 : 1;
}
