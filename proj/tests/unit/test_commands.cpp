#include <doctest.h>

#include <json.hpp>

#include "judgcode/commands.hpp"
#include "judgcode/dataset_io.hpp"
#include "judgcode/errors.hpp"
#include "judgcode/fetch.hpp"
#include "judgcode/record_json.hpp"
#include "judgcode/run_config.hpp"
#include "judgcode/stats/reliability.hpp"
#include "judgcode/tables.hpp"
#include "support.hpp"
#include "synthetic.hpp"

using namespace judgcode;
using namespace judgcode::commands;
namespace fs = std::filesystem;
using testsupport::judgment_xml;

namespace {

struct Planted {
  int a, b, c, d;  // term & special, term & not, no term & special, neither
};

// Judgments carrying "grootschalig" and "bitcoin" in the given 2x2 counts.
fs::path planted_corpus(const std::string& name, const Planted& p) {
  auto dir = testsupport::scratch_dir(name);
  int id = 0;
  auto emit = [&](int count, bool term, bool special) {
    for (int i = 0; i < count; ++i, ++id) {
      std::string ecli = "ECLI:NL:RBAMS:2019:" + std::to_string(1000 + id);
      std::string body = std::string(term ? "de grootschalige handel" : "de handel") +
                         (special ? " met betaling in bitcoin" : " met contant geld");
      write_file(dir / fetch::ecli_filename(ecli),
                 judgment_xml(ecli, "2019-0" + std::to_string(1 + id % 9) + "-10",
                              {{"Het bewijs", body},
                               {"Wettelijke voorschriften", "artikel 2 van de Opiumwet"},
                               {"Beslissing", "gevangenisstraf voor de duur van " + std::to_string(2 + id % 20) +
                                                  " maanden"}},
                              "geboren op [geboortedag] 1980 te [geboorteplaats]", "",
                              id % 2 ? "Rechtbank Amsterdam" : "Rechtbank Den Haag"));
    }
  };
  emit(p.a, true, true);
  emit(p.b, true, false);
  emit(p.c, false, true);
  emit(p.d, false, false);
  return dir;
}

RunConfig config_for(const fs::path& corpus, const fs::path& out) {
  RunConfig c;
  c.corpus_dir = corpus;
  c.output_dir = out;
  c.threads = 2;
  return c;
}

}  // namespace

TEST_SUITE("commands") {

TEST_CASE("code writes records, dataset and log") {
  auto corpus = testsupport::scratch_dir("code_corpus");
  fs::copy(testsupport::fixtures() / "published" / "ECLI_NL_RBMNE_2014_4790.xml", corpus);
  fs::copy(testsupport::fixtures() / "lint" / "ECLI_NL_RBAMS_2019_9000.xml", corpus);
  fs::copy(testsupport::fixtures() / "lint" / "ECLI_NL_RBAMS_2019_9007.xml", corpus);
  write_file(corpus / "broken.xml", "<open-rechtspraak><uitspraak>");
  write_file(corpus / "meta.xml", judgment_xml("ECLI:NL:RBAMS:2019:55", "2019-01-01", {}));
  write_file(corpus / "minor.xml", judgment_xml("ECLI:NL:RBAMS:2019:56", "2019-01-01",
                                                {{"Beslissing", "jeugddetentie van 30 dagen"}}));
  auto out = testsupport::scratch_dir("code_out");
  auto res = cmd_code(config_for(corpus, out));

  auto records = nlohmann::json::parse(read_file(out / "records.json"));
  CHECK(records.size() == 3);
  auto rows = dataset::from_csv(read_file(out / "dataset.csv"));
  CHECK(rows.size() == 3);
  CHECK(dataset::from_json(read_file(out / "dataset.json")) == rows);
  auto log = read_file(out / "coding_log.jsonl");
  CHECK(std::count(log.begin(), log.end(), '\n') == 6);
  CHECK(log.find("\"failed\"") != std::string::npos);
  CHECK(log.find("excluded_minor") != std::string::npos);
  CHECK(res.text.find("decision coded") != std::string::npos);

  // The published record is reproduced verbatim.
  auto expected = nlohmann::json::parse(
      read_file(testsupport::fixtures() / "published" / "ECLI_NL_RBMNE_2014_4790.expected.json"));
  bool seen = false;
  for (const auto& r : records) {
    if (r["ECLI"] != expected["ECLI"]) continue;
    seen = true;
    for (const auto& [k, v] : expected.items()) CHECK_MESSAGE(r[k] == v, k);
  }
  CHECK(seen);

  // Re-running gives byte-identical outputs.
  auto before = read_file(out / "records.json");
  auto csv = read_file(out / "dataset.csv");
  cmd_code(config_for(corpus, out));
  CHECK(read_file(out / "records.json") == before);
  CHECK(read_file(out / "dataset.csv") == csv);
  CHECK(read_file(out / "coding_log.jsonl") == log);
}

TEST_CASE("coding summary counts") {
  Resources res = Resources::load(RunConfig{});
  auto corpus = planted_corpus("summary_corpus", {3, 2, 2, 3});
  write_file(corpus / "meta.xml", judgment_xml("ECLI:NL:RBAMS:2019:55", "2019-01-01", {}));
  auto coded = code_corpus(corpus, res, 3);
  CHECK(coded.summary.files == 11);
  CHECK(coded.summary.coded == 10);
  CHECK(coded.summary.excluded_metadata_only == 1);
  CHECK(coded.summary.decision_coded == 10);
  CHECK(coded.summary.decision_rate == doctest::Approx(100));
  CHECK(coded.summary.legal_basis_rate == doctest::Approx(100));
  CHECK(std::is_sorted(coded.records.begin(), coded.records.end(),
                       [](const auto& a, const auto& b) { return a.meta.ecli < b.meta.ecli; }));
  // Thread count does not change results.
  auto single = code_corpus(corpus, res, 1);
  CHECK(records_to_json_text(single.records) == records_to_json_text(coded.records));
  CHECK_THROWS_AS(list_corpus("/nonexistent/corpus"), IoError);
}

TEST_CASE("sample is reproducible") {
  auto corpus = planted_corpus("sample_corpus", {10, 10, 10, 20});
  auto out = testsupport::scratch_dir("sample_out");
  auto cfg = config_for(corpus, out);
  cmd_code(cfg);
  cfg.sample_size = 20;
  cmd_sample(cfg, {});
  auto first = read_file(out / "worksheet.csv");
  cmd_sample(cfg, {});
  CHECK(read_file(out / "worksheet.csv") == first);
  auto rows = stats::worksheet_from_csv(first);
  CHECK(rows.size() == 20);
  for (const auto& r : rows) CHECK(r.manual_decision.empty());

  cfg.sample_size = 0;
  auto empty = cmd_sample(cfg, {});
  CHECK(empty.warnings.size() == 1);
  CHECK(stats::worksheet_from_csv(read_file(out / "worksheet.csv")).empty());

  cfg.sample_size = 51;
  CHECK_THROWS_AS(cmd_sample(cfg, {}), InvalidArgument);
}

TEST_CASE("reliability from filled worksheets") {
  auto corpus = planted_corpus("rel_corpus", {5, 5, 5, 5});
  auto out = testsupport::scratch_dir("rel_out");
  auto cfg = config_for(corpus, out);
  cmd_code(cfg);
  cfg.sample_size = 10;
  cmd_sample(cfg, {});
  auto rows = stats::worksheet_from_csv(read_file(out / "worksheet.csv"));
  for (auto& r : rows) {
    r.manual_birth_year = r.birth_year;
    r.manual_legal_basis = r.legal_basis;
    r.manual_decision = r.decision;
  }
  write_file(out / "after.csv", stats::worksheet_to_csv(rows));
  rows[0].manual_decision = "-";
  write_file(out / "before.csv", stats::worksheet_to_csv(rows));
  auto res = cmd_reliability(cfg, {out / "before.csv", out / "after.csv"}, {"Before", "After"});
  auto j = nlohmann::json::parse(read_file(out / "reliability.json"));
  CHECK(res.text.find("After") != std::string::npos);
  CHECK(j.dump().find("\"accuracy\":1.0") != std::string::npos);

  CHECK_THROWS_AS(cmd_reliability(cfg, {out / "worksheet.csv"}, {}), DataError);
  CHECK_THROWS_AS(cmd_reliability(cfg, {}, {}), InvalidArgument);
}

TEST_CASE("chi-square matches a hand computation") {
  auto corpus = planted_corpus("chisq_corpus", {6, 4, 3, 12});
  auto out = testsupport::scratch_dir("chisq_out");
  auto cfg = config_for(corpus, out);
  cmd_chisq(cfg, "", "special_skills");
  auto j = nlohmann::json::parse(read_file(out / "chisq.json"));
  // n(ad - bc)^2 / (r1 r2 c1 c2) = 25 * (72 - 12)^2 / (10 * 15 * 9 * 16)
  double expected = 25.0 * 3600.0 / (10.0 * 15.0 * 9.0 * 16.0);
  CHECK(j["chi2"].get<double>() == doctest::Approx(expected));
  CHECK(j["percent_present"].get<double>() == doctest::Approx(60.0));
  CHECK(j["percent_absent"].get<double>() == doctest::Approx(20.0));

  // A keyword given on the command line.
  cmd_chisq(cfg, "bitcoin", "special_skills");
  j = nlohmann::json::parse(read_file(out / "chisq.json"));
  CHECK(j["percent_present"].get<double>() == doctest::Approx(100.0));

  CHECK_THROWS_AS(cmd_chisq(cfg, "ransomware", "special_skills"), DomainError);
  CHECK_THROWS(cmd_chisq(cfg, "", "no_such_flag"));
}

TEST_CASE("analyze recovers generating coefficients") {
  auto out = testsupport::scratch_dir("analyze_out");
  auto rows = testsupport::synthetic_rows(2500, 10);
  write_file(out / "dataset.csv", dataset::to_csv(rows));
  RunConfig cfg;
  cfg.output_dir = out;
  auto res = cmd_analyze(cfg, out / "dataset.csv");
  CHECK(res.text.find("Adjusted R2") != std::string::npos);
  auto j = nlohmann::json::parse(read_file(out / "regression.json"));
  testsupport::Truth truth;
  const auto& model3 = j["models"].back();
  int checked = 0;
  for (const auto& c : model3["coefficients"]) {
    auto it = truth.b.find(c["name"].get<std::string>());
    if (it == truth.b.end()) continue;
    CHECK_MESSAGE(std::fabs(c["b"].get<double>() - it->second) < 4 * c["se"].get<double>(), it->first);
    ++checked;
  }
  CHECK(checked == static_cast<int>(truth.b.size()));
  CHECK(fs::exists(out / "descriptives.txt"));
  CHECK(fs::exists(out / "residuals.csv"));
  auto text = read_file(out / "regression.txt");
  CHECK(text.find("Durbin-Watson") != std::string::npos);
  CHECK(text.find("Tolerance") != std::string::npos);

  auto analysis = run_analysis(rows, {1, 2, 3});
  CHECK(analysis.interactions.size() == 3);
  REQUIRE(analysis.durbin_watson);
  CHECK(*analysis.durbin_watson > 1.5);
  CHECK(*analysis.durbin_watson < 2.5);
  REQUIRE(analysis.correlations);
}

TEST_CASE("analyze refuses too few rows") {
  auto out = testsupport::scratch_dir("analyze_small");
  write_file(out / "dataset.csv", dataset::to_csv(testsupport::synthetic_rows(10, 4)));
  RunConfig cfg;
  cfg.output_dir = out;
  try {
    cmd_analyze(cfg, out / "dataset.csv");
    FAIL("ten rows accepted");
  } catch (const DataError& e) {
    std::string msg = e.what();
    CHECK(msg.find("10") != std::string::npos);
  }
}

TEST_CASE("lint command") {
  auto out = testsupport::scratch_dir("lint_out");
  auto cfg = config_for(testsupport::fixtures() / "lint", out);
  cfg.check_date = parse_date("2021-03-01");
  cmd_lint(cfg);
  auto csv = dataset::parse_csv(read_file(out / "lint.csv"));
  REQUIRE(csv.size() == 14);
  CHECK(csv[0] == std::vector<std::string>{"ecli", "date_checked", "category", "rule", "excerpt"});
  CHECK(csv[1][1] == "2021-03-01");
  auto j = nlohmann::json::parse(read_file(out / "lint.json"));
  CHECK(j.dump().find("unknown_article") != std::string::npos);

  auto rules = testsupport::scratch_dir("lint_rules");
  write_file(rules / "rules.tsv", "imei_number\toff\n");
  cfg.lint_rules = rules / "rules.tsv";
  cmd_lint(cfg);
  CHECK(dataset::parse_csv(read_file(out / "lint.csv")).size() == 13);
}

TEST_CASE("run configuration") {
  auto dir = testsupport::scratch_dir("run_config");
  write_file(dir / "statutes.tsv", "Sr\t310\t48\tproperty\t2000-01-01\n");
  write_file(dir / "config.json", R"({
    "source": "https://example.invalid/uitspraken",
    "corpus_dir": "corpus",
    "output_dir": "out",
    "seed": 7,
    "date_range": ["2015-01-01", "2020-12-31"],
    "models": [1, 3],
    "statute_table": "statutes.tsv",
    "sample_size": 100
  })");
  auto c = RunConfig::from_json_file(dir / "config.json");
  CHECK(c.seed == 7);
  CHECK(c.corpus_dir == dir / "corpus");
  CHECK(c.statute_table == dir / "statutes.tsv");
  CHECK(c.models == std::vector<int>{1, 3});
  CHECK(format_iso_date(*c.date_from) == "2015-01-01");
  CHECK(c.sample_size == 100);
  auto res = Resources::load(c);
  CHECK(res.statutes.size() == 1);

  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"sede": 1})"), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"date_range": ["2020-01-01", "2015-01-01"]})").validate(),
                  ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json_text(R"({"models": [4]})").validate(), ConfigError);

  c.set("seed", "9");
  CHECK(c.seed == 9);
  c.set("models", "2");
  CHECK(c.models == std::vector<int>{2});
  c.set("query", "subject=strafrecht");
  CHECK(c.query.back() == std::pair<std::string, std::string>{"subject", "strafrecht"});
  c.set("dictionaries.misspellings", (dir / "m.tsv").string());
  CHECK(c.dictionaries.misspellings == dir / "m.tsv");
  CHECK_THROWS_AS(c.set("seed", "x"), ConfigError);
  CHECK_THROWS_AS(c.set("unknown", "1"), ConfigError);
  CHECK_THROWS_AS(Resources::load(c), ConfigError);

  RunConfig broken;
  broken.statute_table = dir / "missing.tsv";
  CHECK_THROWS_AS(Resources::load(broken), ConfigError);
}

TEST_CASE("flag names") {
  codebook::AnalysisRow r;
  r.special_skills = 1;
  CHECK(flag_value(r, "special_skills") == 1);
  CHECK(flag_value(r, "female") == 0);
  CHECK_FALSE(flag_value(r, "born_abroad").has_value());
  CHECK_THROWS(flag_value(r, "nope"));
}

}
