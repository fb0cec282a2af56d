// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "judgcode/judgcode.h"

namespace {

struct ConfigDeleter {
  void operator()(jc_config* c) const { jc_config_free(c); }
};
using ConfigPtr = std::unique_ptr<jc_config, ConfigDeleter>;

// Flags shared by every subcommand; unset flags keep the config file value.
struct Common {
  std::string config;
  std::string source, corpus_dir, output_dir, date_from, date_to, statute_table, statute_articles, lint_rules,
      heading_synonyms, juvenile_markers, fold_table;
  std::optional<int> threads;
  std::vector<std::string> query;
  std::vector<std::string> dictionaries;  // name=path
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config, "Run configuration (JSON)")->check(CLI::ExistingFile);
  app->add_option("--source", c.source, "Endpoint URL or directory of XML files");
  app->add_option("--corpus-dir", c.corpus_dir, "Directory of stored judgment XML");
  app->add_option("--output-dir,-o", c.output_dir, "Directory for reports and datasets");
  app->add_option("--from,--date-from", c.date_from, "First decision date (yyyy-mm-dd)");
  app->add_option("--to,--date-to", c.date_to, "Last decision date (yyyy-mm-dd)");
  app->add_option("--threads", c.threads, "Worker threads (0: all cores)");
  app->add_option("--query", c.query, "Extra index parameter name=value (repeatable)");
  app->add_option("--statute-table", c.statute_table, "Statutory maxima table");
  app->add_option("--statute-articles", c.statute_articles, "Last article number per statute");
  app->add_option("--lint-rules", c.lint_rules, "Lint rule toggles");
  app->add_option("--heading-synonyms", c.heading_synonyms, "Chapter heading table");
  app->add_option("--juvenile-markers", c.juvenile_markers, "Juvenile-case markers");
  app->add_option("--fold-table", c.fold_table, "Character folding table");
  app->add_option("--dictionary", c.dictionaries, "Dictionary override name=path (repeatable)");
}

[[noreturn]] void die(jc_status s) {
  std::cerr << "judgcode: " << jc_status_name(s) << ": " << jc_last_error() << "\n";
  std::exit(s == JC_INVALID_ARGUMENT || s == JC_CONFIG_ERROR ? 2 : 1);
}

void check(jc_status s) {
  if (s != JC_OK) die(s);
}

void set(jc_config* c, const char* key, const std::string& value) {
  if (!value.empty()) check(jc_config_set(c, key, value.c_str()));
}

ConfigPtr build_config(const Common& common, const std::vector<std::pair<const char*, std::string>>& extra) {
  jc_config* raw = nullptr;
  check(common.config.empty() ? jc_config_new(&raw) : jc_config_load(common.config.c_str(), &raw));
  ConfigPtr c(raw);
  set(c.get(), "source", common.source);
  set(c.get(), "corpus_dir", common.corpus_dir);
  set(c.get(), "output_dir", common.output_dir);
  set(c.get(), "date_from", common.date_from);
  set(c.get(), "date_to", common.date_to);
  if (common.threads) set(c.get(), "threads", std::to_string(*common.threads));
  for (const auto& q : common.query) set(c.get(), "query", q);
  set(c.get(), "statute_table", common.statute_table);
  set(c.get(), "statute_articles", common.statute_articles);
  set(c.get(), "lint_rules", common.lint_rules);
  set(c.get(), "heading_synonyms", common.heading_synonyms);
  set(c.get(), "juvenile_markers", common.juvenile_markers);
  set(c.get(), "fold_table", common.fold_table);
  for (const auto& d : common.dictionaries) {
    auto eq = d.find('=');
    if (eq == std::string::npos) {
      std::cerr << "judgcode: --dictionary expects name=path\n";
      std::exit(2);
    }
    set(c.get(), ("dictionaries." + d.substr(0, eq)).c_str(), d.substr(eq + 1));
  }
  for (const auto& [key, value] : extra) set(c.get(), key, value);
  return c;
}

// Prints the command output and warnings, releasing both. Taken by reference
// so they are read after the command has filled them in.
int finish(jc_status s, char*& text, char*& warnings) {
  if (s != JC_OK) die(s);
  std::fputs(text, stdout);
  if (warnings && *warnings) std::fprintf(stderr, "warnings:\n%s", warnings);
  jc_string_free(text);
  jc_string_free(warnings);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rule-based coding and analysis of published criminal judgments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(jc_version()));

  Common common;
  std::string seed, sample_size, models, check_date, match, threshold, dataset, records, term, split = "special_skills";
  std::vector<std::string> worksheets, headings;

  auto* fetch = app.add_subcommand("fetch", "Download judgments for a date range");
  add_common(fetch, common);

  auto* code = app.add_subcommand("code", "Code a stored corpus into JSON records and a dataset");
  add_common(code, common);

  auto* analyze = app.add_subcommand("analyze", "Fit the regression models and write the reports");
  add_common(analyze, common);
  analyze->add_option("--dataset", dataset, "Dataset CSV or JSON (default <output-dir>/dataset.csv)");
  analyze->add_option("--models", models, "Models to fit, e.g. 1,2,3");
  analyze->add_option("--outlier-threshold", threshold, "Studentized residual cut-off");

  auto* sample = app.add_subcommand("sample", "Draw a stratified sample worksheet for manual checking");
  add_common(sample, common);
  sample->add_option("--records", records, "records.json (default <output-dir>/records.json)");
  sample->add_option("--size", sample_size, "Sample size");
  sample->add_option("--seed", seed, "Random seed");

  auto* reliability = app.add_subcommand("reliability", "Compare manual and program codes in worksheets");
  add_common(reliability, common);
  reliability->add_option("worksheets", worksheets, "Completed worksheets (e.g. before and after)")
      ->required()
      ->check(CLI::ExistingFile);
  reliability->add_option("--heading", headings, "Heading per worksheet (repeatable)");
  reliability->add_option("--legal-basis-match", match, "exact or subset")
      ->check(CLI::IsMember({"exact", "subset"}));

  auto* chisq = app.add_subcommand("chisq", "Chi-square test of term presence against a dataset flag");
  add_common(chisq, common);
  chisq->add_option("--term", term, "Search term (default: the large-scale dictionary)");
  chisq->add_option("--split", split, "Dataset flag, e.g. special_skills");

  auto* lint = app.add_subcommand("lint", "Report anonymisation, consistency and legal-basis issues");
  add_common(lint, common);
  lint->add_option("--check-date", check_date, "Date written in the report (yyyy-mm-dd)");

  CLI11_PARSE(app, argc, argv);

  char* text = nullptr;
  char* warnings = nullptr;
  if (fetch->parsed()) {
    auto c = build_config(common, {});
    return finish(jc_cmd_fetch(c.get(), &text, &warnings), text, warnings);
  }
  if (code->parsed()) {
    auto c = build_config(common, {});
    return finish(jc_cmd_code(c.get(), &text, &warnings), text, warnings);
  }
  if (analyze->parsed()) {
    auto c = build_config(common, {{"models", models}, {"outlier_threshold", threshold}});
    return finish(jc_cmd_analyze(c.get(), dataset.empty() ? nullptr : dataset.c_str(), &text, &warnings), text,
                  warnings);
  }
  if (sample->parsed()) {
    auto c = build_config(common, {{"sample_size", sample_size}, {"seed", seed}});
    return finish(jc_cmd_sample(c.get(), records.empty() ? nullptr : records.c_str(), &text, &warnings), text,
                  warnings);
  }
  if (reliability->parsed()) {
    auto c = build_config(common, {{"legal_basis_match", match}});
    std::vector<const char*> paths, names;
    for (size_t i = 0; i < worksheets.size(); ++i) {
      paths.push_back(worksheets[i].c_str());
      names.push_back(i < headings.size() ? headings[i].c_str() : nullptr);
    }
    return finish(jc_cmd_reliability(c.get(), paths.data(), names.data(), paths.size(), &text, &warnings), text,
                  warnings);
  }
  if (chisq->parsed()) {
    auto c = build_config(common, {});
    return finish(jc_cmd_chisq(c.get(), term.c_str(), split.c_str(), &text, &warnings), text, warnings);
  }
  auto c = build_config(common, {{"check_date", check_date}});
  return finish(jc_cmd_lint(c.get(), &text, &warnings), text, warnings);
}
