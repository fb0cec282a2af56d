#include "judgcode/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include <fmt/format.h>
#include <json.hpp>

#include "judgcode/dataset_io.hpp"
#include "judgcode/errors.hpp"
#include "judgcode/fetch.hpp"
#include "judgcode/ingest.hpp"
#include "judgcode/record_json.hpp"
#include "judgcode/segmenter.hpp"
#include "judgcode/stats/diagnostics.hpp"
#include "judgcode/stats/sampling.hpp"
#include "judgcode/tables.hpp"

namespace judgcode::commands {

namespace fs = std::filesystem;
using codebook::AnalysisRow;

std::vector<fs::path> list_corpus(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("corpus directory not found: " + dir.string());
  std::vector<fs::path> files;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec))
    if (it->is_regular_file() && it->path().extension() == ".xml") files.push_back(it->path());
  if (ec) throw IoError(fmt::format("cannot read {}: {}", dir.string(), ec.message()));
  std::sort(files.begin(), files.end());
  return files;
}

namespace {

// Applies `fn` to every file on `threads` workers; results keep file order.
template <class T>
std::vector<T> map_files(const std::vector<fs::path>& files, int threads,
                         const std::function<T(const fs::path&)>& fn) {
  std::vector<T> out(files.size());
  size_t workers = threads > 0 ? static_cast<size_t>(threads) : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<size_t>(1, files.size()));
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (size_t i; (i = next++) < files.size();) {
      try {
        out[i] = fn(files[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace

std::string_view to_string(DocStatus s) {
  switch (s) {
    case DocStatus::coded: return "coded";
    case DocStatus::excluded_metadata_only: return "excluded_metadata_only";
    case DocStatus::excluded_minor: return "excluded_minor";
    case DocStatus::duplicate: return "duplicate";
    case DocStatus::failed: return "failed";
  }
  return "";
}

CodedCorpus code_corpus(const fs::path& dir, const Resources& res, int threads, const DocHook& hook) {
  auto files = list_corpus(dir);
  std::function<DocOutcome(const fs::path&)> fn = [&](const fs::path& file) {
    DocOutcome o;
    o.file = file.filename().string();
    try {
      JudgmentDocument doc = ingest::normalize_judgment(read_file(file), res.fold);
      o.ecli = doc.meta.ecli;
      segment::apply(doc, res.headings);
      switch (ingest::classify(doc, res.juvenile)) {
        case ingest::Exclusion::metadata_only: o.status = DocStatus::excluded_metadata_only; return o;
        case ingest::Exclusion::minor: o.status = DocStatus::excluded_minor; return o;
        case ingest::Exclusion::retained: break;
      }
      o.record = extract::code_judgment(doc, res.dictionaries);
      o.status = DocStatus::coded;
      if (hook) hook(doc, o);
    } catch (const Error& e) {
      o.status = DocStatus::failed;
      o.error = e.what();
      o.record.reset();
    }
    return o;
  };

  CodedCorpus c;
  c.outcomes = map_files(files, threads, fn);
  std::stable_sort(c.outcomes.begin(), c.outcomes.end(), [](const DocOutcome& a, const DocOutcome& b) {
    if (a.ecli.empty() != b.ecli.empty()) return b.ecli.empty();
    if (a.ecli != b.ecli) return a.ecli < b.ecli;
    return a.file < b.file;
  });
  auto& s = c.summary;
  s.files = files.size();
  std::set<std::string> seen;
  for (auto& o : c.outcomes) {
    if (!o.ecli.empty() && o.status != DocStatus::failed && !seen.insert(o.ecli).second) {
      o.status = DocStatus::duplicate;
      o.record.reset();
      o.issues.clear();
    }
    switch (o.status) {
      case DocStatus::coded:
        ++s.coded;
        if (o.record->decision_status == extract::DecisionStatus::coded) ++s.decision_coded;
        if (!o.record->legal_basis.entries.empty()) ++s.legal_basis_coded;
        c.records.push_back(*o.record);
        break;
      case DocStatus::excluded_metadata_only: ++s.excluded_metadata_only; break;
      case DocStatus::excluded_minor: ++s.excluded_minor; break;
      case DocStatus::duplicate: ++s.duplicates; break;
      case DocStatus::failed: ++s.failed; break;
    }
  }
  if (s.coded) {
    s.decision_rate = 100.0 * static_cast<double>(s.decision_coded) / static_cast<double>(s.coded);
    s.legal_basis_rate = 100.0 * static_cast<double>(s.legal_basis_coded) / static_cast<double>(s.coded);
  }
  return c;
}

std::string coding_log_jsonl(const std::vector<DocOutcome>& outcomes) {
  std::string out;
  for (const auto& o : outcomes) {
    nlohmann::ordered_json j;
    j["file"] = o.file;
    j["ecli"] = o.ecli.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(o.ecli);
    j["status"] = to_string(o.status);
    if (!o.error.empty()) j["error"] = o.error;
    if (o.record) {
      const auto& r = *o.record;
      j["decision_status"] = extract::to_string(r.decision_status);
      j["decisions"] = r.decisions.size();
      j["legal_basis_chapter"] = r.legal_basis.chapter_found;
      j["legal_basis_entries"] = r.legal_basis.entries.size();
      j["legal_basis_findings"] = r.legal_basis.findings.size();
      j["birth_year"] = r.offender.birth_year ? nlohmann::ordered_json(*r.offender.birth_year) : nullptr;
      j["empty_body"] = r.empty_body;
    }
    out += j.dump() + "\n";
  }
  return out;
}

std::string summary_text(const CodingSummary& s) {
  std::string out = fmt::format("files: {}\ncoded: {}\n", s.files, s.coded);
  out += fmt::format("excluded (metadata only): {}\nexcluded (minor): {}\n", s.excluded_metadata_only, s.excluded_minor);
  if (s.duplicates) out += fmt::format("duplicates: {}\n", s.duplicates);
  out += fmt::format("failed: {}\n", s.failed);
  out += fmt::format("decision coded: {} ({:.1f}%)\n", s.decision_coded, s.decision_rate);
  out += fmt::format("legal basis coded: {} ({:.1f}%)\n", s.legal_basis_coded, s.legal_basis_rate);
  return out;
}

std::optional<int> flag_value(const AnalysisRow& r, const std::string& name) {
  if (name == "guidelines") return r.guidelines;
  if (name == "prosecution_expertise") return r.prosecution_expertise;
  if (name == "born_abroad") return r.born_abroad;
  if (name == "female") return r.female;
  if (name == "repeat_offender") return r.repeat_offender;
  if (name == "multiple_victims") return r.multiple_victims;
  if (name == "basic_skills") return r.basic_skills;
  if (name == "special_skills") return r.special_skills;
  throw InvalidArgument("not a dataset flag: " + name);
}

namespace {

std::vector<size_t> columns_with_prefix(const std::vector<std::string>& names, const std::string& prefix) {
  std::vector<size_t> out;
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i].rfind(prefix, 0) == 0) out.push_back(i);
  return out;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError(fmt::format("cannot create {}: {}", dir.string(), ec.message()));
}

Date today() {
  auto now = std::chrono::system_clock::now();
  return Date{std::chrono::floor<std::chrono::days>(now)};
}

std::vector<AnalysisRow> read_dataset(const fs::path& path) {
  std::string text = read_file(path);
  if (path.extension() == ".json") return dataset::from_json(text);
  return dataset::from_csv(text);
}

}  // namespace

reports::AnalysisResult run_analysis(const std::vector<AnalysisRow>& rows, const std::vector<int>& models,
                                     double outlier_threshold) {
  reports::AnalysisResult a;
  a.hierarchy = stats::fit_hierarchy(rows, models);
  a.outlier_threshold = outlier_threshold;
  a.descriptives = stats::describe_rows(rows);

  const auto& fit = a.hierarchy.fits.back();
  const auto& design = a.hierarchy.designs.back();
  try {
    a.durbin_watson = stats::durbin_watson(fit.residuals);
  } catch (const DomainError&) {
  }
  a.tolerances = stats::tolerances(design.X, design.names);

  std::vector<double> outlier_months;
  for (size_t i : stats::studentized_outliers(fit, outlier_threshold)) {
    a.outliers.push_back(design.eclis[i]);
    outlier_months.push_back(std::exp(design.y(static_cast<Eigen::Index>(i))));
  }
  if (!outlier_months.empty()) {
    double sum = 0;
    for (double m : outlier_months) sum += m;
    a.outlier_mean_prison_months = sum / static_cast<double>(outlier_months.size());
  }

  struct Pair {
    const char* label;
    const char* left;
    const char* right;
    int model;
  };
  const Pair pairs[] = {
      {"max_bucket x prosecution_expertise", "max_bucket[", "prosecution_expertise", 2},
      {"offence_class x special_skills", "offence_class[", "special_skills", 3},
      {"age_bucket x repeat_offender", "age_bucket[", "repeat_offender", 3},
  };
  const int largest = a.hierarchy.models.back();
  for (const auto& p : pairs) {
    if (largest < p.model) continue;
    auto left = columns_with_prefix(design.names, p.left);
    auto right = columns_with_prefix(design.names, p.right);
    try {
      a.interactions.push_back({p.label, stats::interaction_test(design.X, design.y, design.names, left, right)});
    } catch (const Error& e) {
      a.interaction_errors.push_back(fmt::format("{}: {}", p.label, e.what()));
    }
  }

  const std::vector<std::string> vars = {"max_prison_months", "n_offences",       "guidelines",
                                         "prosecution_expertise", "age",          "born_abroad",
                                         "female",            "repeat_offender",  "multiple_victims",
                                         "basic_skills",      "special_skills"};
  Eigen::MatrixXd data(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(vars.size()));
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    auto row = static_cast<Eigen::Index>(i);
    data(row, 0) = r.max_prison_months.value_or(nan);
    data(row, 1) = r.n_offences ? *r.n_offences : nan;
    data(row, 4) = r.age ? *r.age : nan;
    for (size_t v = 0; v < vars.size(); ++v) {
      if (v == 0 || v == 1 || v == 4) continue;
      auto f = flag_value(r, vars[v]);
      data(row, static_cast<Eigen::Index>(v)) = f ? *f : nan;
    }
  }
  a.correlations = stats::correlation_matrix(data, vars);
  return a;
}

CommandOutput cmd_fetch(const RunConfig& config) {
  if (!config.date_from || !config.date_to) throw ConfigError("fetch needs a date range");
  fetch::FetchOptions o;
  o.source = config.source.empty() ? fetch::default_endpoint() : config.source;
  o.from = *config.date_from;
  o.to = *config.date_to;
  o.out = config.corpus_dir.empty() ? config.output_dir / "corpus" : config.corpus_dir;
  o.params = config.query;
  auto r = fetch::fetch_judgments(o);
  CommandOutput out;
  out.text = fmt::format("stored: {}\nwritten: {}\nunchanged: {}\nbytes written: {}\nfailures: {}\n", r.stored,
                         r.written, r.skipped, r.bytes_written, r.failures.size());
  out.warnings = r.failures;
  return out;
}

CommandOutput cmd_code(const RunConfig& config) {
  config.validate();
  Resources res = Resources::load(config);
  if (config.corpus_dir.empty()) throw ConfigError("code needs corpus_dir");
  auto corpus = code_corpus(config.corpus_dir, res, config.threads);

  std::vector<AnalysisRow> rows;
  for (const auto& r : corpus.records) rows.push_back(codebook::derive_row(r, res.statutes));
  ensure_dir(config.output_dir);
  write_file(config.output_dir / "records.json", records_to_json_text(corpus.records));
  write_file(config.output_dir / "dataset.csv", dataset::to_csv(rows));
  write_file(config.output_dir / "dataset.json", dataset::to_json(rows));
  write_file(config.output_dir / "coding_log.jsonl", coding_log_jsonl(corpus.outcomes));

  CommandOutput out;
  out.text = summary_text(corpus.summary);
  for (const auto& o : corpus.outcomes)
    if (o.status == DocStatus::failed) out.warnings.push_back(fmt::format("{}: {}", o.file, o.error));
  return out;
}

CommandOutput cmd_analyze(const RunConfig& config, const fs::path& dataset_path) {
  config.validate();
  fs::path path = dataset_path.empty() ? config.output_dir / "dataset.csv" : dataset_path;
  auto rows = read_dataset(path);
  auto a = run_analysis(rows, config.models, config.outlier_threshold);

  ensure_dir(config.output_dir);
  std::string text = reports::regression_text(a);
  write_file(config.output_dir / "regression.txt", text);
  write_file(config.output_dir / "regression.json", reports::regression_json(a).dump(2) + "\n");
  write_file(config.output_dir / "descriptives.txt", reports::descriptives_text(a.descriptives));
  write_file(config.output_dir / "descriptives.json", reports::descriptives_json(a.descriptives).dump(2) + "\n");

  const auto& fit = a.hierarchy.fits.back();
  const auto& design = a.hierarchy.designs.back();
  Eigen::VectorXd t = stats::studentized_residuals(fit);
  std::string resid = "ecli,fitted,residual,studentized\n";
  for (Eigen::Index i = 0; i < fit.residuals.size(); ++i)
    resid += fmt::format("{},{},{},{}\n", dataset::csv_escape(design.eclis[static_cast<size_t>(i)]),
                         dataset::format_number(fit.fitted(i)), dataset::format_number(fit.residuals(i)),
                         std::isnan(t(i)) ? std::string() : dataset::format_number(t(i)));
  write_file(config.output_dir / "residuals.csv", resid);

  CommandOutput out;
  out.text = text;
  return out;
}

CommandOutput cmd_sample(const RunConfig& config, const fs::path& records_path) {
  config.validate();
  fs::path path = records_path.empty() ? config.output_dir / "records.json" : records_path;
  auto records = records_from_json_text(read_file(path));
  std::vector<stats::WorksheetRow> rows;
  CommandOutput out;
  if (config.sample_size == 0) {
    out.warnings.push_back("sample size is 0; the worksheet is empty");
  } else {
    std::vector<stats::SampleUnit> units;
    std::map<std::string, const extract::CodedRecord*> by_ecli;
    for (const auto& r : records) {
      if (r.empty_body) continue;
      units.push_back({r.meta.ecli, r.meta.court, r.meta.decision_year()});
      by_ecli[r.meta.ecli] = &r;
    }
    for (const auto& ecli : stats::stratified_sample(units, config.sample_size, config.seed))
      rows.push_back(stats::worksheet_row(*by_ecli.at(ecli)));
  }
  ensure_dir(config.output_dir);
  write_file(config.output_dir / "worksheet.csv", stats::worksheet_to_csv(rows));
  out.text = fmt::format("sampled {} of {} records (seed {})\n", rows.size(), records.size(), config.seed);
  return out;
}

CommandOutput cmd_reliability(const RunConfig& config, const std::vector<fs::path>& worksheets,
                              const std::vector<std::string>& headings) {
  if (worksheets.empty()) throw InvalidArgument("reliability needs at least one worksheet");
  std::vector<std::vector<stats::ReliabilityTally>> sets;
  size_t n = 0;
  for (const auto& w : worksheets) {
    auto rows = stats::worksheet_from_csv(read_file(w));
    if (sets.empty()) n = rows.size();
    else if (rows.size() != n) throw DataError("worksheets differ in row count");
    sets.push_back(stats::compare_worksheet(rows, config.legal_basis_match));
  }
  std::vector<std::string> names = headings;
  for (size_t i = names.size(); i < worksheets.size(); ++i) names.push_back(worksheets[i].stem().string());
  ensure_dir(config.output_dir);
  std::string text = reports::reliability_text(sets, names, n);
  write_file(config.output_dir / "reliability.txt", text);
  write_file(config.output_dir / "reliability.json", reports::reliability_json(sets, names, n).dump(2) + "\n");
  return {text, {}};
}

CommandOutput cmd_chisq(const RunConfig& config, const std::string& term, const std::string& split) {
  config.validate();
  Resources res = Resources::load(config);
  if (config.corpus_dir.empty()) throw ConfigError("chisq needs corpus_dir");
  (void)flag_value(AnalysisRow{}, split);  // validates the name early

  PhraseMatcher matcher;
  if (!term.empty()) matcher.add(term, 0);
  DocHook hook = [&](const JudgmentDocument& doc, DocOutcome& o) {
    if (term.empty()) {
      o.term_present = o.record->large_scale_mentioned;
      return;
    }
    TokenizedText body(doc.plain_text);
    TokenizedText summary(doc.meta.press_release.value_or(""));
    o.term_present = matcher.contains_any(body) || matcher.contains_any(summary);
  };
  auto corpus = code_corpus(config.corpus_dir, res, config.threads, hook);

  reports::ChiSquareReport r;
  r.term = term.empty() ? "large-scale dictionary" : term;
  r.split = split;
  for (const auto& o : corpus.outcomes) {
    if (o.status != DocStatus::coded) continue;
    auto flag = flag_value(codebook::derive_row(*o.record, res.statutes), split);
    if (!flag) continue;
    if (o.term_present) (*flag ? r.a : r.b)++;
    else (*flag ? r.c : r.d)++;
  }
  try {
    r.test = stats::chi_square_2x2(r.a, r.b, r.c, r.d);
  } catch (const DomainError& e) {
    throw DomainError(fmt::format("degenerate table [[{}, {}], [{}, {}]]: {}", r.a, r.b, r.c, r.d, e.what()));
  }
  r.percent_present = 100.0 * static_cast<double>(r.a) / static_cast<double>(r.a + r.b);
  r.percent_absent = 100.0 * static_cast<double>(r.c) / static_cast<double>(r.c + r.d);
  ensure_dir(config.output_dir);
  std::string text = reports::chisq_text(r);
  write_file(config.output_dir / "chisq.txt", text);
  write_file(config.output_dir / "chisq.json", reports::chisq_json(r).dump(2) + "\n");
  return {text, {}};
}

CommandOutput cmd_lint(const RunConfig& config) {
  config.validate();
  Resources res = Resources::load(config);
  if (config.corpus_dir.empty()) throw ConfigError("lint needs corpus_dir");
  lint::LintOptions options;
  options.rules = res.lint_rules;
  options.table = &res.statutes;
  options.bounds = &res.article_bounds;
  DocHook hook = [&](const JudgmentDocument& doc, DocOutcome& o) { o.issues = lint::lint_judgment(doc, *o.record, options); };
  auto corpus = code_corpus(config.corpus_dir, res, config.threads, hook);

  std::vector<lint::LintIssue> issues;
  for (const auto& o : corpus.outcomes) issues.insert(issues.end(), o.issues.begin(), o.issues.end());
  auto report = lint::aggregate(std::move(issues));
  Date checked = config.check_date.value_or(today());
  ensure_dir(config.output_dir);
  write_file(config.output_dir / "lint.csv", reports::lint_csv(report, checked));
  write_file(config.output_dir / "lint.json", reports::lint_json(report, checked).dump(2) + "\n");
  CommandOutput out;
  out.text = reports::lint_summary(report);
  for (const auto& o : corpus.outcomes)
    if (o.status == DocStatus::failed) out.warnings.push_back(fmt::format("{}: {}", o.file, o.error));
  return out;
}

}  // namespace judgcode::commands
