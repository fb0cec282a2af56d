#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "judgcode/codebook.hpp"
#include "judgcode/extract.hpp"
#include "judgcode/lint.hpp"
#include "judgcode/reports.hpp"
#include "judgcode/run_config.hpp"

namespace judgcode::commands {

// What a command prints; files go to the output directory.
struct CommandOutput {
  std::string text;
  std::vector<std::string> warnings;
};

// *.xml files of a directory, sorted. Throws IoError when it is unreadable.
std::vector<std::filesystem::path> list_corpus(const std::filesystem::path& dir);

enum class DocStatus { coded, excluded_metadata_only, excluded_minor, duplicate, failed };
std::string_view to_string(DocStatus s);

struct DocOutcome {
  std::string file;
  std::string ecli;  // empty when parsing failed
  DocStatus status = DocStatus::failed;
  std::string error;
  std::optional<extract::CodedRecord> record;
  std::vector<lint::LintIssue> issues;
  bool term_present = false;  // set by a document hook
};

// Runs on each retained document after coding, on a worker thread.
using DocHook = std::function<void(const JudgmentDocument&, DocOutcome&)>;

struct CodingSummary {
  size_t files = 0;
  size_t coded = 0;
  size_t excluded_metadata_only = 0;
  size_t excluded_minor = 0;
  size_t duplicates = 0;
  size_t failed = 0;
  size_t decision_coded = 0;
  size_t legal_basis_coded = 0;
  double decision_rate = 0;     // percent of coded documents
  double legal_basis_rate = 0;  // percent of coded documents
};

struct CodedCorpus {
  std::vector<DocOutcome> outcomes;  // sorted by ECLI, failures last by file name
  std::vector<extract::CodedRecord> records;
  CodingSummary summary;
};

// Parses, segments, filters and codes every document.
CodedCorpus code_corpus(const std::filesystem::path& dir, const Resources& res, int threads,
                        const DocHook& hook = {});

std::string coding_log_jsonl(const std::vector<DocOutcome>& outcomes);
std::string summary_text(const CodingSummary& s);

reports::AnalysisResult run_analysis(const std::vector<codebook::AnalysisRow>& rows, const std::vector<int>& models,
                                     double outlier_threshold = 3.0);

// Dataset flag column by name (special_skills, female, ...).
std::optional<int> flag_value(const codebook::AnalysisRow& row, const std::string& name);

CommandOutput cmd_fetch(const RunConfig& config);
CommandOutput cmd_code(const RunConfig& config);
CommandOutput cmd_analyze(const RunConfig& config, const std::filesystem::path& dataset);
CommandOutput cmd_sample(const RunConfig& config, const std::filesystem::path& records);
CommandOutput cmd_reliability(const RunConfig& config, const std::vector<std::filesystem::path>& worksheets,
                              const std::vector<std::string>& headings);
// Empty `term` selects the large-scale dictionary.
CommandOutput cmd_chisq(const RunConfig& config, const std::string& term, const std::string& split);
CommandOutput cmd_lint(const RunConfig& config);

}  // namespace judgcode::commands
