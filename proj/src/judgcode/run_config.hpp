#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "judgcode/codebook.hpp"
#include "judgcode/dictionaries.hpp"
#include "judgcode/document.hpp"
#include "judgcode/ingest.hpp"
#include "judgcode/lint.hpp"
#include "judgcode/segmenter.hpp"
#include "judgcode/stats/reliability.hpp"
#include "judgcode/text.hpp"

namespace judgcode {

// Settings shared by every command. Empty table paths select the compiled-in
// tables.
struct RunConfig {
  std::string source;                 // endpoint URL or directory of XML files
  std::filesystem::path corpus_dir;   // stored XML, input of `code` and `lint`
  std::filesystem::path output_dir = ".";
  std::uint64_t seed = 20210101;
  std::optional<Date> date_from;
  std::optional<Date> date_to;
  std::vector<int> models = {1, 2, 3};
  std::vector<std::pair<std::string, std::string>> query;  // extra index parameters
  int threads = 0;                                         // 0: hardware concurrency
  long sample_size = 275;
  std::optional<Date> check_date;  // lint report date; today when absent
  stats::LegalBasisMatch legal_basis_match = stats::LegalBasisMatch::exact;
  double outlier_threshold = 3.0;

  std::filesystem::path statute_table;
  std::filesystem::path statute_articles;
  std::filesystem::path lint_rules;
  std::filesystem::path heading_synonyms;
  std::filesystem::path juvenile_markers;
  std::filesystem::path fold_table;
  DictionaryPaths dictionaries;

  // Relative paths in the file are resolved against its directory.
  static RunConfig from_json_file(const std::filesystem::path& path);
  static RunConfig from_json_text(const std::string& text, const std::filesystem::path& base = {});

  // Sets one field from its text form, as given on the command line. Keys are
  // the JSON keys, plus date_from, date_to, "query" as "name=value" (appends)
  // and "dictionaries.<name>". Throws ConfigError.
  void set(const std::string& key, const std::string& value);
  void validate() const;
};

// Every table a run needs, loaded and validated before any work starts.
struct Resources {
  FoldTable fold;
  segment::HeadingTable headings;
  ingest::JuvenileMarkers juvenile;
  Dictionaries dictionaries;
  codebook::StatuteMaxTable statutes;
  lint::ArticleBounds article_bounds;
  lint::RuleSet lint_rules;

  static Resources load(const RunConfig& config);
};

}  // namespace judgcode
