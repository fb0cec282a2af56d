#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "judgcode/document.hpp"
#include "judgcode/text.hpp"

namespace judgcode::ingest {

// Parses one open-data judgment XML document: captures the metadata, and
// converts the judgment body to normalized plain text while recording the
// element structure for the segmenter. Throws ParseError (with line/column)
// on ill-formed XML, a missing ECLI or an invalid decision date.
JudgmentDocument normalize_judgment(std::string_view xml, const FoldTable& fold = FoldTable::builtin());

std::string sha256_hex(std::string_view bytes);

// Signals that a judgment concerns a minor.
class JuvenileMarkers {
 public:
  static JuvenileMarkers parse(std::string_view tsv);
  static const JuvenileMarkers& builtin();

  bool matches(const JudgmentDocument& doc) const;

 private:
  PhraseMatcher vocabulary_;
  std::vector<std::string> statute_prefixes_;
  std::vector<std::string> subjects_;
};

enum class Exclusion { retained, metadata_only, minor };

// Decides whether a segmented document is kept for analysis.
Exclusion classify(const JudgmentDocument& doc, const JuvenileMarkers& markers = JuvenileMarkers::builtin());

struct FilterResult {
  std::vector<JudgmentDocument> retained;
  std::vector<std::string> excluded_metadata_only;  // ECLIs
  std::vector<std::string> excluded_minor;
  size_t total = 0;
};

// Removes metadata-only judgments and judgments concerning minors. Documents
// must already be segmented.
FilterResult filter_corpus(std::vector<JudgmentDocument> corpus,
                           const JuvenileMarkers& markers = JuvenileMarkers::builtin());

}  // namespace judgcode::ingest
