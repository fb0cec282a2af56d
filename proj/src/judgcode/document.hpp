#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace judgcode {

using Date = std::chrono::year_month_day;

enum class DocType { judgment, ruling };

struct JudgmentMeta {
  std::string ecli;
  Date decision_date{};
  std::string court;
  std::string case_number;
  DocType doc_type = DocType::judgment;
  std::string doc_type_label;             // as published, e.g. "Uitspraak"
  std::vector<std::string> jurisdictions;  // Rechtsgebieden
  std::string location;                    // Locatie
  std::string language;
  std::optional<std::string> press_release;  // Inhoudsindicatie, normalized

  int decision_year() const { return static_cast<int>(decision_date.year()); }
};

// An element of the judgment body, with its content span in plain_text.
struct TagSpan {
  std::string name;  // local name, e.g. "section", "title"
  int depth = 0;     // 0 = direct child of the body element
  int parent = -1;   // index into the tag list, -1 for top level
  size_t begin = 0;
  size_t end = 0;
};

enum class ChapterKind {
  legal_basis,
  decision,
  evidence,
  indictment,
  personal_circumstances,
  sentencing_motivation,
  other,
};

std::string_view to_string(ChapterKind kind);
std::optional<ChapterKind> chapter_kind_from_string(std::string_view s);

struct Chapter {
  ChapterKind kind = ChapterKind::other;
  std::string raw_title;
  size_t begin = 0;  // span into plain_text
  size_t end = 0;
};

struct JudgmentDocument {
  JudgmentMeta meta;
  std::string plain_text;
  std::vector<TagSpan> tags;
  std::vector<Chapter> chapters;
  std::string source_bytes_hash;  // hex SHA-256 of the raw XML
  bool metadata_only = false;

  std::string_view body(const Chapter& c) const {
    return std::string_view(plain_text).substr(c.begin, c.end - c.begin);
  }
};

// "dd-mm-yyyy" as used in coded records.
std::string format_dutch_date(const Date& d);
std::string format_iso_date(const Date& d);
// Accepts "yyyy-mm-dd" or "dd-mm-yyyy".
std::optional<Date> parse_date(std::string_view s);

}  // namespace judgcode
