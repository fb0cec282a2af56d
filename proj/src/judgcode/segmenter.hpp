#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "judgcode/document.hpp"

namespace judgcode::segment {

// Heading pattern -> chapter kind, from the heading synonym config.
class HeadingTable {
 public:
  static HeadingTable parse(std::string_view tsv);
  static const HeadingTable& builtin();

  // Kind of a raw heading, or nullopt when no pattern matches.
  std::optional<ChapterKind> classify(std::string_view raw_title) const;
  size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    std::string pattern;
    ChapterKind kind;
    bool exact;
  };
  std::vector<Entry> entries_;
};

// Lower-cased title without leading enumeration ("3.", "4.1", "IV.", "b)")
// or trailing punctuation.
std::string clean_title(std::string_view raw_title);

// Chapters from section tags, else from title/bridgehead/emphasis headings,
// else one chapter of kind other covering the body.
std::vector<Chapter> segment(const JudgmentDocument& doc, const HeadingTable& table = HeadingTable::builtin());

// Sets doc.chapters.
void apply(JudgmentDocument& doc, const HeadingTable& table = HeadingTable::builtin());

std::optional<Chapter> chapter_lookup(const JudgmentDocument& doc, ChapterKind kind);

}  // namespace judgcode::segment
