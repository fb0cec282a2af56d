#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "judgcode/numerals.hpp"
#include "judgcode/text.hpp"

namespace judgcode {

// Labelled term lists ("<label>\t<term>") or plain term lists. Labels are
// reported in the order they first appear in the file.
class CategoryDictionary {
 public:
  static CategoryDictionary parse(std::string_view tsv, bool labelled, const std::string& name);

  const std::vector<std::string>& labels() const { return labels_; }
  size_t term_count() const { return terms_; }

  // Labels with at least one hit in [begin, end), in config order.
  std::vector<std::string> find(const TokenizedText& text, size_t begin = 0,
                                size_t end = std::string::npos) const;
  bool any(const TokenizedText& text, size_t begin = 0, size_t end = std::string::npos) const {
    return matcher_.contains_any(text, begin, end);
  }
  const PhraseMatcher& matcher() const { return matcher_; }

 private:
  std::vector<std::string> labels_;
  PhraseMatcher matcher_;
  size_t terms_ = 0;
};

// Statute identifiers keyed by their spellings.
class StatuteAliases {
 public:
  static StatuteAliases parse(std::string_view tsv);

  // Longest alias starting at token `tok`: {identifier, token count}.
  std::optional<std::pair<std::string, size_t>> match(const TokenizedText& text, size_t tok) const;
  bool known(std::string_view identifier) const;

 private:
  struct Alias {
    std::vector<std::string> tokens;
    std::string identifier;
  };
  std::vector<Alias> aliases_;  // longest first
};

// Every config path may be empty to use the compiled-in table.
struct DictionaryPaths {
  std::filesystem::path basic_terms;
  std::filesystem::path special_terms;
  std::filesystem::path prosecution_expertise;
  std::filesystem::path detection_methods;
  std::filesystem::path guidelines;
  std::filesystem::path large_scale_terms;
  std::filesystem::path female_markers;
  std::filesystem::path recidivism_phrases;
  std::filesystem::path foreign_countries;
  std::filesystem::path misspellings;
  std::filesystem::path statute_aliases;
};

// Immutable after load; shared read-only across worker threads.
struct Dictionaries {
  CategoryDictionary basic_terms;
  CategoryDictionary special_terms;
  CategoryDictionary prosecution_expertise;
  CategoryDictionary detection_methods;
  CategoryDictionary guidelines;
  CategoryDictionary large_scale_terms;
  CategoryDictionary female_markers;
  CategoryDictionary recidivism;  // labels first_offender / repeat_offender
  CategoryDictionary countries;   // labels domestic / foreign
  numerals::MisspellingTable misspellings;
  StatuteAliases statute_aliases;

  static Dictionaries load(const DictionaryPaths& paths);
  static const Dictionaries& builtin();
};

}  // namespace judgcode
