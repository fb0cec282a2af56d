#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace judgcode::numerals {

// Substring replacements applied to a number word before parsing.
class MisspellingTable {
 public:
  static MisspellingTable parse(std::string_view tsv);
  static const MisspellingTable& builtin();

  std::string apply(std::string_view word) const;
  size_t size() const { return rules_.size(); }

 private:
  std::vector<std::pair<std::string, std::string>> rules_;  // longest variant first
};

// Dutch cardinal words, compounds and "en"-joined tens, up to 999999.
// Spaces and hyphens between parts are ignored: "tweehonderd veertig" -> 240.
std::optional<long> parse_dutch_number(std::string_view text,
                                       const MisspellingTable& misspellings = MisspellingTable::builtin());

// English cardinal words: "thirty", "one hundred and eighty", "twenty-four".
std::optional<long> parse_english_number(std::string_view text);

// Dutch first, then English.
std::optional<long> parse_number_words(std::string_view text,
                                       const MisspellingTable& misspellings = MisspellingTable::builtin());

}  // namespace judgcode::numerals
