#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace judgcode {

// Code point -> ASCII replacement. Combining diacritical marks are always
// dropped; unmapped code points pass through unchanged.
class FoldTable {
 public:
  static FoldTable parse(std::string_view tsv);
  static const FoldTable& builtin();

  const std::string* lookup(char32_t cp) const;
  size_t size() const { return map_.size(); }

 private:
  std::unordered_map<char32_t, std::string> map_;
};

// Incremental builder for normalized text: folds diacritics, collapses
// whitespace runs to one space and never emits leading or trailing spaces.
class TextBuilder {
 public:
  explicit TextBuilder(const FoldTable& fold = FoldTable::builtin()) : fold_(&fold) {}

  void append(std::string_view utf8);
  // A markup boundary: separates the text on either side with a space.
  void boundary() { pending_space_ = !out_.empty(); }
  // Offset at which the next non-space character will be written.
  size_t next_offset() const { return out_.size() + (pending_space_ ? 1 : 0); }
  size_t size() const { return out_.size(); }
  const std::string& str() const { return out_; }
  std::string take() { pending_space_ = false; return std::move(out_); }

 private:
  void put(char c);

  const FoldTable* fold_;
  std::string out_;
  bool pending_space_ = false;
};

// Fold + collapse + trim. Idempotent.
std::string normalize_text(std::string_view utf8, const FoldTable& fold = FoldTable::builtin());

std::string to_lower_ascii(std::string_view s);
std::string trim(std::string_view s);
inline bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Lower-cased text split into maximal [a-z0-9] runs.
class TokenizedText {
 public:
  struct Token {
    size_t begin;
    size_t end;
  };

  explicit TokenizedText(std::string_view text);

  const std::string& lower() const { return lower_; }
  const std::vector<Token>& tokens() const { return tokens_; }
  std::string_view token(size_t i) const {
    return std::string_view(lower_).substr(tokens_[i].begin, tokens_[i].end - tokens_[i].begin);
  }
  // Index of the first token starting at or after `offset`.
  size_t first_token_at(size_t offset) const;

 private:
  std::string lower_;
  std::vector<Token> tokens_;
};

// Word-bounded, case-insensitive phrase search. A phrase is a token sequence;
// a trailing '*' lets its last token match as a prefix. Punctuation between
// tokens is not significant.
class PhraseMatcher {
 public:
  struct Match {
    int label;
    size_t char_begin;
    size_t char_end;
  };

  void add(std::string_view phrase, int label);
  bool empty() const { return phrases_.empty(); }

  // All matches whose first token starts within [begin, end) of the text, in
  // text order. Overlapping matches for different phrases are all reported.
  std::vector<Match> find_all(const TokenizedText& text, size_t begin = 0,
                              size_t end = std::string::npos) const;
  bool contains_any(const TokenizedText& text, size_t begin = 0,
                    size_t end = std::string::npos) const;

 private:
  struct Phrase {
    std::vector<std::string> tokens;
    bool prefix_last = false;
    int label = 0;
  };
  bool matches_at(const Phrase& p, const TokenizedText& text, size_t tok) const;

  std::vector<Phrase> phrases_;
  std::unordered_map<std::string, std::vector<size_t>> by_first_token_;
  std::vector<size_t> prefix_first_;  // single-token prefix phrases
};

}  // namespace judgcode
