#include "judgcode/text.hpp"

#include <algorithm>

#include "judgcode/errors.hpp"
#include "judgcode/tables.hpp"

namespace judgcode {

namespace {

// Decodes one UTF-8 sequence at s[i]. Invalid bytes decode as themselves with
// length 1 and valid = false.
struct Decoded {
  char32_t cp;
  size_t len;
  bool valid;
};

Decoded decode_utf8(std::string_view s, size_t i) {
  auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1, true};
  size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {b0, 1, false};
  }
  if (i + len > s.size()) return {b0, 1, false};
  for (size_t k = 1; k < len; ++k) {
    auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) return {b0, 1, false};
    cp = (cp << 6) | (b & 0x3F);
  }
  return {cp, len, true};
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

FoldTable FoldTable::parse(std::string_view tsv) {
  FoldTable table;
  for (const auto& row : parse_delimited(tsv)) {
    if (row.fields.size() < 2 || row.fields[0].empty())
      throw ConfigError("fold table line " + std::to_string(row.line) + ": expected <char>\\t<replacement>");
    const std::string& key = row.fields[0];
    Decoded d = decode_utf8(key, 0);
    if (!d.valid || d.len != key.size())
      throw ConfigError("fold table line " + std::to_string(row.line) + ": key must be one code point");
    table.map_[d.cp] = row.fields[1];
  }
  return table;
}

const FoldTable& FoldTable::builtin() {
  static const FoldTable table = parse(load_config_text({}, "fold_table.tsv"));
  return table;
}

const std::string* FoldTable::lookup(char32_t cp) const {
  auto it = map_.find(cp);
  return it == map_.end() ? nullptr : &it->second;
}

void TextBuilder::put(char c) {
  if (is_space(c)) {
    if (!out_.empty()) pending_space_ = true;
    return;
  }
  if (pending_space_) {
    out_.push_back(' ');
    pending_space_ = false;
  }
  out_.push_back(c);
}

void TextBuilder::append(std::string_view utf8) {
  size_t i = 0;
  while (i < utf8.size()) {
    Decoded d = decode_utf8(utf8, i);
    if (!d.valid || d.cp < 0x80) {
      put(utf8[i]);
      i += 1;
      continue;
    }
    if (d.cp >= 0x0300 && d.cp <= 0x036F) {
      i += d.len;
      continue;
    }
    if (const std::string* rep = fold_->lookup(d.cp)) {
      for (char c : *rep) put(c);
    } else {
      for (size_t k = 0; k < d.len; ++k) put(utf8[i + k]);
    }
    i += d.len;
  }
}

std::string normalize_text(std::string_view utf8, const FoldTable& fold) {
  TextBuilder b(fold);
  b.append(utf8);
  return b.take();
}

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

TokenizedText::TokenizedText(std::string_view text) : lower_(to_lower_ascii(text)) {
  size_t i = 0;
  const size_t n = lower_.size();
  while (i < n) {
    while (i < n && !is_word_char(lower_[i])) ++i;
    if (i >= n) break;
    size_t b = i;
    while (i < n && is_word_char(lower_[i])) ++i;
    tokens_.push_back({b, i});
  }
}

size_t TokenizedText::first_token_at(size_t offset) const {
  auto it = std::lower_bound(tokens_.begin(), tokens_.end(), offset,
                             [](const Token& t, size_t off) { return t.begin < off; });
  return static_cast<size_t>(it - tokens_.begin());
}

void PhraseMatcher::add(std::string_view phrase, int label) {
  Phrase p;
  p.label = label;
  std::string_view body = phrase;
  if (!body.empty() && body.back() == '*') {
    p.prefix_last = true;
    body.remove_suffix(1);
  }
  TokenizedText t(body);
  for (size_t i = 0; i < t.tokens().size(); ++i) p.tokens.emplace_back(t.token(i));
  if (p.tokens.empty()) return;
  size_t idx = phrases_.size();
  if (p.prefix_last && p.tokens.size() == 1)
    prefix_first_.push_back(idx);
  else
    by_first_token_[p.tokens.front()].push_back(idx);
  phrases_.push_back(std::move(p));
}

bool PhraseMatcher::matches_at(const Phrase& p, const TokenizedText& text, size_t tok) const {
  if (tok + p.tokens.size() > text.tokens().size()) return false;
  for (size_t k = 0; k < p.tokens.size(); ++k) {
    std::string_view have = text.token(tok + k);
    const std::string& want = p.tokens[k];
    bool last = k + 1 == p.tokens.size();
    if (last && p.prefix_last) {
      if (have.substr(0, want.size()) != want) return false;
    } else if (have != want) {
      return false;
    }
  }
  return true;
}

std::vector<PhraseMatcher::Match> PhraseMatcher::find_all(const TokenizedText& text, size_t begin,
                                                          size_t end) const {
  std::vector<Match> out;
  const auto& toks = text.tokens();
  for (size_t i = text.first_token_at(begin); i < toks.size() && toks[i].begin < end; ++i) {
    auto emit = [&](size_t idx) {
      const Phrase& p = phrases_[idx];
      if (matches_at(p, text, i))
        out.push_back({p.label, toks[i].begin, toks[i + p.tokens.size() - 1].end});
    };
    auto it = by_first_token_.find(std::string(text.token(i)));
    if (it != by_first_token_.end())
      for (size_t idx : it->second) emit(idx);
    for (size_t idx : prefix_first_) emit(idx);
  }
  return out;
}

bool PhraseMatcher::contains_any(const TokenizedText& text, size_t begin, size_t end) const {
  return !find_all(text, begin, end).empty();
}

}  // namespace judgcode
