#include "judgcode/segmenter.hpp"

#include <algorithm>

#include "judgcode/errors.hpp"
#include "judgcode/tables.hpp"
#include "judgcode/text.hpp"

namespace judgcode::segment {

HeadingTable HeadingTable::parse(std::string_view tsv) {
  HeadingTable t;
  for (const auto& row : parse_delimited(tsv)) {
    if (row.fields.size() < 2)
      throw ConfigError("heading table line " + std::to_string(row.line) + ": expected <pattern>\\t<kind>");
    auto kind = chapter_kind_from_string(row.fields[1]);
    if (!kind)
      throw ConfigError("heading table line " + std::to_string(row.line) + ": unknown kind '" + row.fields[1] + "'");
    bool exact = false;
    if (row.fields.size() >= 3 && !row.fields[2].empty()) {
      if (row.fields[2] == "exact")
        exact = true;
      else if (row.fields[2] != "prefix")
        throw ConfigError("heading table line " + std::to_string(row.line) + ": match must be prefix or exact");
    }
    std::string pattern = to_lower_ascii(normalize_text(row.fields[0]));
    if (pattern.empty()) throw ConfigError("heading table line " + std::to_string(row.line) + ": empty pattern");
    t.entries_.push_back({std::move(pattern), *kind, exact});
  }
  return t;
}

const HeadingTable& HeadingTable::builtin() {
  static const HeadingTable t = parse(load_config_text({}, "heading_synonyms.tsv"));
  return t;
}

namespace {

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

bool is_roman(std::string_view s) {
  return !s.empty() && s.find_first_not_of("ivxlc") == std::string_view::npos;
}

// Length of a leading enumeration token plus following space, or 0.
size_t enumeration_length(std::string_view s) {
  size_t sp = s.find(' ');
  if (sp == std::string_view::npos) return 0;
  std::string_view tok = s.substr(0, sp);
  std::string_view core = tok;
  while (!core.empty() && (core.back() == '.' || core.back() == ')' || core.back() == ':')) core.remove_suffix(1);
  if (core.empty()) return 0;
  bool numeric = std::all_of(core.begin(), core.end(), [](char c) { return is_digit(c) || c == '.'; });
  bool marked = core.size() < tok.size();
  bool single_letter = core.size() == 1 && is_letter(core[0]) && marked;
  bool roman = is_roman(core) && marked;
  if (numeric || single_letter || roman) return sp + 1;
  return 0;
}

}  // namespace

std::string clean_title(std::string_view raw_title) {
  std::string s = to_lower_ascii(normalize_text(raw_title));
  std::string_view v(s);
  while (size_t n = enumeration_length(v)) v.remove_prefix(n);
  while (!v.empty() && !is_word_char(v.back()) && v.back() != ')') v.remove_suffix(1);
  return trim(v);
}

std::optional<ChapterKind> HeadingTable::classify(std::string_view raw_title) const {
  std::string title = clean_title(raw_title);
  if (title.empty()) return std::nullopt;
  const Entry* best = nullptr;
  for (const auto& e : entries_) {
    bool hit;
    if (e.exact) {
      hit = title == e.pattern;
    } else {
      hit = title.compare(0, e.pattern.size(), e.pattern) == 0 &&
            (title.size() == e.pattern.size() || !is_letter(title[e.pattern.size()]));
    }
    if (hit && (!best || e.pattern.size() > best->pattern.size())) best = &e;
  }
  if (!best) return std::nullopt;
  return best->kind;
}

namespace {

std::vector<std::vector<int>> children_of(const std::vector<TagSpan>& tags) {
  std::vector<std::vector<int>> kids(tags.size());
  for (size_t i = 0; i < tags.size(); ++i)
    if (tags[i].parent >= 0) kids[static_cast<size_t>(tags[i].parent)].push_back(static_cast<int>(i));
  return kids;
}

bool has_section_ancestor(const std::vector<TagSpan>& tags, int i) {
  for (int p = tags[i].parent; p >= 0; p = tags[p].parent)
    if (tags[p].name == "section") return true;
  return false;
}

struct Ctx {
  const JudgmentDocument& doc;
  const HeadingTable& table;
  std::vector<std::vector<int>> kids;
};

std::string section_title(const Ctx& c, int s) {
  for (int k : c.kids[s])
    if (c.doc.tags[k].name == "title") {
      const TagSpan& t = c.doc.tags[k];
      return c.doc.plain_text.substr(t.begin, t.end - t.begin);
    }
  return {};
}

std::vector<int> subsections(const Ctx& c, int s) {
  // Sections nested anywhere below s with no section in between.
  std::vector<int> out;
  std::vector<int> stack(c.kids[s].rbegin(), c.kids[s].rend());
  while (!stack.empty()) {
    int k = stack.back();
    stack.pop_back();
    if (c.doc.tags[k].name == "section") {
      out.push_back(k);
      continue;
    }
    stack.insert(stack.end(), c.kids[k].rbegin(), c.kids[k].rend());
  }
  return out;
}

bool any_known(const Ctx& c, int s) {
  if (c.table.classify(section_title(c, s))) return true;
  for (int k : subsections(c, s))
    if (any_known(c, k)) return true;
  return false;
}

// A section with a recognized title becomes one chapter; an unrecognized one
// is split into its subsections when any of those is recognized.
void collect_sections(const Ctx& c, int s, std::vector<Chapter>& out) {
  std::string title = section_title(c, s);
  auto kind = c.table.classify(title);
  const TagSpan& span = c.doc.tags[s];
  if (!kind) {
    auto subs = subsections(c, s);
    bool split = std::any_of(subs.begin(), subs.end(), [&](int k) { return any_known(c, k); });
    if (split) {
      for (int k : subs) collect_sections(c, k, out);
      return;
    }
  }
  if (span.end > span.begin) out.push_back({kind.value_or(ChapterKind::other), trim(title), span.begin, span.end});
}

std::vector<Chapter> from_sections(const Ctx& c) {
  std::vector<Chapter> out;
  bool informative = false;
  for (size_t i = 0; i < c.doc.tags.size(); ++i) {
    int s = static_cast<int>(i);
    if (c.doc.tags[i].name != "section" || has_section_ancestor(c.doc.tags, s)) continue;
    informative = informative || any_known(c, s);
    collect_sections(c, s, out);
  }
  if (!informative) return {};
  return out;
}

bool is_heading_tag(std::string_view name) { return name == "title" || name == "bridgehead"; }

std::vector<Chapter> from_headings(const Ctx& c) {
  struct Heading {
    size_t begin;
    std::string title;
    std::optional<ChapterKind> kind;
  };
  std::vector<Heading> heads;
  const auto& tags = c.doc.tags;
  for (size_t i = 0; i < tags.size(); ++i) {
    const TagSpan& t = tags[i];
    if (t.end <= t.begin || t.end - t.begin > 120) continue;
    std::string title = c.doc.plain_text.substr(t.begin, t.end - t.begin);
    if (is_heading_tag(t.name)) {
      if (t.parent >= 0 && is_heading_tag(tags[t.parent].name)) continue;
      heads.push_back({t.begin, title, c.table.classify(title)});
    } else if (t.name == "emphasis") {
      // Emphasis counts only as a recognized heading opening its block.
      bool opens_block = t.parent < 0 || tags[t.parent].begin == t.begin;
      if (t.parent >= 0 && is_heading_tag(tags[t.parent].name)) continue;
      auto kind = c.table.classify(title);
      if (opens_block && kind) heads.push_back({t.begin, title, kind});
    }
  }
  std::sort(heads.begin(), heads.end(), [](const Heading& a, const Heading& b) { return a.begin < b.begin; });
  heads.erase(std::unique(heads.begin(), heads.end(),
                          [](const Heading& a, const Heading& b) { return a.begin == b.begin; }),
              heads.end());
  std::vector<Chapter> out;
  for (size_t i = 0; i < heads.size(); ++i) {
    size_t end = i + 1 < heads.size() ? heads[i + 1].begin : c.doc.plain_text.size();
    while (end > heads[i].begin && c.doc.plain_text[end - 1] == ' ') --end;
    if (end > heads[i].begin)
      out.push_back({heads[i].kind.value_or(ChapterKind::other), trim(heads[i].title), heads[i].begin, end});
  }
  return out;
}

// Adjacent chapters of the same unique kind are merged; later ones become other.
void merge_duplicates(std::vector<Chapter>& chapters) {
  std::vector<Chapter> out;
  bool seen_legal = false, seen_decision = false;
  for (auto& ch : chapters) {
    bool unique_kind = ch.kind == ChapterKind::legal_basis || ch.kind == ChapterKind::decision;
    if (unique_kind && !out.empty() && out.back().kind == ch.kind) {
      out.back().end = ch.end;
      continue;
    }
    bool& seen = ch.kind == ChapterKind::legal_basis ? seen_legal : seen_decision;
    if (unique_kind) {
      if (seen) ch.kind = ChapterKind::other;
      seen = true;
    }
    out.push_back(std::move(ch));
  }
  chapters = std::move(out);
}

}  // namespace

std::vector<Chapter> segment(const JudgmentDocument& doc, const HeadingTable& table) {
  if (doc.plain_text.empty()) return {};
  Ctx c{doc, table, children_of(doc.tags)};
  std::vector<Chapter> chapters = from_sections(c);
  if (chapters.empty()) chapters = from_headings(c);
  if (chapters.empty()) return {Chapter{ChapterKind::other, "", 0, doc.plain_text.size()}};
  merge_duplicates(chapters);
  return chapters;
}

void apply(JudgmentDocument& doc, const HeadingTable& table) { doc.chapters = segment(doc, table); }

std::optional<Chapter> chapter_lookup(const JudgmentDocument& doc, ChapterKind kind) {
  for (const auto& ch : doc.chapters)
    if (ch.kind == kind) return ch;
  return std::nullopt;
}

}  // namespace judgcode::segment
