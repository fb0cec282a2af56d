#include "judgcode/extract.hpp"

#include <algorithm>
#include <array>
#include <cstring>

#include "judgcode/numerals.hpp"
#include "judgcode/segmenter.hpp"

namespace judgcode::extract {

std::string_view to_string(DecisionKind k) {
  switch (k) {
    case DecisionKind::measure: return "measure";
    case DecisionKind::incarceration: return "incarceration";
    case DecisionKind::community_service: return "community_service";
    case DecisionKind::fine: return "fine";
    case DecisionKind::acquittal: return "acquittal";
    case DecisionKind::procedural: return "procedural";
  }
  return "procedural";
}

std::string_view to_string(DecisionStatus s) {
  switch (s) {
    case DecisionStatus::coded: return "coded";
    case DecisionStatus::not_codable: return "not_codable";
    case DecisionStatus::missing: return "missing";
  }
  return "missing";
}

std::string_view to_string(LegalBasisIssue i) {
  switch (i) {
    case LegalBasisIssue::articles_without_statute: return "articles_without_statute";
    case LegalBasisIssue::statute_without_articles: return "statute_without_articles";
    case LegalBasisIssue::unknown_statute: return "unknown_statute";
  }
  return "unknown_statute";
}

namespace {

// The judgment body and its summary, each tokenized once.
struct Sources {
  explicit Sources(const JudgmentDocument& doc)
      : body(doc.plain_text), summary(doc.meta.press_release.value_or(std::string())) {}
  TokenizedText body;
  TokenizedText summary;
};

std::vector<std::string> labels_in(const CategoryDictionary& dict, const Sources& src) {
  auto a = dict.find(src.body);
  auto b = dict.find(src.summary);
  std::vector<std::string> out;
  for (const auto& l : dict.labels())
    if (std::find(a.begin(), a.end(), l) != a.end() || std::find(b.begin(), b.end(), l) != b.end())
      out.push_back(l);
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return is_digit(c); });
}

struct BirthStatement {
  std::optional<int> year;
  BirthCountry country = BirthCountry::domestic;
};

// "geboren op [datum] 1992 te [plaats] (Marokko)": the first statement decides
// the country, the first year within a statement the birth year.
std::optional<BirthStatement> birth_statement(const TokenizedText& t, const CategoryDictionary& countries) {
  constexpr size_t kWindow = 14;
  std::optional<BirthStatement> out;
  const auto& toks = t.tokens();
  for (size_t i = 0; i < toks.size(); ++i) {
    if (t.token(i) != "geboren") continue;
    size_t last = std::min(toks.size(), i + 1 + kWindow);
    BirthStatement st;
    for (size_t j = i + 1; j < last && !st.year; ++j) {
      std::string_view tok = t.token(j);
      if (tok.size() == 4 && all_digits(tok) && (tok[0] == '1' || tok[0] == '2')) {
        int y = std::stoi(std::string(tok));
        if (y >= 1800 && y <= 2100) st.year = y;
      }
    }
    size_t end = last > 0 ? toks[last - 1].end : toks[i].end;
    auto found = countries.find(t, toks[i].begin, end);
    if (std::find(found.begin(), found.end(), "foreign") != found.end()) st.country = BirthCountry::foreign;
    if (!out) {
      out = st;
    } else if (!out->year && st.year) {
      out->year = st.year;
    }
    if (out->year) break;
  }
  return out;
}

// "30-jarige verdachte", "dertigjarige man": the stated age.
std::optional<int> stated_age(const TokenizedText& t) {
  static constexpr std::array<std::string_view, 6> subjects = {"verdachte", "man", "vrouw",
                                                               "verdachten", "dader", "veroordeelde"};
  const auto& toks = t.tokens();
  constexpr std::string_view suffix = "jarige";
  for (size_t i = 0; i < toks.size(); ++i) {
    std::string_view tok = t.token(i);
    std::optional<long> age;
    size_t next = i + 1;
    if (tok == suffix && i > 0 && all_digits(t.token(i - 1)) && toks[i - 1].end + 1 == toks[i].begin) {
      age = std::stol(std::string(t.token(i - 1)));
    } else if (tok.size() > suffix.size() && tok.substr(tok.size() - suffix.size()) == suffix) {
      std::string_view head = tok.substr(0, tok.size() - suffix.size());
      if (all_digits(head))
        age = std::stol(std::string(head));
      else
        age = numerals::parse_dutch_number(head);
    }
    if (!age || next >= toks.size()) continue;
    std::string_view subject = t.token(next);
    if (std::find(subjects.begin(), subjects.end(), subject) == subjects.end()) continue;
    if (*age >= 18 && *age < 120) return static_cast<int>(*age);
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> max_placeholder_index(std::string_view text, const std::vector<std::string_view>& labels) {
  std::optional<int> best;
  size_t pos = 0;
  while ((pos = text.find('[', pos)) != std::string_view::npos) {
    size_t close = text.find(']', pos);
    if (close == std::string_view::npos) break;
    if (close - pos > 60) {
      ++pos;
      continue;
    }
    std::string inner = to_lower_ascii(trim(text.substr(pos + 1, close - pos - 1)));
    pos = close;
    for (std::string_view label : labels) {
      if (inner.compare(0, label.size(), label) != 0) continue;
      std::string rest = trim(std::string_view(inner).substr(label.size()));
      int idx = 0;
      if (rest.empty())
        idx = 1;
      else if (all_digits(rest) && rest.size() <= 4)
        idx = std::stoi(rest);
      else
        continue;
      if (!best || idx > *best) best = idx;
      break;
    }
  }
  return best;
}

OffenderProfile extract_offender_profile(const JudgmentDocument& doc, const Dictionaries& dict) {
  OffenderProfile p;
  Sources src(doc);
  int decision_year = doc.meta.decision_year();

  auto body_birth = birth_statement(src.body, dict.countries);
  auto summary_birth = birth_statement(src.summary, dict.countries);
  const auto& statement = body_birth ? body_birth : summary_birth;
  if (statement) p.birth_country = statement->country;

  std::optional<int> year;
  if (body_birth && body_birth->year)
    year = body_birth->year;
  else if (summary_birth && summary_birth->year)
    year = summary_birth->year;
  else if (auto age = stated_age(src.summary))
    year = decision_year - *age;
  else if (auto age2 = stated_age(src.body))
    year = decision_year - *age2;
  p.raw_birth_year = year;
  if (year && decision_year - *year >= 18) p.birth_year = year;

  if (dict.female_markers.any(src.body) || dict.female_markers.any(src.summary)) p.sex = Sex::female;
  return p;
}

namespace {

std::optional<Recidivism> earliest_recidivism(const TokenizedText& t, const CategoryDictionary& dict) {
  auto matches = dict.matcher().find_all(t);
  const auto& labels = dict.labels();
  std::optional<std::pair<size_t, Recidivism>> best;
  for (const auto& m : matches) {
    bool repeat = labels[static_cast<size_t>(m.label)] == "repeat_offender";
    if (repeat) {
      size_t tok = t.first_token_at(m.char_begin);
      if (tok > 0 && t.token(tok - 1) == "niet") continue;
    }
    Recidivism r = repeat ? Recidivism::repeat_offender : Recidivism::first_offender;
    if (!best || m.char_begin < best->first ||
        (m.char_begin == best->first && r == Recidivism::first_offender))
      best = std::make_pair(m.char_begin, r);
  }
  if (!best) return std::nullopt;
  return best->second;
}

}  // namespace

LegalInfo extract_legal_info(const JudgmentDocument& doc, const Dictionaries& dict) {
  LegalInfo info;
  Sources src(doc);
  if (auto r = earliest_recidivism(src.body, dict.recidivism))
    info.recidivism = *r;
  else if (auto s = earliest_recidivism(src.summary, dict.recidivism))
    info.recidivism = *s;

  std::string_view summary = doc.meta.press_release ? std::string_view(*doc.meta.press_release) : "";
  auto merge_max = [](std::optional<int> a, std::optional<int> b) {
    if (!a) return b;
    if (!b) return a;
    return std::optional<int>(std::max(*a, *b));
  };
  const std::vector<std::string_view> co = {"medeverdachte", "mededader", "medeverdachten"};
  const std::vector<std::string_view> victims = {"slachtoffer", "benadeelde", "aangever", "aangeefster"};
  auto co_max = merge_max(max_placeholder_index(doc.plain_text, co), max_placeholder_index(summary, co));
  if (!doc.plain_text.empty()) info.co_offender_count = co_max.value_or(0);
  info.victim_count = merge_max(max_placeholder_index(doc.plain_text, victims), max_placeholder_index(summary, victims));
  return info;
}

std::pair<std::vector<std::string>, std::vector<std::string>> extract_tech_terms(const JudgmentDocument& doc,
                                                                                 const Dictionaries& dict) {
  Sources src(doc);
  return {labels_in(dict.basic_terms, src), labels_in(dict.special_terms, src)};
}

ProsecutionInfo extract_prosecution_info(const JudgmentDocument& doc, const Dictionaries& dict) {
  Sources src(doc);
  ProsecutionInfo p;
  p.expertise = labels_in(dict.prosecution_expertise, src);
  p.detection_methods = labels_in(dict.detection_methods, src);
  p.guidelines_mentioned = dict.guidelines.any(src.body) || dict.guidelines.any(src.summary);
  return p;
}

std::vector<std::string> extract_investigations(const JudgmentDocument& doc) {
  static constexpr std::array<std::string_view, 34> stop = {
      "De",  "Het",  "Een",  "Van",  "In",   "Op",  "Naar", "Door", "Ter", "Dat",  "Die", "Is",
      "Werd", "Heeft", "Zijn", "En",  "Of",   "Bij", "Met",  "Om",   "Te",  "Tot",  "Voor", "Uit",
      "Aan", "Als",  "Ook",  "Nu",   "Hij",  "Zij", "Er",   "Wordt", "Deze", "Dit"};
  const std::string& text = doc.plain_text;
  std::vector<std::string> out;
  constexpr std::string_view key = "onderzoek ";
  std::string lower = to_lower_ascii(text);
  size_t pos = 0;
  while ((pos = lower.find(key, pos)) != std::string::npos) {
    size_t start = pos;
    pos += key.size();
    if (start > 0 && is_word_char(lower[start - 1])) continue;
    size_t p = pos;
    while (p < text.size() && (text[p] == '\'' || text[p] == '"')) ++p;
    size_t e = p;
    while (e < text.size() && is_word_char(text[e])) ++e;
    std::string_view word(text.data() + p, e - p);
    if (word.size() < 3 || !(word[0] >= 'A' && word[0] <= 'Z')) continue;
    if (!std::any_of(word.begin() + 1, word.end(), [](char c) { return c >= 'a' && c <= 'z'; })) continue;
    if (std::any_of(word.begin(), word.end(), [](char c) { return is_digit(c); })) continue;
    if (std::find(stop.begin(), stop.end(), word) != stop.end()) continue;
    if (std::find(out.begin(), out.end(), word) == out.end()) out.emplace_back(word);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Legal basis

namespace {

bool is_article_suffix(std::string_view s) {
  static constexpr std::array<std::string_view, 7> latin = {"bis", "ter", "quater", "quinquies",
                                                            "sexies", "septies", "octies"};
  if (s.empty()) return true;
  if (std::find(latin.begin(), latin.end(), s) != latin.end()) return true;
  return s.size() <= 2 && std::all_of(s.begin(), s.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

// "33", "33a", "420ter", "10310"
bool is_article_token(std::string_view tok) {
  size_t n = 0;
  while (n < tok.size() && is_digit(tok[n])) ++n;
  if (n == 0 || n > 5) return false;
  return is_article_suffix(tok.substr(n));
}

bool is_latin_suffix_token(std::string_view tok) {
  return tok.size() > 2 && is_article_suffix(tok);
}

}  // namespace

LegalBasis parse_legal_basis(std::string_view text, const StatuteAliases& aliases) {
  LegalBasis lb;
  lb.chapter_found = true;
  TokenizedText t(text);
  const auto& toks = t.tokens();
  const size_t n = toks.size();

  std::vector<StatuteArticles> mentions;
  std::vector<std::string> pending;
  std::optional<size_t> open;  // index into mentions, statute-first mode

  auto close_open = [&]() {
    if (open && mentions[*open].articles.empty())
      lb.findings.push_back({LegalBasisIssue::statute_without_articles, mentions[*open].statute});
    open.reset();
  };

  // A statute at token i: known alias or a capitalized "Wet ..." name.
  auto statute_at = [&](size_t i) -> std::optional<std::pair<std::string, size_t>> {
    if (auto m = aliases.match(t, i)) return m;
    std::string_view tok = t.token(i);
    char first = text[toks[i].begin];
    bool capital = first >= 'A' && first <= 'Z';
    if (capital && tok == "wet") {
      size_t j = i + 1;
      while (j < n && j < i + 8) {
        std::string_view w = t.token(j);
        if (is_digit(w[0]) || w == "artikel" || w == "artikelen" || w == "en" || w == "art") break;
        // Stop at punctuation between tokens.
        bool punct = false;
        for (size_t c = toks[j - 1].end; c < toks[j].begin; ++c)
          if (text[c] != ' ') punct = true;
        if (punct) break;
        ++j;
      }
      return std::make_pair(std::string(text.substr(toks[i].begin, toks[j - 1].end - toks[i].begin)), j - i);
    }
    if (capital && tok.size() > 5 && tok.substr(tok.size() - 3) == "wet")
      return std::make_pair(std::string(text.substr(toks[i].begin, toks[i].end - toks[i].begin)), size_t{1});
    return std::nullopt;
  };

  size_t i = 0;
  while (i < n) {
    std::string_view tok = t.token(i);
    if (auto st = statute_at(i)) {
      if (!aliases.known(st->first)) lb.findings.push_back({LegalBasisIssue::unknown_statute, st->first});
      if (!pending.empty()) {
        close_open();
        mentions.push_back({st->first, std::move(pending)});
        pending.clear();
      } else {
        close_open();
        mentions.push_back({st->first, {}});
        open = mentions.size() - 1;
      }
      i += st->second;
      continue;
    }
    if (tok == "artikel" || tok == "artikelen" || tok == "art" || tok == "artt") {
      if (open && !mentions[*open].articles.empty()) open.reset();
      ++i;
      continue;
    }
    if (tok == "lid" || tok == "onder" || tok == "sub" || tok == "feit" || tok == "sublid") {
      i += 2;
      continue;
    }
    if (tok == "leden" || tok == "feiten") {
      ++i;
      while (i < n && (all_digits(t.token(i)) || t.token(i) == "en")) ++i;
      continue;
    }
    if (is_article_token(tok)) {
      std::string article(tok);
      size_t next = i + 1;
      if (next < n && all_digits(tok) && is_latin_suffix_token(t.token(next)) && toks[next].begin == toks[i].end + 1) {
        article += t.token(next);
        ++next;
      }
      bool statute_follows = next < n && aliases.match(t, next).has_value();
      if (open && !statute_follows) {
        auto& arts = mentions[*open].articles;
        arts.push_back(article);
      } else {
        if (open && !mentions[*open].articles.empty()) open.reset();
        pending.push_back(article);
      }
      i = next;
      continue;
    }
    ++i;
  }
  close_open();
  if (!pending.empty()) {
    std::string joined;
    for (const auto& a : pending) joined += (joined.empty() ? "" : ",") + a;
    lb.findings.push_back({LegalBasisIssue::articles_without_statute, joined});
    mentions.push_back({"", std::move(pending)});
  }

  for (auto& m : mentions) {
    if (m.articles.empty()) continue;
    auto it = std::find_if(lb.entries.begin(), lb.entries.end(),
                           [&](const StatuteArticles& e) { return e.statute == m.statute; });
    if (it == lb.entries.end()) {
      lb.entries.push_back({m.statute, {}});
      it = lb.entries.end() - 1;
    }
    for (auto& a : m.articles)
      if (std::find(it->articles.begin(), it->articles.end(), a) == it->articles.end()) it->articles.push_back(a);
  }
  return lb;
}

namespace {

// Chapter body without its heading.
std::string_view chapter_text(const JudgmentDocument& doc, const Chapter& ch) {
  std::string_view body = doc.body(ch);
  if (!ch.raw_title.empty() && body.substr(0, ch.raw_title.size()) == ch.raw_title) {
    body.remove_prefix(ch.raw_title.size());
    while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  }
  return body;
}

}  // namespace

LegalBasis extract_legal_basis(const JudgmentDocument& doc, const Dictionaries& dict) {
  auto ch = segment::chapter_lookup(doc, ChapterKind::legal_basis);
  if (!ch) return {};
  return parse_legal_basis(chapter_text(doc, *ch), dict.statute_aliases);
}

// ---------------------------------------------------------------------------
// Decisions

namespace {

enum class Cue {
  procedural,
  acquittal,
  incarceration,
  life,
  detention,  // "hechtenis", custodial only outside substitute-detention wording
  community_service,
  fine,
  measure,
};

const PhraseMatcher& decision_cues() {
  static const PhraseMatcher m = [] {
    PhraseMatcher pm;
    auto add = [&](std::string_view p, Cue c) { pm.add(p, static_cast<int>(c)); };
    for (auto p : {"tenuitvoerlegging", "uitlevering", "overlevering", "heropent", "schorst", "verwijst de zaak",
                   "onbevoegd", "niet-ontvankelijk in de vervolging", "niet ontvankelijk in de vervolging",
                   "niet-ontvankelijk in zijn vervolging", "niet ontvankelijk in zijn vervolging"})
      add(p, Cue::procedural);
    for (auto p : {"gevangenisstraf*", "militaire detentie", "jeugddetentie"}) add(p, Cue::incarceration);
    add("levenslang*", Cue::life);
    add("hechtenis", Cue::detention);
    for (auto p : {"taakstraf*", "werkstraf*", "leerstraf*"}) add(p, Cue::community_service);
    for (auto p : {"geldboete*", "ontneming"}) add(p, Cue::fine);
    for (auto p : {"maatregel*", "terbeschikkingstelling", "tbs", "plaatsing in een psychiatrisch ziekenhuis",
                   "plaatsing in een inrichting voor stelselmatige daders", "isd", "schadevergoedingsmaatregel",
                   "onttrekking aan het verkeer"})
      add(p, Cue::measure);
    return pm;
  }();
  return m;
}

struct Clause {
  size_t begin;
  size_t end;
};

std::vector<Clause> split_clauses(std::string_view text) {
  std::vector<Clause> out;
  size_t start = 0;
  auto push = [&](size_t end) {
    if (end > start) out.push_back({start, end});
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool cut = false;
    if (c == ';' || c == ':') cut = true;
    if (c == '.' && (i + 1 == text.size() || text[i + 1] == ' ')) cut = true;
    if (c == '-' && i > 0 && text[i - 1] == ' ' && i + 1 < text.size() && text[i + 1] == ' ') cut = true;
    if (cut) {
      push(i);
      start = i + 1;
    }
  }
  push(text.size());
  return out;
}

bool contains(std::string_view hay, std::string_view needle) { return hay.find(needle) != std::string_view::npos; }

bool acceptable(DecisionKind k, Unit u) {
  switch (k) {
    case DecisionKind::incarceration:
    case DecisionKind::measure: return is_duration(u);
    case DecisionKind::community_service: return u == Unit::hours || is_duration(u);
    case DecisionKind::fine: return u == Unit::euros;
    default: return false;
  }
}

// First acceptable quantity in text[from, to), or the last one when `last`.
std::optional<Quantity> find_amount(std::string_view text, size_t from, size_t to, DecisionKind k, bool last) {
  std::optional<Quantity> found;
  size_t pos = from;
  while (pos < to) {
    auto q = parse_quantity(text.substr(pos, to - pos));
    if (!q) break;
    if (acceptable(k, q->unit) && q->amount > 0) {
      found = q;
      if (!last) break;
    }
    pos += std::max<size_t>(q->end, 1);
  }
  return found;
}

DecisionKind kind_of(Cue c) {
  switch (c) {
    case Cue::incarceration:
    case Cue::life:
    case Cue::detention: return DecisionKind::incarceration;
    case Cue::community_service: return DecisionKind::community_service;
    case Cue::fine: return DecisionKind::fine;
    case Cue::measure: return DecisionKind::measure;
    case Cue::acquittal: return DecisionKind::acquittal;
    case Cue::procedural: break;
  }
  return DecisionKind::procedural;
}

void clause_decisions(std::string_view text, const TokenizedText& tt, Clause cl, std::vector<Decision>& out) {
  std::string_view lower = std::string_view(tt.lower()).substr(cl.begin, cl.end - cl.begin);
  auto matches = decision_cues().find_all(tt, cl.begin, cl.end);
  size_t first_tok = tt.first_token_at(cl.begin);
  size_t clause_tokens = tt.first_token_at(cl.end) - first_tok;

  // Credit for time already served in custody.
  if (contains(lower, "in mindering")) return;

  if (std::any_of(matches.begin(), matches.end(),
                  [](const auto& m) { return static_cast<Cue>(m.label) == Cue::procedural; })) {
    out.push_back({DecisionKind::procedural, std::nullopt, Unit::none, false, false});
    return;
  }
  auto has_token = [&](std::string_view w) {
    for (size_t i = first_tok; i < first_tok + clause_tokens; ++i)
      if (tt.token(i) == w) return true;
    return false;
  };
  bool acquit = (has_token("spreekt") && has_token("vrij") && !contains(lower, "meer of anders")) ||
                (has_token("ontslaat") && has_token("rechtsvervolging")) ||
                contains(lower, "geen straf of maatregel");
  if (acquit) {
    out.push_back({DecisionKind::acquittal, std::nullopt, Unit::none, false, false});
    return;
  }
  if (matches.empty() || clause_tokens <= 2) return;

  bool substitute = contains(lower, "vervang") || contains(lower, "gebreke") || contains(lower, "voorlopige hechtenis") ||
                    contains(lower, "bevel");
  bool suspended_only = contains(lower, "niet ten uitvoer") || contains(lower, "niet tenuitvoer");
  bool life = std::any_of(matches.begin(), matches.end(),
                          [](const auto& m) { return static_cast<Cue>(m.label) == Cue::life; });

  std::vector<DecisionKind> seen;
  size_t prev_end = cl.begin;
  for (size_t k = 0; k < matches.size(); ++k) {
    const auto& m = matches[k];
    Cue cue = static_cast<Cue>(m.label);
    if (cue == Cue::detention && substitute) continue;
    DecisionKind kind = kind_of(cue);
    if (std::find(seen.begin(), seen.end(), kind) != seen.end()) continue;

    Decision d;
    d.kind = kind;
    if (kind == DecisionKind::incarceration && life) {
      d.amount = 360;
      d.unit = Unit::months;
      d.life = true;
    } else {
      size_t next_start = cl.end;
      for (size_t j = k + 1; j < matches.size(); ++j)
        if (kind_of(static_cast<Cue>(matches[j].label)) != kind) {
          next_start = matches[j].char_begin;
          break;
        }
      auto q = find_amount(text, m.char_end, next_start, kind, false);
      if (!q) {
        q = find_amount(text.substr(0, m.char_begin), prev_end, m.char_begin, kind, true);
      }
      if (q) {
        d.amount = q->amount;
        d.unit = q->unit;
        d.inconsistent = q->inconsistent;
      }
    }
    bool needs_amount = kind == DecisionKind::incarceration || kind == DecisionKind::community_service ||
                        kind == DecisionKind::fine;
    if (needs_amount && (!d.amount || suspended_only)) continue;
    seen.push_back(kind);
    prev_end = m.char_end;
    out.push_back(d);
  }
}

}  // namespace

std::vector<Decision> parse_decisions(std::string_view text) {
  TokenizedText tt(text);
  std::vector<Decision> out;
  for (const Clause& cl : split_clauses(text)) clause_decisions(text, tt, cl, out);
  return out;
}

std::pair<std::vector<Decision>, DecisionStatus> extract_decision(const JudgmentDocument& doc) {
  auto ch = segment::chapter_lookup(doc, ChapterKind::decision);
  if (!ch) return {{}, DecisionStatus::missing};
  auto decisions = parse_decisions(chapter_text(doc, *ch));
  DecisionStatus status = decisions.empty() ? DecisionStatus::not_codable : DecisionStatus::coded;
  return {std::move(decisions), status};
}

CodedRecord code_judgment(const JudgmentDocument& input, const Dictionaries& dict) {
  CodedRecord r;
  r.meta = input.meta;
  if (input.plain_text.empty()) {
    r.empty_body = true;
    return r;
  }
  const JudgmentDocument* doc = &input;
  JudgmentDocument segmented;
  if (input.chapters.empty()) {
    segmented = input;
    segment::apply(segmented);
    doc = &segmented;
  }
  r.offender = extract_offender_profile(*doc, dict);
  r.legal = extract_legal_info(*doc, dict);
  r.investigations = extract_investigations(*doc);
  std::tie(r.basic_tech_terms, r.special_tech_terms) = extract_tech_terms(*doc, dict);
  r.prosecution = extract_prosecution_info(*doc, dict);
  r.legal_basis = extract_legal_basis(*doc, dict);
  std::tie(r.decisions, r.decision_status) = extract_decision(*doc);
  Sources src(*doc);
  r.large_scale_mentioned = dict.large_scale_terms.any(src.body) || dict.large_scale_terms.any(src.summary);
  return r;
}

}  // namespace judgcode::extract
