#include "judgcode/lint.hpp"

#include <algorithm>

#include <boost/regex.hpp>
#include <fmt/format.h>

#include "judgcode/errors.hpp"
#include "judgcode/quantity.hpp"
#include "judgcode/tables.hpp"
#include "judgcode/text.hpp"

namespace judgcode::lint {

std::string_view to_string(Category c) {
  switch (c) {
    case Category::A_anonymization: return "A_anonymization";
    case Category::S_spelling_consistency: return "S_spelling_consistency";
    case Category::V_legal_basis: return "V_legal_basis";
  }
  return "";
}

std::string_view to_string(Severity s) { return s == Severity::error ? "error" : "warning"; }

std::string_view short_name(Category c) {
  switch (c) {
    case Category::A_anonymization: return "A";
    case Category::S_spelling_consistency: return "S";
    case Category::V_legal_basis: return "V";
  }
  return "";
}

const std::vector<RuleInfo>& rules() {
  using C = Category;
  using S = Severity;
  static const std::vector<RuleInfo> r = {
      {"imei_number", C::A_anonymization, S::error},
      {"phone_number", C::A_anonymization, S::error},
      {"license_plate", C::A_anonymization, S::error},
      {"crypto_address", C::A_anonymization, S::error},
      {"passport_number", C::A_anonymization, S::error},
      {"street_address", C::A_anonymization, S::error},
      {"number_word_mismatch", C::S_spelling_consistency, S::warning},
      {"implausible_birth_year", C::S_spelling_consistency, S::warning},
      {"missing_unit", C::S_spelling_consistency, S::warning},
      {"unknown_article", C::V_legal_basis, S::warning},
      {"empty_legal_basis", C::V_legal_basis, S::warning},
      {"articles_without_statute", C::V_legal_basis, S::warning},
      {"statute_without_articles", C::V_legal_basis, S::warning},
  };
  return r;
}

const RuleInfo* find_rule(std::string_view id) {
  for (const auto& r : rules())
    if (r.id == id) return &r;
  return nullptr;
}

RuleSet RuleSet::parse(std::string_view tsv) {
  RuleSet s = all();
  for (const auto& row : parse_delimited(tsv)) {
    if (row.fields.size() != 2) throw ConfigError(fmt::format("lint rules line {}: expected 2 fields", row.line));
    std::string id(trim(row.fields[0]));
    std::string state = to_lower_ascii(trim(row.fields[1]));
    if (id == "version") continue;
    if (!find_rule(id)) throw ConfigError(fmt::format("lint rules line {}: unknown rule {}", row.line, id));
    if (state != "on" && state != "off")
      throw ConfigError(fmt::format("lint rules line {}: state must be on or off", row.line));
    s.state_[id] = state == "on";
  }
  return s;
}

RuleSet RuleSet::load(const std::filesystem::path& path) { return parse(load_config_text(path, "lint_rules.tsv")); }

RuleSet RuleSet::all() {
  RuleSet s;
  for (const auto& r : rules()) s.state_[std::string(r.id)] = true;
  return s;
}

bool RuleSet::enabled(std::string_view rule) const {
  auto it = state_.find(rule);
  return it == state_.end() || it->second;
}

void RuleSet::set(std::string_view rule, bool on) {
  if (!find_rule(rule)) throw InvalidArgument(fmt::format("unknown lint rule {}", rule));
  state_[std::string(rule)] = on;
}

ArticleBounds ArticleBounds::parse(std::string_view tsv) {
  ArticleBounds b;
  for (const auto& row : parse_delimited(tsv)) {
    if (row.fields.size() != 2) throw ConfigError(fmt::format("statute articles line {}: expected 2 fields", row.line));
    if (row.fields[0] == "version") continue;
    try {
      size_t used = 0;
      long n = std::stol(row.fields[1], &used);
      if (used != row.fields[1].size() || n <= 0) throw std::invalid_argument("range");
      b.last_[row.fields[0]] = n;
    } catch (const std::exception&) {
      throw ConfigError(fmt::format("statute articles line {}: invalid article number", row.line));
    }
  }
  return b;
}

const ArticleBounds& ArticleBounds::builtin() {
  static const ArticleBounds b = parse(load_config_text({}, "statute_articles.tsv"));
  return b;
}

std::optional<long> ArticleBounds::last(std::string_view statute) const {
  auto it = last_.find(statute);
  if (it == last_.end()) return std::nullopt;
  return it->second;
}

bool luhn_valid(std::string_view digits) {
  if (digits.empty()) return false;
  int sum = 0;
  bool twice = false;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (!is_digit(*it)) return false;
    int d = *it - '0';
    if (twice) d = d * 2 > 9 ? d * 2 - 9 : d * 2;
    sum += d;
    twice = !twice;
  }
  return sum % 10 == 0;
}

bool is_unknown_article(std::string_view statute, std::string_view article, const codebook::StatuteMaxTable& table,
                        const ArticleBounds& bounds) {
  if (table.lookup(statute, article)) return false;
  auto last = bounds.last(statute);
  if (!last) return false;
  size_t n = 0;
  while (n < article.size() && is_digit(article[n])) ++n;
  if (n == 0) return false;
  if (n > 9) return true;
  return std::stol(std::string(article.substr(0, n))) > *last;
}

namespace {

// Context around [begin, end), whitespace collapsed, cut at a UTF-8 boundary.
std::string excerpt(std::string_view text, size_t begin, size_t end) {
  constexpr size_t kContext = 30;
  size_t from = begin > kContext ? begin - kContext : 0;
  size_t to = std::min(text.size(), end + kContext);
  // Start and stop on word boundaries.
  while (from > 0 && from < begin && text[from - 1] != ' ' && text[from - 1] != '\n') ++from;
  while (to < text.size() && to > end && text[to] != ' ' && text[to] != '\n') --to;
  std::string out;
  bool space = false;
  for (size_t i = from; i < to; ++i) {
    char c = text[i];
    if (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += c;
  }
  if (out.size() > kMaxExcerpt) {
    size_t cut = kMaxExcerpt;
    while (cut > 0 && (static_cast<unsigned char>(out[cut]) & 0xC0) == 0x80) --cut;
    out.resize(cut);
  }
  return out;
}

std::string clip(std::string s) {
  if (s.size() > kMaxExcerpt) {
    size_t cut = kMaxExcerpt;
    while (cut > 0 && (static_cast<unsigned char>(s[cut]) & 0xC0) == 0x80) --cut;
    s.resize(cut);
  }
  return s;
}

struct Patterns {
  boost::regex imei{R"((?<![0-9])[0-9]{15}(?![0-9]))"};
  boost::regex phone{
      R"((?<![\w+/.-])(?:(?:\+|00)31[ -]?(?:\(0\)[ -]?)?6|06)[ -]?[0-9]{8}(?![0-9])|)"
      R"((?<![\w+/.-])0[0-9]{2}-[0-9]{7}(?![0-9])|(?<![\w+/.-])0[0-9]{3}-[0-9]{6}(?![0-9]))"};
  boost::regex plate;
  boost::regex crypto{
      R"((?<![A-Za-z0-9])(?:[13][1-9A-HJ-NP-Za-km-z]{25,34}|bc1[02-9ac-hj-np-z]{25,59}|0x[0-9a-fA-F]{40})(?![A-Za-z0-9]))"};
  boost::regex passport{R"((?<![A-Za-z0-9])[A-NP-Z]{2}[A-NP-Z0-9]{6}[0-9](?![A-Za-z0-9]))"};
  boost::regex passport_context{R"(paspoort|identiteitskaart|id-kaart|reisdocument|passport)", boost::regex::icase};
  boost::regex street{
      R"((?<![\[\w-])[A-Z][a-z]*(?:straat|weg|laan|plein|gracht|kade|singel|dijk|dreef|steeg)[ ]+[0-9]{1,4}[a-z]?(?![\w]))"};
  boost::regex duration_phrase{R"(voor (?:de duur van|een periode van)\s+)", boost::regex::icase};

  Patterns() {
    // Dutch side codes; plates use consonants only.
    const std::string L = "[BDFGHJKLNPRSTVXZ]", D = "[0-9]";
    auto rep = [](const std::string& s, int n) {
      std::string out;
      for (int i = 0; i < n; ++i) out += s;
      return out;
    };
    auto code = [&](std::initializer_list<std::pair<bool, int>> parts) {
      std::string out;
      for (auto [letters, n] : parts) {
        if (!out.empty()) out += "-";
        out += rep(letters ? L : D, n);
      }
      return out;
    };
    const std::vector<std::string> codes = {
        code({{true, 2}, {false, 2}, {false, 2}}), code({{false, 2}, {false, 2}, {true, 2}}),
        code({{false, 2}, {true, 2}, {false, 2}}), code({{true, 2}, {false, 2}, {true, 2}}),
        code({{true, 2}, {true, 2}, {false, 2}}),  code({{false, 2}, {true, 2}, {true, 2}}),
        code({{false, 2}, {true, 3}, {false, 1}}), code({{false, 1}, {true, 3}, {false, 2}}),
        code({{true, 2}, {false, 3}, {true, 1}}),  code({{true, 1}, {false, 3}, {true, 2}}),
        code({{true, 3}, {false, 2}, {true, 1}}),  code({{true, 1}, {false, 2}, {true, 3}}),
        code({{false, 1}, {true, 2}, {false, 3}}), code({{false, 3}, {true, 2}, {false, 1}}),
    };
    std::string alt;
    for (const auto& c : codes) alt += (alt.empty() ? "" : "|") + c;
    plate = boost::regex("(?<![\\w-])(?:" + alt + ")(?![\\w-])");
  }
};

const Patterns& patterns() {
  static const Patterns p;
  return p;
}

bool mixed_base58(std::string_view s) {
  bool digit = false, upper = false, lower = false;
  for (char c : s) {
    digit |= c >= '0' && c <= '9';
    upper |= c >= 'A' && c <= 'Z';
    lower |= c >= 'a' && c <= 'z';
  }
  return digit && upper && lower;
}

class Linter {
 public:
  Linter(const JudgmentDocument& doc, const extract::CodedRecord& record, const LintOptions& options)
      : doc_(doc), record_(record), options_(options), text_(doc.plain_text) {}

  std::vector<LintIssue> run() {
    run_rule("imei_number", [&] { regex_rule("imei_number", patterns().imei, [](std::string_view m) { return luhn_valid(m); }); });
    run_rule("phone_number", [&] { regex_rule("phone_number", patterns().phone); });
    run_rule("license_plate", [&] { regex_rule("license_plate", patterns().plate); });
    run_rule("crypto_address", [&] {
      regex_rule("crypto_address", patterns().crypto,
                 [](std::string_view m) { return m.substr(0, 2) == "0x" || m.substr(0, 3) == "bc1" || mixed_base58(m); });
    });
    run_rule("passport_number", [&] { passport(); });
    run_rule("street_address", [&] { regex_rule("street_address", patterns().street); });
    run_rule("number_word_mismatch", [&] { number_word_mismatch(); });
    run_rule("implausible_birth_year", [&] { implausible_birth_year(); });
    run_rule("missing_unit", [&] { missing_unit(); });
    run_rule("unknown_article", [&] { unknown_article(); });
    run_rule("empty_legal_basis", [&] {
      if (record_.legal_basis.chapter_found && record_.legal_basis.entries.empty() &&
          record_.legal_basis.findings.empty())
        add("empty_legal_basis", legal_basis_excerpt());
    });
    run_rule("articles_without_statute", [&] { finding_rule("articles_without_statute", extract::LegalBasisIssue::articles_without_statute); });
    run_rule("statute_without_articles", [&] { finding_rule("statute_without_articles", extract::LegalBasisIssue::statute_without_articles); });
    return std::move(issues_);
  }

 private:
  template <class F>
  void run_rule(std::string_view id, F f) {
    if (options_.rules.enabled(id)) f();
  }

  void add(std::string_view rule, std::string text) {
    const RuleInfo* info = find_rule(rule);
    issues_.push_back({record_.meta.ecli, info->category, std::string(rule), clip(std::move(text)), info->severity});
  }

  template <class Accept = bool (*)(std::string_view)>
  void regex_rule(std::string_view rule, const boost::regex& pattern, Accept accept = [](std::string_view) { return true; }) {
    for (boost::sregex_iterator it(text_.begin(), text_.end(), pattern), end; it != end; ++it) {
      const auto& m = (*it)[0];
      std::string_view s(&*m.first, static_cast<size_t>(m.length()));
      if (!accept(s)) continue;
      size_t b = static_cast<size_t>(m.first - text_.begin());
      add(rule, excerpt(text_, b, b + s.size()));
    }
  }

  void passport() {
    for (boost::sregex_iterator it(text_.begin(), text_.end(), patterns().passport), end; it != end; ++it) {
      size_t b = static_cast<size_t>((*it)[0].first - text_.begin());
      size_t from = b > 80 ? b - 80 : 0;
      std::string before(text_.substr(from, b - from));
      if (!boost::regex_search(before, patterns().passport_context)) continue;
      add("passport_number", excerpt(text_, b, b + static_cast<size_t>((*it)[0].length())));
    }
  }

  // A digit group with a parenthesized number word that disagrees with it.
  void number_word_mismatch() {
    std::string_view t(text_);
    for (size_t i = 0; i < t.size(); ++i) {
      if (!is_digit(t[i]) || (i > 0 && (is_digit(t[i - 1]) || is_word_char(t[i - 1]) || t[i - 1] == '.' || t[i - 1] == ',')))
        continue;
      size_t j = i;
      while (j < t.size() && (is_digit(t[j]) || t[j] == '.' || t[j] == ',')) ++j;
      size_t k = j;
      while (k < t.size() && t[k] == ' ') ++k;
      if (k >= t.size() || t[k] != '(') continue;
      auto q = parse_quantity(t.substr(i, 120));
      if (q && q->from_digits && q->begin == 0 && q->inconsistent) add("number_word_mismatch", excerpt(t, i, i + q->end));
      i = j;
    }
  }

  void implausible_birth_year() {
    auto raw = record_.offender.raw_birth_year;
    if (!raw) return;
    int year = record_.meta.decision_year();
    if (year - *raw <= 100 && *raw <= year) return;
    std::string needle = std::to_string(*raw);
    size_t pos = 0;
    while ((pos = text_.find(needle, pos)) != std::string::npos) {
      bool left = pos == 0 || !is_digit(text_[pos - 1]);
      bool right = pos + needle.size() >= text_.size() || !is_digit(text_[pos + needle.size()]);
      if (left && right) break;
      pos += needle.size();
    }
    if (pos == std::string::npos) {
      add("implausible_birth_year", fmt::format("geboortejaar {}", *raw));
    } else {
      add("implausible_birth_year", excerpt(text_, pos, pos + needle.size()));
    }
  }

  // "voor de duur van 12" with no unit after the number.
  void missing_unit() {
    for (boost::sregex_iterator it(text_.begin(), text_.end(), patterns().duration_phrase), end; it != end; ++it) {
      size_t after = static_cast<size_t>((*it)[0].second - text_.begin());
      std::string_view rest = std::string_view(text_).substr(after, 80);
      auto q = parse_quantity(rest);
      if (!q || q->begin != 0 || q->unit != Unit::none) continue;
      size_t b = static_cast<size_t>((*it)[0].first - text_.begin());
      add("missing_unit", excerpt(text_, b, after + q->end));
    }
  }

  void unknown_article() {
    for (const auto& e : record_.legal_basis.entries)
      for (const auto& a : e.articles)
        if (is_unknown_article(e.statute, a, *options_.table, *options_.bounds))
          add("unknown_article", fmt::format("artikel {} {}", a, e.statute));
  }

  void finding_rule(std::string_view rule, extract::LegalBasisIssue issue) {
    for (const auto& f : record_.legal_basis.findings)
      if (f.issue == issue) add(rule, f.detail);
  }

  std::string legal_basis_excerpt() const {
    for (const auto& c : doc_.chapters)
      if (c.kind == ChapterKind::legal_basis) return excerpt(doc_.body(c), 0, std::min<size_t>(doc_.body(c).size(), 60));
    return "";
  }

  const JudgmentDocument& doc_;
  const extract::CodedRecord& record_;
  const LintOptions& options_;
  const std::string& text_;
  std::vector<LintIssue> issues_;
};

}  // namespace

std::vector<LintIssue> lint_judgment(const JudgmentDocument& doc, const extract::CodedRecord& record,
                                     const LintOptions& options) {
  return Linter(doc, record, options).run();
}

LintReport aggregate(std::vector<LintIssue> issues) {
  auto rank = [](const std::string& rule) {
    for (size_t i = 0; i < rules().size(); ++i)
      if (rules()[i].id == rule) return i;
    return rules().size();
  };
  std::stable_sort(issues.begin(), issues.end(), [&](const LintIssue& a, const LintIssue& b) {
    if (a.ecli != b.ecli) return a.ecli < b.ecli;
    return rank(a.rule) < rank(b.rule);
  });
  LintReport r;
  for (const auto& i : issues) {
    ++r.per_category[i.category];
    ++r.per_rule[i.rule];
  }
  r.issues = std::move(issues);
  return r;
}

}  // namespace judgcode::lint
