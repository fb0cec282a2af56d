#include "judgcode/numerals.hpp"

#include <algorithm>
#include <array>

#include "judgcode/errors.hpp"
#include "judgcode/tables.hpp"
#include "judgcode/text.hpp"

namespace judgcode::numerals {

MisspellingTable MisspellingTable::parse(std::string_view tsv) {
  MisspellingTable t;
  for (const auto& row : parse_delimited(tsv)) {
    if (row.fields.size() < 2 || row.fields[0].empty())
      throw ConfigError("misspelling table line " + std::to_string(row.line) + ": expected <variant>\\t<standard>");
    t.rules_.emplace_back(to_lower_ascii(row.fields[0]), to_lower_ascii(row.fields[1]));
  }
  std::stable_sort(t.rules_.begin(), t.rules_.end(),
                   [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  return t;
}

const MisspellingTable& MisspellingTable::builtin() {
  static const MisspellingTable t = parse(load_config_text({}, "misspellings.tsv"));
  return t;
}

std::string MisspellingTable::apply(std::string_view word) const {
  std::string out(word);
  for (const auto& [from, to] : rules_) {
    size_t pos = 0;
    while ((pos = out.find(from, pos)) != std::string::npos) {
      out.replace(pos, from.size(), to);
      pos += to.size();
    }
  }
  return out;
}

namespace {

struct Morpheme {
  std::string_view text;
  long value;
};

constexpr std::array<Morpheme, 9> kUnits = {{{"een", 1}, {"twee", 2}, {"drie", 3}, {"vier", 4}, {"vijf", 5},
                                             {"zes", 6}, {"zeven", 7}, {"acht", 8}, {"negen", 9}}};
constexpr std::array<Morpheme, 10> kTeens = {{{"tien", 10}, {"elf", 11}, {"twaalf", 12}, {"dertien", 13},
                                              {"veertien", 14}, {"vijftien", 15}, {"zestien", 16},
                                              {"zeventien", 17}, {"achttien", 18}, {"negentien", 19}}};
constexpr std::array<Morpheme, 8> kTens = {{{"twintig", 20}, {"dertig", 30}, {"veertig", 40}, {"vijftig", 50},
                                           {"zestig", 60}, {"zeventig", 70}, {"tachtig", 80}, {"negentig", 90}}};

// Every way to read a prefix of s[pos..] as a number below 100:
// (value, end position) pairs.
using Reading = std::pair<long, size_t>;

template <size_t N>
void match_list(std::string_view s, size_t pos, const std::array<Morpheme, N>& list, std::vector<Reading>& out) {
  for (const auto& m : list)
    if (s.substr(pos, m.text.size()) == m.text) out.emplace_back(m.value, pos + m.text.size());
}

std::vector<Reading> below_100(std::string_view s, size_t pos) {
  std::vector<Reading> out;
  match_list(s, pos, kUnits, out);
  match_list(s, pos, kTeens, out);
  match_list(s, pos, kTens, out);
  std::vector<Reading> units;
  match_list(s, pos, kUnits, units);
  for (auto [u, p] : units) {
    if (s.substr(p, 2) != "en") continue;
    std::vector<Reading> tens;
    match_list(s, p + 2, kTens, tens);
    for (auto [t, q] : tens) out.emplace_back(t + u, q);
  }
  return out;
}

bool consume(std::string_view s, size_t& pos, std::string_view word) {
  if (s.substr(pos, word.size()) != word) return false;
  pos += word.size();
  return true;
}

// Readings below 1000; "honderd" may be followed by "en".
std::vector<Reading> below_1000(std::string_view s, size_t pos) {
  std::vector<Reading> out = below_100(s, pos);
  std::vector<Reading> heads;
  {
    size_t p = pos;
    if (consume(s, p, "honderd")) heads.emplace_back(100, p);
  }
  std::vector<Reading> mult;
  match_list(s, pos, kUnits, mult);
  for (auto [m, p] : mult)
    if (consume(s, p, "honderd")) heads.emplace_back(m * 100, p);
  for (auto [h, p] : heads) {
    out.emplace_back(h, p);
    size_t q = p;
    consume(s, q, "en");
    for (auto [r, e] : below_100(s, q)) out.emplace_back(h + r, e);
    if (q != p)
      for (auto [r, e] : below_100(s, p)) out.emplace_back(h + r, e);
  }
  return out;
}

std::vector<Reading> full(std::string_view s) {
  std::vector<Reading> out = below_1000(s, 0);
  std::vector<Reading> thousands;
  {
    size_t p = 0;
    if (consume(s, p, "duizend")) thousands.emplace_back(1000, p);
  }
  for (auto [m, p] : below_1000(s, 0)) {
    size_t q = p;
    if (consume(s, q, "duizend")) thousands.emplace_back(m * 1000, q);
  }
  for (auto [t, p] : thousands) {
    out.emplace_back(t, p);
    size_t q = p;
    consume(s, q, "en");
    for (auto [r, e] : below_1000(s, q)) out.emplace_back(t + r, e);
    if (q != p)
      for (auto [r, e] : below_1000(s, p)) out.emplace_back(t + r, e);
  }
  return out;
}

// Lower-cased letters only; nullopt when anything but letters, spaces or
// hyphens occurs.
std::optional<std::string> squash(std::string_view text) {
  std::string out;
  for (char c : normalize_text(text)) {
    if (c == ' ' || c == '-') continue;
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c < 'a' || c > 'z') return std::nullopt;
    out.push_back(c);
  }
  if (out.empty()) return std::nullopt;
  return out;
}

}  // namespace

std::optional<long> parse_dutch_number(std::string_view text, const MisspellingTable& misspellings) {
  auto sq = squash(text);
  if (!sq) return std::nullopt;
  if (*sq == "nul") return 0;
  std::string s = misspellings.apply(*sq);
  for (auto [v, end] : full(s))
    if (end == s.size()) return v;
  return std::nullopt;
}

std::optional<long> parse_english_number(std::string_view text) {
  static constexpr std::array<std::string_view, 20> small = {
      "zero",    "one",     "two",       "three",    "four",     "five",    "six",
      "seven",   "eight",   "nine",      "ten",      "eleven",   "twelve",  "thirteen",
      "fourteen", "fifteen", "sixteen",  "seventeen", "eighteen", "nineteen"};
  static constexpr std::array<std::string_view, 8> tens = {"twenty", "thirty",  "forty",  "fifty",
                                                           "sixty",  "seventy", "eighty", "ninety"};
  std::string lower = to_lower_ascii(normalize_text(text));
  std::vector<std::string> words;
  std::string cur;
  for (char c : lower) {
    if (c >= 'a' && c <= 'z') {
      cur.push_back(c);
    } else if (c == ' ' || c == '-') {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
    } else {
      return std::nullopt;
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  if (words.empty()) return std::nullopt;

  long total = 0, group = 0;
  bool any = false;
  for (const auto& w : words) {
    if (w == "and") continue;
    if (auto it = std::find(small.begin(), small.end(), w); it != small.end()) {
      group += it - small.begin();
    } else if (auto jt = std::find(tens.begin(), tens.end(), w); jt != tens.end()) {
      group += 20 + 10 * (jt - tens.begin());
    } else if (w == "hundred") {
      group = (group == 0 ? 1 : group) * 100;
    } else if (w == "thousand") {
      total += (group == 0 ? 1 : group) * 1000;
      group = 0;
    } else {
      return std::nullopt;
    }
    any = true;
  }
  if (!any) return std::nullopt;
  return total + group;
}

std::optional<long> parse_number_words(std::string_view text, const MisspellingTable& misspellings) {
  if (auto v = parse_dutch_number(text, misspellings)) return v;
  return parse_english_number(text);
}

}  // namespace judgcode::numerals
