#include "judgcode/quantity.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "judgcode/errors.hpp"
#include "judgcode/numerals.hpp"
#include "judgcode/text.hpp"

namespace judgcode {

std::string_view to_string(Unit u) {
  switch (u) {
    case Unit::days: return "days";
    case Unit::weeks: return "weeks";
    case Unit::months: return "months";
    case Unit::years: return "years";
    case Unit::hours: return "hours";
    case Unit::euros: return "euros";
    case Unit::none: break;
  }
  return "none";
}

std::optional<Unit> unit_from_word(std::string_view t) {
  if (t == "dag" || t == "dagen" || t == "day" || t == "days") return Unit::days;
  if (t == "week" || t == "weken" || t == "weeks") return Unit::weeks;
  if (t == "maand" || t == "maanden" || t == "month" || t == "months") return Unit::months;
  if (t == "jaar" || t == "jaren" || t == "year" || t == "years") return Unit::years;
  if (t == "uur" || t == "uren" || t == "hour" || t == "hours") return Unit::hours;
  if (t == "euro" || t == "euros" || t == "eur") return Unit::euros;
  return std::nullopt;
}

bool is_duration(Unit u) { return u == Unit::days || u == Unit::weeks || u == Unit::months || u == Unit::years; }

double to_months(double amount, Unit unit) {
  switch (unit) {
    case Unit::days: return amount / 30.0;
    case Unit::weeks: return amount * 7.0 / 30.0;
    case Unit::months: return amount;
    case Unit::years: return amount * 12.0;
    default: break;
  }
  throw DomainError("cannot convert " + std::string(to_string(unit)) + " to months");
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

std::optional<double> parse_dutch_decimal(std::string_view s, size_t* len) {
  size_t i = 0;
  auto digits_at = [&](size_t p) {
    size_t n = 0;
    while (p + n < s.size() && is_digit(s[p + n])) ++n;
    return n;
  };
  size_t n = digits_at(0);
  if (n == 0) return std::nullopt;
  std::string whole(s.substr(0, n));
  i = n;
  std::string frac;
  // Thousands groups: ".ddd" not followed by another digit.
  while (i < s.size() && s[i] == '.' && digits_at(i + 1) == 3) {
    whole += s.substr(i + 1, 3);
    i += 4;
  }
  if (i < s.size() && (s[i] == ',' || s[i] == '.')) {
    size_t m = digits_at(i + 1);
    if (m > 0) {
      frac = s.substr(i + 1, m);
      i += 1 + m;
    } else if (s[i] == ',' && i + 1 < s.size() && s[i + 1] == '-') {
      i += 2;
      if (i < s.size() && s[i] == '-') ++i;
    }
  }
  if (len) *len = i;
  return std::stod(frac.empty() ? whole : whole + "." + frac);
}

namespace {

// Token index of the number-word run starting at token i: the longest run
// (up to 8 tokens) that parses. Returns {value, end token} or nullopt.
std::optional<std::pair<long, size_t>> word_run(const TokenizedText& t, size_t i, size_t limit_tok) {
  std::optional<std::pair<long, size_t>> best;
  std::string joined;
  for (size_t j = i; j < limit_tok && j < i + 8; ++j) {
    std::string_view tok = t.token(j);
    if (is_digit(tok.front())) break;
    if (!joined.empty()) joined += ' ';
    joined += tok;
    if (auto v = numerals::parse_number_words(joined)) best = std::make_pair(*v, j + 1);
  }
  return best;
}

bool euro_sign_before(std::string_view s, size_t pos) {
  while (pos > 0 && s[pos - 1] == ' ') --pos;
  return pos >= 3 && s.substr(pos - 3, 3) == "\xE2\x82\xAC";
}

std::optional<Unit> unit_at(const TokenizedText& t, size_t tok) {
  if (tok >= t.tokens().size()) return std::nullopt;
  return unit_from_word(t.token(tok));
}

}  // namespace

std::optional<Quantity> parse_quantity(std::string_view text) {
  TokenizedText t(text);
  const auto& toks = t.tokens();
  const std::string& lower = t.lower();

  std::optional<Quantity> digits;
  for (size_t i = 0; i < toks.size() && !digits; ++i) {
    if (!is_digit(lower[toks[i].begin])) continue;
    if (toks[i].begin > 0 && is_word_char(lower[toks[i].begin - 1])) continue;
    size_t len = 0;
    auto value = parse_dutch_decimal(std::string_view(lower).substr(toks[i].begin), &len);
    if (!value) continue;
    Quantity q;
    q.amount = *value;
    q.from_digits = true;
    q.begin = toks[i].begin;
    size_t pos = toks[i].begin + len;
    // "(words)" directly after the digits.
    size_t p = pos;
    while (p < lower.size() && lower[p] == ' ') ++p;
    if (p < lower.size() && lower[p] == '(') {
      size_t close = lower.find(')', p);
      if (close != std::string::npos) {
        std::string_view inner = text.substr(p + 1, close - p - 1);
        if (auto w = numerals::parse_number_words(inner)) {
          q.word_value = *w;
        } else if (size_t sp = inner.find_last_of(' '); sp != std::string_view::npos) {
          // "(vijfhonderd euro)": words followed by their own unit.
          auto u = unit_from_word(to_lower_ascii(inner.substr(sp + 1)));
          auto w2 = numerals::parse_number_words(inner.substr(0, sp));
          if (u && w2) {
            q.word_value = *w2;
            q.unit = *u;
          }
        }
        pos = close + 1;
      }
    }
    q.end = pos;
    size_t next = t.first_token_at(pos);
    if (auto u = unit_at(t, next)) {
      q.unit = *u;
      q.end = toks[next].end;
    } else if (i > 0 && unit_from_word(t.token(i - 1)) == Unit::euros) {
      q.unit = Unit::euros;
    } else if (q.unit == Unit::none && euro_sign_before(lower, toks[i].begin)) {
      q.unit = Unit::euros;
    }
    q.inconsistent = q.word_value && static_cast<double>(*q.word_value) != q.amount;
    digits = q;
  }

  // Number words followed by a unit, only before the first digit group.
  size_t limit = digits ? t.first_token_at(digits->begin) : toks.size();
  std::optional<Quantity> bare;
  for (size_t i = 0; i < limit; ++i) {
    auto run = word_run(t, i, limit);
    if (!run) continue;
    Quantity q;
    q.amount = static_cast<double>(run->first);
    q.word_value = run->first;
    q.begin = toks[i].begin;
    q.end = toks[run->second - 1].end;
    if (auto u = unit_at(t, run->second)) {
      q.unit = *u;
      q.end = toks[run->second].end;
      return q;
    }
    if (!bare && !(run->second == i + 1 && t.token(i) == "een")) bare = q;
  }
  if (digits) return digits;
  return bare;
}

}  // namespace judgcode
