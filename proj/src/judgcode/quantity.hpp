#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace judgcode {

enum class Unit { days, weeks, months, years, hours, euros, none };

std::string_view to_string(Unit u);

struct Quantity {
  double amount = 0;
  Unit unit = Unit::none;
  bool inconsistent = false;        // digits and words disagree
  std::optional<long> word_value;   // value of the number words, if any
  bool from_digits = false;
  size_t begin = 0;                 // span of the match in the input
  size_t end = 0;
};

// First quantity in `text`: a digit group, a parenthesized or bare number
// word, or both, optionally followed by a unit. Digits win over words.
std::optional<Quantity> parse_quantity(std::string_view text);

// Parses a Dutch-formatted number: "5.700,-" -> 5700, "1,5" -> 1.5.
// `len` receives the consumed length.
std::optional<double> parse_dutch_decimal(std::string_view text, size_t* len = nullptr);

// Unit word at the start of `token` (lower-case), if any.
std::optional<Unit> unit_from_word(std::string_view token);

bool is_duration(Unit u);

// Months at full precision (a month is 30 days). Throws DomainError for
// non-duration units.
double to_months(double amount, Unit unit);

// Half-away-from-zero rounding to 2 decimals for reports.
double round2(double v);

}  // namespace judgcode
