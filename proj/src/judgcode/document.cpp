#include "judgcode/document.hpp"

#include <array>
#include <charconv>

#include <fmt/format.h>

namespace judgcode {

namespace {
constexpr std::array<std::string_view, 7> kChapterNames = {
    "legal_basis", "decision", "evidence", "indictment",
    "personal_circumstances", "sentencing_motivation", "other"};

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}
}  // namespace

std::string_view to_string(ChapterKind kind) { return kChapterNames[static_cast<size_t>(kind)]; }

std::optional<ChapterKind> chapter_kind_from_string(std::string_view s) {
  for (size_t i = 0; i < kChapterNames.size(); ++i)
    if (kChapterNames[i] == s) return static_cast<ChapterKind>(i);
  return std::nullopt;
}

std::string format_dutch_date(const Date& d) {
  return fmt::format("{:02}-{:02}-{:04}", static_cast<unsigned>(d.day()), static_cast<unsigned>(d.month()),
                     static_cast<int>(d.year()));
}

std::string format_iso_date(const Date& d) {
  return fmt::format("{:04}-{:02}-{:02}", static_cast<int>(d.year()), static_cast<unsigned>(d.month()),
                     static_cast<unsigned>(d.day()));
}

std::optional<Date> parse_date(std::string_view s) {
  if (s.size() != 10) return std::nullopt;
  std::optional<int> y, m, d;
  if (s[4] == '-' && s[7] == '-') {
    y = parse_int(s.substr(0, 4));
    m = parse_int(s.substr(5, 2));
    d = parse_int(s.substr(8, 2));
  } else if (s[2] == '-' && s[5] == '-') {
    d = parse_int(s.substr(0, 2));
    m = parse_int(s.substr(3, 2));
    y = parse_int(s.substr(6, 4));
  }
  if (!y || !m || !d || *m < 1 || *m > 12 || *d < 1) return std::nullopt;
  Date date{std::chrono::year(*y), std::chrono::month(static_cast<unsigned>(*m)),
            std::chrono::day(static_cast<unsigned>(*d))};
  if (!date.ok()) return std::nullopt;
  return date;
}

}  // namespace judgcode
