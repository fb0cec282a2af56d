#include <doctest.h>

#include <cmath>
#include <random>

#include "judgcode/errors.hpp"
#include "judgcode/numerals.hpp"
#include "judgcode/quantity.hpp"
#include "judgcode/text.hpp"
#include "numeral_oracle.hpp"

using namespace judgcode;
using numerals::parse_dutch_number;

using testsupport::dutch_words;

TEST_SUITE("numerals") {

TEST_CASE("oracle spells known forms") {
  CHECK(dutch_words(21) == "eenentwintig");
  CHECK(dutch_words(22) == "twee\xC3\xABntwintig");
  CHECK(dutch_words(240) == "tweehonderdveertig");
  CHECK(dutch_words(100) == "honderd");
  CHECK(dutch_words(360) == "driehonderdzestig");
}

TEST_CASE("round trip over 1..360") {
  for (int n = 1; n <= 360; ++n) {
    std::string w = dutch_words(n);
    CHECK_MESSAGE(parse_dutch_number(normalize_text(w)) == n, w);
    CHECK_MESSAGE(parse_dutch_number(w) == n, w);
  }
}

TEST_CASE("unit and spaced forms") {
  CHECK(parse_dutch_number("een") == 1);
  CHECK(parse_dutch_number("tweehonderd veertig") == 240);
  CHECK(parse_dutch_number("Drie-en-twintig") == 23);
  CHECK(parse_dutch_number("duizend") == 1000);
  CHECK(parse_dutch_number("vijfduizend zevenhonderd") == 5700);
}

TEST_CASE("known misspellings") {
  CHECK(parse_dutch_number("vijvenvijftig") == 55);
  CHECK(parse_dutch_number("vijendertig") == 35);
  CHECK(parse_dutch_number("vijfig") == 50);
  CHECK(numerals::MisspellingTable::builtin().size() >= 3);
  auto custom = numerals::MisspellingTable::parse("zeuven\tzeven\n");
  CHECK(parse_dutch_number("zeuventig", custom) == 70);
}

TEST_CASE("unparseable input is absent") {
  CHECK_FALSE(parse_dutch_number("").has_value());
  CHECK_FALSE(parse_dutch_number("gevangenisstraf").has_value());
  CHECK_FALSE(parse_dutch_number("eenhonderdtwee x").has_value());
  CHECK_FALSE(parse_dutch_number("en").has_value());
}

TEST_CASE("english words") {
  CHECK(numerals::parse_english_number("thirty") == 30);
  CHECK(numerals::parse_english_number("one hundred and eighty") == 180);
  CHECK(numerals::parse_english_number("twenty-four") == 24);
  CHECK(numerals::parse_number_words("vijf") == 5);
  CHECK(numerals::parse_number_words("five") == 5);
}

TEST_CASE("quantities with digits and words") {
  auto q = parse_quantity("35 (thirty) months");
  REQUIRE(q);
  CHECK(q->amount == 35);
  CHECK(q->unit == Unit::months);
  CHECK(q->inconsistent);
  CHECK(q->word_value == 30);

  q = parse_quantity("5 (vijf) jaren");
  REQUIRE(q);
  CHECK(q->amount == 5);
  CHECK(q->unit == Unit::years);
  CHECK_FALSE(q->inconsistent);

  q = parse_quantity("160 (one hundred and eighty) hours");
  REQUIRE(q);
  CHECK(q->amount == 160);
  CHECK(q->unit == Unit::hours);
  CHECK(q->inconsistent);

  q = parse_quantity("240 (tweehonderd veertig) uren taakstraf");
  REQUIRE(q);
  CHECK(q->amount == 240);
  CHECK(q->unit == Unit::hours);
  CHECK_FALSE(q->inconsistent);
}

TEST_CASE("quantity units and words alone") {
  CHECK(parse_quantity("zes maanden")->amount == 6);
  CHECK(parse_quantity("zes maanden")->unit == Unit::months);
  CHECK(parse_quantity("159 dagen")->unit == Unit::days);
  CHECK(parse_quantity("1 dag")->unit == Unit::days);
  CHECK(parse_quantity("2 weken")->unit == Unit::weeks);
  CHECK(parse_quantity("1 week")->unit == Unit::weeks);
  CHECK(parse_quantity("1 jaar")->unit == Unit::years);
  CHECK(parse_quantity("1 uur")->unit == Unit::hours);
  auto fine = parse_quantity("\xE2\x82\xAC 5.700,- (vijfduizend zevenhonderd euro)");
  REQUIRE(fine);
  CHECK(fine->amount == 5700);
  CHECK(fine->unit == Unit::euros);
  CHECK(fine->word_value == 5700);
  CHECK_FALSE(fine->inconsistent);
  CHECK(parse_quantity("\xE2\x82\xAC 250")->unit == Unit::euros);
  CHECK(parse_quantity("EUR 250")->unit == Unit::euros);
  CHECK(parse_quantity("5.700 euro")->amount == 5700);
  CHECK(parse_quantity("5.700 euro")->unit == Unit::euros);
  CHECK(parse_quantity("157, waarvan")->unit == Unit::none);
  CHECK_FALSE(parse_quantity("geen getal hier").has_value());
}

TEST_CASE("digits take precedence over words") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    int d = 1 + static_cast<int>(rng() % 360);
    int w = 1 + static_cast<int>(rng() % 360);
    std::string text = std::to_string(d) + " (" + normalize_text(dutch_words(w)) + ") maanden";
    auto q = parse_quantity(text);
    REQUIRE_MESSAGE(q, text);
    CHECK(q->amount == d);
    CHECK(q->inconsistent == (d != w));
  }
}

TEST_CASE("dutch decimals") {
  size_t len = 0;
  CHECK(parse_dutch_decimal("5.700,-", &len) == 5700);
  CHECK(len == 7);
  CHECK(parse_dutch_decimal("1,5") == 1.5);
  CHECK(parse_dutch_decimal("12") == 12);
  CHECK_FALSE(parse_dutch_decimal("x").has_value());
}

TEST_CASE("months conversion") {
  CHECK(round2(to_months(1, Unit::days)) == doctest::Approx(0.03));
  CHECK(round2(to_months(159, Unit::days)) == doctest::Approx(5.30));
  CHECK(to_months(159, Unit::days) == doctest::Approx(159.0 / 30.0));
  CHECK(to_months(12, Unit::months) == 12);
  CHECK(to_months(2, Unit::years) == 24);
  CHECK(to_months(3, Unit::weeks) == doctest::Approx(21.0 / 30.0));
  CHECK_THROWS_AS(to_months(5, Unit::hours), DomainError);
  CHECK_THROWS_AS(to_months(5, Unit::euros), DomainError);
  CHECK_THROWS_AS(to_months(5, Unit::none), DomainError);
  CHECK(round2(2.345) == doctest::Approx(2.35));
  CHECK(round2(-2.345) == doctest::Approx(-2.35));
}

TEST_CASE("months conversion is linear and positive") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> amount(0.001, 500);
  for (Unit u : {Unit::days, Unit::weeks, Unit::months, Unit::years}) {
    for (int i = 0; i < 200; ++i) {
      double a = amount(rng), b = amount(rng);
      CHECK(to_months(a + b, u) == doctest::Approx(to_months(a, u) + to_months(b, u)).epsilon(1e-12));
      CHECK(to_months(a, u) > 0);
    }
  }
}

}
