#include <doctest.h>

#include <filesystem>
#include <map>
#include <set>

#include "judgcode/extract.hpp"
#include "judgcode/ingest.hpp"
#include "judgcode/errors.hpp"
#include "judgcode/lint.hpp"
#include "judgcode/quantity.hpp"
#include "judgcode/record_json.hpp"
#include "judgcode/segmenter.hpp"
#include "judgcode/tables.hpp"
#include "judgcode/text.hpp"
#include "support.hpp"

using namespace judgcode;
using namespace judgcode::lint;

namespace {

struct Coded {
  JudgmentDocument doc;
  extract::CodedRecord record;
};

Coded code(const std::string& xml) {
  Coded c{ingest::normalize_judgment(xml), {}};
  segment::apply(c.doc);
  c.record = extract::code_judgment(c.doc);
  return c;
}

std::vector<Coded> fixture_corpus() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(testsupport::fixtures() / "lint"))
    files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Coded> out;
  for (const auto& f : files) out.push_back(code(read_file(f)));
  return out;
}

// Rules that fire on a judgment whose evidence chapter holds `text`.
std::multiset<std::string> fired(const std::string& text) {
  auto c = code(testsupport::judgment_xml(
      "ECLI:NL:RBAMS:2019:1", "2019-10-09",
      {{"Het bewijs", text},
       {"Wettelijke voorschriften", "artikel 310 van het Wetboek van Strafrecht"},
       {"Beslissing", "gevangenisstraf voor de duur van 3 (drie) maanden"}},
      "geboren op [geboortedag] 1985 te [geboorteplaats]"));
  std::multiset<std::string> out;
  for (const auto& i : lint_judgment(c.doc, c.record)) out.insert(i.rule);
  return out;
}

bool fires(const std::string& text, const std::string& rule) { return fired(text).count(rule) > 0; }

const std::map<std::string, std::string> kExpected = {
    {"ECLI:NL:RBAMS:2019:9001", "imei_number"},
    {"ECLI:NL:RBAMS:2019:9002", "phone_number"},
    {"ECLI:NL:RBAMS:2019:9003", "license_plate"},
    {"ECLI:NL:RBAMS:2019:9004", "crypto_address"},
    {"ECLI:NL:RBAMS:2019:9005", "passport_number"},
    {"ECLI:NL:RBAMS:2019:9006", "street_address"},
    {"ECLI:NL:RBAMS:2019:9007", "number_word_mismatch"},
    {"ECLI:NL:RBAMS:2019:9008", "implausible_birth_year"},
    {"ECLI:NL:RBAMS:2019:9009", "missing_unit"},
    {"ECLI:NL:RBAMS:2019:9010", "unknown_article"},
    {"ECLI:NL:RBAMS:2019:9011", "empty_legal_basis"},
    {"ECLI:NL:RBAMS:2019:9012", "articles_without_statute"},
    {"ECLI:NL:RBAMS:2019:9013", "statute_without_articles"},
};

}  // namespace

TEST_SUITE("lint") {

TEST_CASE("rule catalogue") {
  CHECK(rules().size() == 13);
  std::map<Category, int> per;
  for (const auto& r : rules()) {
    ++per[r.category];
    CHECK(find_rule(r.id) == &r);
    CHECK(r.severity == (r.category == Category::A_anonymization ? Severity::error : Severity::warning));
  }
  CHECK(per[Category::A_anonymization] == 6);
  CHECK(per[Category::S_spelling_consistency] == 3);
  CHECK(per[Category::V_legal_basis] == 4);
  CHECK(find_rule("nope") == nullptr);
  CHECK(short_name(Category::V_legal_basis) == "V");
}

TEST_CASE("fixture corpus yields one finding per rule") {
  auto corpus = fixture_corpus();
  REQUIRE(corpus.size() == 14);
  std::vector<LintIssue> all;
  for (const auto& c : corpus) {
    auto issues = lint_judgment(c.doc, c.record);
    auto it = kExpected.find(c.doc.meta.ecli);
    if (it == kExpected.end()) {
      CHECK_MESSAGE(issues.empty(), c.doc.meta.ecli);
      continue;
    }
    REQUIRE_MESSAGE(issues.size() == 1, c.doc.meta.ecli);
    CHECK(issues[0].rule == it->second);
    CHECK(issues[0].ecli == c.doc.meta.ecli);
    all.insert(all.end(), issues.begin(), issues.end());
  }
  auto report = aggregate(all);
  CHECK(report.issues.size() == 13);
  for (const auto& r : rules()) CHECK_MESSAGE(report.per_rule[std::string(r.id)] == 1, r.id);
  CHECK(report.per_category[Category::A_anonymization] == 6);
  CHECK(report.per_category[Category::S_spelling_consistency] == 3);
  CHECK(report.per_category[Category::V_legal_basis] == 4);
  for (const auto& i : report.issues) {
    CHECK(i.category == find_rule(i.rule)->category);
    CHECK(i.excerpt.size() <= kMaxExcerpt);
    CHECK_FALSE(i.excerpt.empty());
  }
}

TEST_CASE("disabling a rule removes exactly its findings") {
  auto corpus = fixture_corpus();
  std::vector<LintIssue> full;
  for (const auto& c : corpus) {
    auto v = lint_judgment(c.doc, c.record);
    full.insert(full.end(), v.begin(), v.end());
  }
  for (const auto& r : rules()) {
    LintOptions o;
    o.rules.set(r.id, false);
    std::vector<LintIssue> partial;
    for (const auto& c : corpus) {
      auto v = lint_judgment(c.doc, c.record, o);
      partial.insert(partial.end(), v.begin(), v.end());
    }
    std::vector<LintIssue> expected;
    for (const auto& i : full)
      if (i.rule != r.id) expected.push_back(i);
    CHECK_MESSAGE(partial == expected, r.id);
  }
}

TEST_CASE("number-word findings agree with parse_quantity") {
  // Excerpts carry context, so any quantity inside one may be the flagged one.
  auto check_text = [](const std::string& text, size_t expected) {
    auto c = code(testsupport::judgment_xml("ECLI:NL:RBAMS:2019:2", "2019-10-09",
                                            {{"Het bewijs", text}, {"Beslissing", "x"}}));
    size_t n = 0;
    for (const auto& i : lint_judgment(c.doc, c.record)) {
      if (i.rule != "number_word_mismatch") continue;
      ++n;
      bool flagged = false;
      std::string_view ex = i.excerpt;
      for (size_t p = 0; p < ex.size(); ++p) {
        if (!is_digit(ex[p]) || (p > 0 && is_digit(ex[p - 1]))) continue;
        auto q = parse_quantity(ex.substr(p));
        flagged = flagged || (q && q->inconsistent);
      }
      CHECK_MESSAGE(flagged, i.excerpt);
    }
    CHECK(n == expected);
  };
  check_text("een gevangenisstraf van 35 (thirty) maanden", 1);
  check_text("160 (honderdtachtig) uren en 5 (vijf) jaren en 12 (elf) dagen", 2);
  CHECK(fires("een gevangenisstraf van 35 (dertig) maanden", "number_word_mismatch"));
  CHECK_FALSE(fires("een gevangenisstraf van 35 (vijfendertig) maanden", "number_word_mismatch"));
}

TEST_CASE("identity patterns") {
  CHECK(luhn_valid("490154203237518"));
  CHECK_FALSE(luhn_valid("490154203237519"));
  CHECK(fires("toestel met IMEI 490154203237518 in beslag", "imei_number"));
  CHECK_FALSE(fires("nummer 490154203237519 in beslag", "imei_number"));
  CHECK(fires("belde naar 06-12345678 die avond", "phone_number"));
  CHECK(fires("belde naar +31 6 12345678 die avond", "phone_number"));
  CHECK(fires("belde naar 020-1234567 die avond", "phone_number"));
  CHECK_FALSE(fires("parketnummer 13-123456-19", "phone_number"));
  CHECK(fires("de auto met kenteken 12-XTV-3 reed", "license_plate"));
  CHECK(fires("de auto met kenteken GB-12-ZX reed", "license_plate"));
  CHECK_FALSE(fires("op 12-10-2019 reed", "license_plate"));
  CHECK(fires("naar adres 1BoatSLRHtKNngkdXEeobR76b53LETtpyT overgemaakt", "crypto_address"));
  CHECK(fires("naar 0x52908400098527886E0F7030069857D2E4169EE7 overgemaakt", "crypto_address"));
  CHECK_FALSE(fires("naar [bitcoinadres] overgemaakt", "crypto_address"));
  CHECK(fires("het paspoort met nummer NW8RF2PK3 werd getoond", "passport_number"));
  CHECK_FALSE(fires("het dossier NW8RF2PK3 werd getoond", "passport_number"));
  CHECK(fires("woonachtig aan de Kerkstraat 12 te Amsterdam", "street_address"));
  CHECK_FALSE(fires("woonachtig aan de [adres] te Amsterdam", "street_address"));
}

TEST_CASE("consistency and legal-basis rules") {
  CHECK(fires("een taakstraf voor de duur van 157, waarvan 90 voorwaardelijk", "missing_unit"));
  CHECK_FALSE(fires("een taakstraf voor de duur van 157 uren", "missing_unit"));
  CHECK(is_unknown_article("Sr", "10310", codebook::StatuteMaxTable::builtin(), ArticleBounds::builtin()));
  CHECK_FALSE(is_unknown_article("Sr", "310", codebook::StatuteMaxTable::builtin(), ArticleBounds::builtin()));
  CHECK_FALSE(is_unknown_article("Sr", "479", codebook::StatuteMaxTable::builtin(), ArticleBounds::builtin()));
  CHECK(ArticleBounds::builtin().last("Sr") == 480);
  CHECK_FALSE(ArticleBounds::builtin().last("XYZ").has_value());
}

TEST_CASE("implausible birth year") {
  auto lint_birth = [](const std::string& born) {
    auto c = code(testsupport::judgment_xml("ECLI:NL:RBAMS:2019:3", "2019-10-09", {{"Beslissing", "x"}},
                                            "geboren op [geboortedag] " + born + " te [geboorteplaats]"));
    std::set<std::string> r;
    for (const auto& i : lint_judgment(c.doc, c.record)) r.insert(i.rule);
    return r.count("implausible_birth_year") == 1;
  };
  CHECK(lint_birth("1900"));
  CHECK(lint_birth("2025"));
  CHECK_FALSE(lint_birth("1985"));
}

TEST_CASE("rule toggles from config") {
  auto rs = RuleSet::parse("imei_number\toff\nphone_number\ton\n");
  CHECK_FALSE(rs.enabled("imei_number"));
  CHECK(rs.enabled("phone_number"));
  CHECK(rs.enabled("street_address"));
  CHECK_THROWS_AS(RuleSet::parse("no_such_rule\toff\n"), ConfigError);
  CHECK_THROWS_AS(RuleSet::parse("imei_number\tmaybe\n"), ConfigError);
  CHECK_THROWS_AS(rs.set("no_such_rule", true), InvalidArgument);
  auto builtin = RuleSet::load({});
  for (const auto& r : rules()) CHECK(builtin.enabled(r.id));
}

TEST_CASE("linting reads only") {
  auto corpus = fixture_corpus();
  for (const auto& c : corpus) {
    auto doc = c.doc;
    auto before = record_to_json(c.record);
    lint_judgment(doc, c.record);
    CHECK(doc.plain_text == c.doc.plain_text);
    CHECK(record_to_json(c.record) == before);
  }
}

TEST_CASE("report ordering") {
  std::vector<LintIssue> issues = {
      {"ECLI:B", Category::V_legal_basis, "unknown_article", "x", Severity::warning},
      {"ECLI:A", Category::V_legal_basis, "empty_legal_basis", "y", Severity::warning},
      {"ECLI:A", Category::A_anonymization, "imei_number", "z", Severity::error},
  };
  auto r = aggregate(issues);
  CHECK(r.issues[0].rule == "imei_number");
  CHECK(r.issues[1].rule == "empty_legal_basis");
  CHECK(r.issues[2].ecli == "ECLI:B");
  CHECK(aggregate({}).issues.empty());
}

TEST_CASE("excerpts are bounded") {
  std::string longtext(600, 'a');
  for (size_t i = 7; i < longtext.size(); i += 8) longtext[i] = ' ';
  auto c = code(testsupport::judgment_xml("ECLI:NL:RBAMS:2019:4", "2019-10-09",
                                          {{"Het bewijs", longtext + " Kerkstraat 12 " + longtext},
                                           {"Beslissing", "x"}}));
  auto issues = lint_judgment(c.doc, c.record);
  REQUIRE_FALSE(issues.empty());
  for (const auto& i : issues) CHECK(i.excerpt.size() <= kMaxExcerpt);
}

}
