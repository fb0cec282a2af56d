#include <doctest.h>

#include "judgcode/ingest.hpp"
#include "judgcode/segmenter.hpp"
#include "judgcode/tables.hpp"
#include "support.hpp"

using namespace judgcode;
using testsupport::judgment_xml;
using testsupport::judgment_xml_body;

namespace {

JudgmentDocument parse(const std::string& xml) { return ingest::normalize_judgment(xml); }

std::vector<ChapterKind> kinds(const std::vector<Chapter>& cs) {
  std::vector<ChapterKind> k;
  for (const auto& c : cs) k.push_back(c.kind);
  return k;
}

void check_spans(const JudgmentDocument& doc, const std::vector<Chapter>& cs) {
  size_t last = 0;
  for (const auto& c : cs) {
    CHECK(c.begin >= last);
    CHECK(c.begin < c.end);
    CHECK(c.end <= doc.plain_text.size());
    last = c.end;
  }
}

}  // namespace

TEST_SUITE("segmenter") {

TEST_CASE("section titles map to kinds") {
  auto doc = parse(judgment_xml("ECLI:NL:RBAMS:2019:1", "2019-01-02",
                                {{"Wettelijke voorschriften", "artikel 310 Sr"},
                                 {"Beslissing", "gevangenisstraf van 3 maanden"}}));
  auto cs = segment::segment(doc);
  CHECK(kinds(cs) == std::vector<ChapterKind>{ChapterKind::legal_basis, ChapterKind::decision});
  check_spans(doc, cs);
  CHECK(doc.body(cs[1]).find("gevangenisstraf van 3 maanden") != std::string_view::npos);
  CHECK(cs[0].raw_title == "Wettelijke voorschriften");
}

TEST_CASE("heading classification") {
  const auto& t = segment::HeadingTable::builtin();
  CHECK(t.classify("De op te leggen maatregel berust op artikel") == ChapterKind::legal_basis);
  CHECK(t.classify("8. De wettelijke voorschriften") == ChapterKind::legal_basis);
  CHECK(t.classify("De Wet") == ChapterKind::legal_basis);
  CHECK(t.classify("DE BESLISSING:") == ChapterKind::decision);
  CHECK(t.classify("Wettelijke voorschriften") == ChapterKind::legal_basis);
  CHECK_FALSE(t.classify("Overwegingen omtrent de wetgever").has_value());
  CHECK_FALSE(t.classify("").has_value());
  CHECK(segment::clean_title("4.1 Het bewijs.") == "het bewijs");
  CHECK(segment::clean_title("IV. Beslissing") == "beslissing");
  CHECK(segment::clean_title("b) Strafmotivering") == "strafmotivering");
}

TEST_CASE("tag-free body is one other chapter") {
  auto doc = parse(judgment_xml_body("ECLI:NL:RBAMS:2019:2", "2019-01-02", "<para>Alleen tekst, geen koppen.</para>"));
  auto cs = segment::segment(doc);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].kind == ChapterKind::other);
  CHECK(cs[0].begin == 0);
  CHECK(cs[0].end == doc.plain_text.size());
}

TEST_CASE("headings are used when sections carry no known title") {
  auto doc = parse(judgment_xml_body("ECLI:NL:RBAMS:2019:3", "2019-01-02",
                                     "<para>Inleiding.</para>"
                                     "<bridgehead>Toegepaste wettelijke voorschriften</bridgehead>"
                                     "<para>artikel 310 Sr</para>"
                                     "<para><emphasis>Beslissing</emphasis></para>"
                                     "<para>taakstraf van 40 uren</para>"));
  auto cs = segment::segment(doc);
  CHECK(kinds(cs) == std::vector<ChapterKind>{ChapterKind::legal_basis, ChapterKind::decision});
  check_spans(doc, cs);
  CHECK(doc.body(cs[1]).find("taakstraf van 40 uren") != std::string_view::npos);
}

TEST_CASE("nested sections split under an unknown parent") {
  auto doc = parse(judgment_xml_body(
      "ECLI:NL:RBAMS:2019:4", "2019-01-02",
      "<section><title>Uitwerking</title>"
      "<section><title>Het bewijs</title><para>bewijsmiddelen</para></section>"
      "<section><title>Wettelijke voorschriften</title><para>artikel 311 Sr</para></section>"
      "</section>"
      "<section><title>Beslissing</title><para>gevangenisstraf van 2 maanden</para></section>"));
  auto cs = segment::segment(doc);
  CHECK(kinds(cs) ==
        std::vector<ChapterKind>{ChapterKind::evidence, ChapterKind::legal_basis, ChapterKind::decision});
  check_spans(doc, cs);
}

TEST_CASE("decision appears at most once") {
  auto doc = parse(judgment_xml("ECLI:NL:RBAMS:2019:5", "2019-01-02",
                                {{"Beslissing", "eerste"}, {"Het bewijs", "x"}, {"Beslissing", "tweede"}}));
  auto cs = segment::segment(doc);
  int decisions = 0;
  for (const auto& c : cs) decisions += c.kind == ChapterKind::decision;
  CHECK(decisions == 1);
  segment::apply(doc);
  auto first = segment::chapter_lookup(doc, ChapterKind::decision);
  REQUIRE(first.has_value());
  CHECK(doc.body(*first).find("eerste") != std::string_view::npos);
  // Adjacent duplicates merge into one span.
  auto adj = parse(judgment_xml("ECLI:NL:RBAMS:2019:6", "2019-01-02",
                                {{"Beslissing", "eerste"}, {"De beslissing", "tweede"}}));
  segment::apply(adj);
  REQUIRE(adj.chapters.size() == 1);
  CHECK(adj.body(adj.chapters[0]).find("tweede") != std::string_view::npos);
}

TEST_CASE("chapter lookup") {
  auto doc = parse(judgment_xml("ECLI:NL:RBAMS:2019:7", "2019-01-02",
                                {{"Inleiding", "a"}, {"Beslissing", "b"}, {"Slot", "c"}}));
  segment::apply(doc);
  CHECK(segment::chapter_lookup(doc, ChapterKind::decision).has_value());
  CHECK_FALSE(segment::chapter_lookup(doc, ChapterKind::legal_basis).has_value());
  auto other = segment::chapter_lookup(doc, ChapterKind::other);
  REQUIRE(other.has_value());
  CHECK(other->raw_title == "Inleiding");
}

TEST_CASE("segmentation is deterministic") {
  auto xml = read_file(testsupport::fixtures() / "published" / "ECLI_NL_RBMNE_2014_4790.xml");
  auto a = segment::segment(parse(xml));
  auto b = segment::segment(parse(xml));
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].kind == b[i].kind);
    CHECK(a[i].begin == b[i].begin);
    CHECK(a[i].end == b[i].end);
  }
}

TEST_CASE("synonym edits leave unlisted titles alone") {
  auto xml = judgment_xml("ECLI:NL:RBAMS:2019:8", "2019-01-02",
                          {{"Het bewijs", "a"}, {"Slotsom", "b"}, {"Beslissing", "c"}});
  auto doc = parse(xml);
  std::string base(load_config_text({}, "heading_synonyms.tsv"));
  auto edited = segment::HeadingTable::parse(base + "slotsom\tsentencing_motivation\n");
  auto before = segment::segment(doc);
  auto after = segment::segment(doc, edited);
  REQUIRE(before.size() == after.size());
  for (size_t i = 0; i < before.size(); ++i) {
    if (before[i].raw_title == "Slotsom") {
      CHECK(after[i].kind == ChapterKind::sentencing_motivation);
      continue;
    }
    CHECK(before[i].kind == after[i].kind);
    CHECK(before[i].begin == after[i].begin);
    CHECK(before[i].end == after[i].end);
  }
}

TEST_CASE("chapters cover the text between first and last heading") {
  auto doc = parse(read_file(testsupport::fixtures() / "published" / "ECLI_NL_RBMNE_2014_4790.xml"));
  auto cs = segment::segment(doc);
  REQUIRE(cs.size() >= 2);
  for (size_t i = 0; i + 1 < cs.size(); ++i) CHECK(cs[i + 1].begin - cs[i].end <= 1);
}

TEST_CASE("unknown kind in the synonym table is rejected") {
  CHECK_THROWS(segment::HeadingTable::parse("beslissing\tverdict\n"));
}

}
