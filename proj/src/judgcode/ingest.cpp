#include "judgcode/ingest.hpp"

#include <algorithm>
#include <chrono>
#include <memory>

#include <expat.h>
#include <fmt/format.h>
#include <openssl/evp.h>

#include "judgcode/errors.hpp"
#include "judgcode/tables.hpp"

namespace judgcode::ingest {

namespace {

std::string_view local_name(const XML_Char* qname) {
  std::string_view n(qname);
  auto colon = n.rfind(':');
  return colon == std::string_view::npos ? n : n.substr(colon + 1);
}

bool is_body_element(std::string_view name) { return name == "uitspraak" || name == "conclusie"; }

// Which metadata field the current character data belongs to.
enum class Field { none, identifier, date, creator, case_number, type, language, spatial, subject };

Field field_for(std::string_view name) {
  if (name == "identifier") return Field::identifier;
  if (name == "date") return Field::date;
  if (name == "creator") return Field::creator;
  if (name == "zaaknummer") return Field::case_number;
  if (name == "type") return Field::type;
  if (name == "language") return Field::language;
  if (name == "spatial") return Field::spatial;
  if (name == "subject") return Field::subject;
  return Field::none;
}

struct ParseState {
  explicit ParseState(const FoldTable& fold) : body(fold), summary(fold) {}

  int depth = 0;
  int description_depth = -1;  // depth of the rdf:Description being read
  int body_depth = -1;
  int summary_depth = -1;
  bool have_body = false;
  bool have_summary = false;

  Field field = Field::none;
  std::string field_text;

  std::string identifier, date, creator, case_number, type, language, spatial;
  std::vector<std::string> subjects;

  TextBuilder body;
  TextBuilder summary;
  std::vector<TagSpan> tags;
  std::vector<int> open_tags;  // stack of indices into tags
};

void XMLCALL on_start(void* data, const XML_Char* qname, const XML_Char**) {
  auto* st = static_cast<ParseState*>(data);
  std::string_view name = local_name(qname);
  ++st->depth;

  if (st->body_depth >= 0) {
    st->body.boundary();
    TagSpan span;
    span.name = std::string(name);
    span.depth = static_cast<int>(st->open_tags.size());
    span.parent = st->open_tags.empty() ? -1 : st->open_tags.back();
    span.begin = st->body.next_offset();
    st->tags.push_back(std::move(span));
    st->open_tags.push_back(static_cast<int>(st->tags.size() - 1));
    return;
  }
  if (st->summary_depth >= 0) {
    st->summary.boundary();
    return;
  }
  if (name == "Description" && st->description_depth == -1) {
    st->description_depth = st->depth;
    return;
  }
  if (st->description_depth >= 0 && st->depth == st->description_depth + 1) {
    st->field = field_for(name);
    st->field_text.clear();
    return;
  }
  if (st->depth <= 2 && is_body_element(name) && !st->have_body) {
    st->body_depth = st->depth;
    st->have_body = true;
    return;
  }
  if (st->depth <= 2 && name == "inhoudsindicatie" && !st->have_summary) {
    st->summary_depth = st->depth;
    st->have_summary = true;
  }
}

void store_field(ParseState* st) {
  std::string value = normalize_text(st->field_text);
  auto set_once = [&](std::string& dst) {
    if (dst.empty()) dst = value;
  };
  switch (st->field) {
    case Field::identifier:
      if (st->identifier.empty() && value.rfind("ECLI:", 0) == 0) st->identifier = value;
      break;
    case Field::date: set_once(st->date); break;
    case Field::creator: set_once(st->creator); break;
    case Field::case_number: set_once(st->case_number); break;
    case Field::type: set_once(st->type); break;
    case Field::language: set_once(st->language); break;
    case Field::spatial: set_once(st->spatial); break;
    case Field::subject:
      if (!value.empty()) st->subjects.push_back(value);
      break;
    case Field::none: break;
  }
  st->field = Field::none;
}

void XMLCALL on_end(void* data, const XML_Char*) {
  auto* st = static_cast<ParseState*>(data);
  if (st->body_depth >= 0) {
    if (st->depth == st->body_depth) {
      st->body_depth = -1;
    } else {
      TagSpan& span = st->tags[st->open_tags.back()];
      span.end = st->body.size();
      span.begin = std::min(span.begin, span.end);
      st->open_tags.pop_back();
      st->body.boundary();
    }
  } else if (st->summary_depth >= 0) {
    if (st->depth == st->summary_depth) st->summary_depth = -1;
    st->summary.boundary();
  } else if (st->description_depth >= 0) {
    if (st->depth == st->description_depth + 1 && st->field != Field::none) store_field(st);
    if (st->depth == st->description_depth) st->description_depth = -2;  // only the first one
  }
  --st->depth;
}

void XMLCALL on_text(void* data, const XML_Char* s, int len) {
  auto* st = static_cast<ParseState*>(data);
  std::string_view text(s, static_cast<size_t>(len));
  if (st->body_depth >= 0)
    st->body.append(text);
  else if (st->summary_depth >= 0)
    st->summary.append(text);
  else if (st->field != Field::none)
    st->field_text.append(text);
}

int current_year() {
  auto today = std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now());
  return static_cast<int>(std::chrono::year_month_day(today).year());
}

}  // namespace

JudgmentDocument normalize_judgment(std::string_view xml, const FoldTable& fold) {
  ParseState st(fold);
  std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser(XML_ParserCreate("UTF-8"),
                                                                      &XML_ParserFree);
  if (!parser) throw Error(ErrorCode::internal, "cannot allocate XML parser");
  XML_SetUserData(parser.get(), &st);
  XML_SetElementHandler(parser.get(), on_start, on_end);
  XML_SetCharacterDataHandler(parser.get(), on_text);
  if (XML_Parse(parser.get(), xml.data(), static_cast<int>(xml.size()), XML_TRUE) == XML_STATUS_ERROR) {
    long line = static_cast<long>(XML_GetCurrentLineNumber(parser.get()));
    long col = static_cast<long>(XML_GetCurrentColumnNumber(parser.get())) + 1;
    throw ParseError(fmt::format("ill-formed XML at {}:{}: {}", line, col,
                                 XML_ErrorString(XML_GetErrorCode(parser.get()))),
                     line, col);
  }

  if (st.identifier.empty()) throw ParseError("document has no ECLI identifier");
  auto date = parse_date(st.date);
  if (!date) throw ParseError(st.identifier + ": invalid decision date '" + st.date + "'");
  int year = static_cast<int>(date->year());
  if (year < 2000 || year > current_year())
    throw ParseError(fmt::format("{}: decision year {} out of range", st.identifier, year));

  JudgmentDocument doc;
  doc.meta.ecli = st.identifier;
  doc.meta.decision_date = *date;
  doc.meta.court = st.creator;
  doc.meta.case_number = st.case_number;
  doc.meta.doc_type_label = st.type;
  doc.meta.doc_type = to_lower_ascii(st.type) == "conclusie" ? DocType::ruling : DocType::judgment;
  doc.meta.jurisdictions = std::move(st.subjects);
  doc.meta.location = st.spatial;
  doc.meta.language = st.language.empty() ? "nl" : st.language;
  std::string summary = st.summary.take();
  if (!summary.empty()) doc.meta.press_release = std::move(summary);
  doc.plain_text = st.body.take();
  doc.tags = std::move(st.tags);
  doc.metadata_only = doc.plain_text.empty();
  doc.source_bytes_hash = sha256_hex(xml);
  return doc;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::internal, "SHA-256 failed");
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) out += fmt::format("{:02x}", digest[i]);
  return out;
}

JuvenileMarkers JuvenileMarkers::parse(std::string_view tsv) {
  JuvenileMarkers m;
  for (const auto& row : parse_delimited(tsv)) {
    if (row.fields.size() < 2)
      throw ConfigError("juvenile markers line " + std::to_string(row.line) + ": expected <kind>\\t<value>");
    const std::string& kind = row.fields[0];
    std::string value = to_lower_ascii(row.fields[1]);
    if (kind == "vocabulary")
      m.vocabulary_.add(value, 0);
    else if (kind == "statute")
      m.statute_prefixes_.push_back(value);
    else if (kind == "subject")
      m.subjects_.push_back(value);
    else if (kind != "version")
      throw ConfigError("juvenile markers line " + std::to_string(row.line) + ": unknown kind '" + kind + "'");
  }
  return m;
}

const JuvenileMarkers& JuvenileMarkers::builtin() {
  static const JuvenileMarkers m = parse(load_config_text({}, "juvenile_markers.tsv"));
  return m;
}

namespace {

// "77" matches "77a" .. "77hh" but not "77" or "770".
bool juvenile_article(std::string_view token, std::string_view prefix) {
  if (token.size() <= prefix.size() || token.size() > prefix.size() + 2) return false;
  if (token.substr(0, prefix.size()) != prefix) return false;
  for (char c : token.substr(prefix.size()))
    if (c < 'a' || c > 'z') return false;
  return true;
}

}  // namespace

bool JuvenileMarkers::matches(const JudgmentDocument& doc) const {
  for (const auto& j : doc.meta.jurisdictions) {
    std::string lj = to_lower_ascii(j);
    for (const auto& s : subjects_)
      if (lj.find(s) != std::string::npos) return true;
  }
  TokenizedText text(doc.plain_text);
  for (const auto& ch : doc.chapters) {
    if (ch.kind == ChapterKind::decision && vocabulary_.contains_any(text, ch.begin, ch.end)) return true;
    if (ch.kind == ChapterKind::legal_basis && !statute_prefixes_.empty()) {
      for (size_t i = text.first_token_at(ch.begin); i < text.tokens().size() && text.tokens()[i].begin < ch.end; ++i)
        for (const auto& p : statute_prefixes_)
          if (juvenile_article(text.token(i), p)) return true;
    }
  }
  return false;
}

Exclusion classify(const JudgmentDocument& doc, const JuvenileMarkers& markers) {
  if (doc.metadata_only || doc.plain_text.empty()) return Exclusion::metadata_only;
  if (markers.matches(doc)) return Exclusion::minor;
  return Exclusion::retained;
}

FilterResult filter_corpus(std::vector<JudgmentDocument> corpus, const JuvenileMarkers& markers) {
  FilterResult r;
  r.total = corpus.size();
  for (auto& doc : corpus) {
    switch (classify(doc, markers)) {
      case Exclusion::retained: r.retained.push_back(std::move(doc)); break;
      case Exclusion::metadata_only: r.excluded_metadata_only.push_back(doc.meta.ecli); break;
      case Exclusion::minor: r.excluded_minor.push_back(doc.meta.ecli); break;
    }
  }
  return r;
}

}  // namespace judgcode::ingest
