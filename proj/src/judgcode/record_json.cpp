#include "judgcode/record_json.hpp"

#include <algorithm>
#include <cmath>

#include "judgcode/errors.hpp"

namespace judgcode {

using extract::BirthCountry;
using extract::CodedRecord;
using extract::Decision;
using extract::DecisionKind;
using extract::DecisionStatus;
using extract::LegalBasisIssue;
using extract::Recidivism;
using extract::Sex;
using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

constexpr std::pair<DecisionKind, std::string_view> kKinds[] = {
    {DecisionKind::measure, "maatregel"},      {DecisionKind::incarceration, "gevangenisstraf"},
    {DecisionKind::community_service, "taakstraf"}, {DecisionKind::fine, "geldboete"},
    {DecisionKind::acquittal, "vrijspraak"},   {DecisionKind::procedural, "procedureel"}};

constexpr std::pair<Unit, std::string_view> kUnits[] = {{Unit::days, "dag"},   {Unit::weeks, "week"},
                                                        {Unit::months, "maand"}, {Unit::years, "jaar"},
                                                        {Unit::hours, "uur"},  {Unit::euros, "euro"}};

constexpr std::pair<LegalBasisIssue, std::string_view> kIssues[] = {
    {LegalBasisIssue::articles_without_statute, "articles_without_statute"},
    {LegalBasisIssue::statute_without_articles, "statute_without_articles"},
    {LegalBasisIssue::unknown_statute, "unknown_statute"}};

ojson number(double v) {
  if (std::floor(v) == v && std::fabs(v) < 1e15) return static_cast<long long>(v);
  return v;
}

template <class T>
ojson opt(const std::optional<T>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

template <class E, size_t N>
E enum_from(const std::pair<E, std::string_view> (&table)[N], const std::string& s, const char* what) {
  for (const auto& [e, name] : table)
    if (name == s) return e;
  throw ParseError(std::string("unknown ") + what + " '" + s + "'");
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

}  // namespace

std::string_view decision_label(DecisionKind k) {
  for (const auto& [e, name] : kKinds)
    if (e == k) return name;
  return "procedureel";
}

std::string_view unit_label(Unit u) {
  for (const auto& [e, name] : kUnits)
    if (e == u) return name;
  return "";
}

ojson record_to_json(const CodedRecord& r) {
  ojson j;
  j["ECLI"] = r.meta.ecli;
  j["Datum_uitspraak"] = format_dutch_date(r.meta.decision_date);
  j["Instelling"] = r.meta.court;
  j["Zaaknummer"] = r.meta.case_number;
  j["Type"] = r.meta.doc_type_label;
  j["Locatie"] = r.meta.location;
  j["Rechtsgebieden"] = r.meta.jurisdictions;
  j["Taal"] = r.meta.language;
  j["Inhoudsindicatie"] = opt(r.meta.press_release);
  j["Geboortejaar"] = opt(r.offender.birth_year);
  switch (r.offender.birth_country) {
    case BirthCountry::foreign: j["Geboorteland"] = "buitenland"; break;
    case BirthCountry::domestic: j["Geboorteland"] = "Nederland"; break;
    case BirthCountry::missing: j["Geboorteland"] = nullptr; break;
  }
  j["Geslacht"] = r.offender.sex == Sex::female ? "vrouw" : "man";
  j["Onderzoek"] = r.investigations;
  j["Expertise_verdachte"] = r.special_tech_terms;
  j["Internet"] = r.basic_tech_terms;
  j["Expertise_rechtbank"] = r.prosecution.expertise;
  j["Opsporing"] = r.prosecution.detection_methods;
  j["Verdachten_aantal"] =
      r.legal.co_offender_count ? ojson(*r.legal.co_offender_count + 1) : ojson(nullptr);
  switch (r.legal.recidivism) {
    case Recidivism::first_offender: j["Recidive"] = "Eerste keer"; break;
    case Recidivism::repeat_offender: j["Recidive"] = "Recidivist"; break;
    case Recidivism::missing: j["Recidive"] = nullptr; break;
  }
  ojson lb = ojson::array();
  for (const auto& e : r.legal_basis.entries) {
    ojson row = ojson::array();
    row.push_back(e.statute);
    for (const auto& a : e.articles) row.push_back(a);
    lb.push_back(std::move(row));
  }
  j["Wettelijke_voorschriften"] = std::move(lb);
  ojson dec = ojson::array();
  for (const auto& d : r.decisions) {
    ojson o;
    o["soort"] = decision_label(d.kind);
    if (d.amount) {
      o["aantal"] = number(*d.amount);
      o["eenheid"] = unit_label(d.unit);
    }
    if (d.inconsistent) o["x_inconsistent"] = true;
    if (d.life) o["x_levenslang"] = true;
    dec.push_back(std::move(o));
  }
  j["Beslissing"] = std::move(dec);

  j["x_Slachtoffers_aantal"] = opt(r.legal.victim_count);
  j["x_Medeverdachten_aantal"] = opt(r.legal.co_offender_count);
  j["x_Richtlijnen"] = r.prosecution.guidelines_mentioned;
  j["x_Grootschalig"] = r.large_scale_mentioned;
  j["x_Beslissing_status"] = extract::to_string(r.decision_status);
  j["x_Wettelijke_voorschriften_gevonden"] = r.legal_basis.chapter_found;
  ojson findings = ojson::array();
  for (const auto& f : r.legal_basis.findings)
    findings.push_back({{"soort", extract::to_string(f.issue)}, {"detail", f.detail}});
  j["x_Wettelijke_voorschriften_meldingen"] = std::move(findings);
  j["x_Geboortejaar_vermeld"] = opt(r.offender.raw_birth_year);
  j["x_Alleen_metadata"] = r.empty_body;
  return j;
}

CodedRecord record_from_json(const json& j) {
  try {
    CodedRecord r;
    r.meta.ecli = j.at("ECLI").get<std::string>();
    auto date = parse_date(j.at("Datum_uitspraak").get<std::string>());
    if (!date) throw ParseError(r.meta.ecli + ": invalid Datum_uitspraak");
    r.meta.decision_date = *date;
    r.meta.court = j.value("Instelling", "");
    r.meta.case_number = j.value("Zaaknummer", "");
    r.meta.doc_type_label = j.value("Type", "");
    r.meta.doc_type = r.meta.doc_type_label == "Conclusie" ? DocType::ruling : DocType::judgment;
    r.meta.location = j.value("Locatie", "");
    r.meta.jurisdictions = j.value("Rechtsgebieden", std::vector<std::string>{});
    r.meta.language = j.value("Taal", "");
    r.meta.press_release = get_opt<std::string>(j, "Inhoudsindicatie");
    r.offender.birth_year = get_opt<int>(j, "Geboortejaar");
    r.offender.raw_birth_year = get_opt<int>(j, "x_Geboortejaar_vermeld");
    if (!r.offender.raw_birth_year) r.offender.raw_birth_year = r.offender.birth_year;
    auto country = get_opt<std::string>(j, "Geboorteland");
    r.offender.birth_country = !country ? BirthCountry::missing
                               : *country == "buitenland" ? BirthCountry::foreign
                                                          : BirthCountry::domestic;
    r.offender.sex = j.value("Geslacht", "man") == "vrouw" ? Sex::female : Sex::male;
    r.investigations = j.value("Onderzoek", std::vector<std::string>{});
    r.special_tech_terms = j.value("Expertise_verdachte", std::vector<std::string>{});
    r.basic_tech_terms = j.value("Internet", std::vector<std::string>{});
    r.prosecution.expertise = j.value("Expertise_rechtbank", std::vector<std::string>{});
    r.prosecution.detection_methods = j.value("Opsporing", std::vector<std::string>{});
    r.legal.co_offender_count = get_opt<int>(j, "x_Medeverdachten_aantal");
    if (!r.legal.co_offender_count) {
      if (auto n = get_opt<int>(j, "Verdachten_aantal")) r.legal.co_offender_count = *n - 1;
    }
    auto rec = get_opt<std::string>(j, "Recidive");
    r.legal.recidivism = !rec ? Recidivism::missing
                         : *rec == "Recidivist" ? Recidivism::repeat_offender
                                                : Recidivism::first_offender;
    r.legal.victim_count = get_opt<int>(j, "x_Slachtoffers_aantal");
    for (const auto& row : j.value("Wettelijke_voorschriften", json::array())) {
      if (!row.is_array() || row.empty()) throw ParseError(r.meta.ecli + ": malformed Wettelijke_voorschriften");
      extract::StatuteArticles e;
      e.statute = row[0].get<std::string>();
      for (size_t i = 1; i < row.size(); ++i) e.articles.push_back(row[i].get<std::string>());
      r.legal_basis.entries.push_back(std::move(e));
    }
    r.legal_basis.chapter_found = j.value("x_Wettelijke_voorschriften_gevonden", !r.legal_basis.entries.empty());
    for (const auto& f : j.value("x_Wettelijke_voorschriften_meldingen", json::array()))
      r.legal_basis.findings.push_back(
          {enum_from(kIssues, f.at("soort").get<std::string>(), "finding"), f.value("detail", "")});
    for (const auto& o : j.value("Beslissing", json::array())) {
      Decision d;
      d.kind = enum_from(kKinds, o.at("soort").get<std::string>(), "decision kind");
      if (o.contains("aantal") && !o["aantal"].is_null()) {
        d.amount = o["aantal"].get<double>();
        d.unit = enum_from(kUnits, o.at("eenheid").get<std::string>(), "unit");
      }
      d.inconsistent = o.value("x_inconsistent", false);
      d.life = o.value("x_levenslang", false);
      r.decisions.push_back(d);
    }
    r.prosecution.guidelines_mentioned = j.value("x_Richtlijnen", false);
    r.large_scale_mentioned = j.value("x_Grootschalig", false);
    std::string status = j.value("x_Beslissing_status", r.decisions.empty() ? "missing" : "coded");
    r.decision_status = status == "coded"         ? DecisionStatus::coded
                        : status == "not_codable" ? DecisionStatus::not_codable
                                                  : DecisionStatus::missing;
    r.empty_body = j.value("x_Alleen_metadata", false);
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed record: ") + e.what());
  }
}

std::string records_to_json_text(const std::vector<CodedRecord>& records) {
  std::vector<const CodedRecord*> sorted;
  for (const auto& r : records) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->meta.ecli < b->meta.ecli; });
  ojson arr = ojson::array();
  for (auto* r : sorted) arr.push_back(record_to_json(*r));
  return arr.dump(2) + "\n";
}

std::vector<CodedRecord> records_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("records file is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("records file must hold a JSON array");
  std::vector<CodedRecord> out;
  for (const auto& item : j) out.push_back(record_from_json(item));
  return out;
}

}  // namespace judgcode
