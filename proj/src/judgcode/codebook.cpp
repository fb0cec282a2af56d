#include "judgcode/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "judgcode/errors.hpp"
#include "judgcode/tables.hpp"
#include "judgcode/text.hpp"

namespace judgcode::codebook {

namespace {

constexpr std::pair<OffenceClass, std::string_view> kClasses[] = {
    {OffenceClass::property, "property"},         {OffenceClass::violent, "violent"},
    {OffenceClass::public_order, "public_order"}, {OffenceClass::other_penal_code, "other_penal_code"},
    {OffenceClass::road_traffic, "road_traffic"}, {OffenceClass::drugs, "drugs"},
    {OffenceClass::weapons, "weapons"},           {OffenceClass::other_criminal, "other_criminal"}};

constexpr std::pair<MaxBucket, std::string_view> kMaxBuckets[] = {
    {MaxBucket::le71, "<=71"},        {MaxBucket::m72_95, "72-95"},     {MaxBucket::m96_107, "96-107"},
    {MaxBucket::m108_119, "108-119"}, {MaxBucket::m120_143, "120-143"}, {MaxBucket::m144_179, "144-179"},
    {MaxBucket::m180_215, "180-215"}, {MaxBucket::ge216, ">=216"}};

constexpr std::pair<AgeBucket, std::string_view> kAgeBuckets[] = {{AgeBucket::a18_20, "18-20"},
                                                                  {AgeBucket::a21_30, "21-30"},
                                                                  {AgeBucket::a31_40, "31-40"},
                                                                  {AgeBucket::a41_50, "41-50"},
                                                                  {AgeBucket::ge51, ">=51"}};

template <class E, size_t N>
std::string_view name_of(const std::pair<E, std::string_view> (&table)[N], E e) {
  for (const auto& [k, v] : table)
    if (k == e) return v;
  return "";
}

template <class E, size_t N>
std::optional<E> value_of(const std::pair<E, std::string_view> (&table)[N], std::string_view s) {
  for (const auto& [k, v] : table)
    if (v == s) return k;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(OffenceClass c) { return name_of(kClasses, c); }
std::string_view to_string(MaxBucket b) { return name_of(kMaxBuckets, b); }
std::string_view to_string(AgeBucket b) { return name_of(kAgeBuckets, b); }
std::optional<OffenceClass> offence_class_from_string(std::string_view s) { return value_of(kClasses, s); }
std::optional<MaxBucket> max_bucket_from_string(std::string_view s) { return value_of(kMaxBuckets, s); }
std::optional<AgeBucket> age_bucket_from_string(std::string_view s) { return value_of(kAgeBuckets, s); }

StatuteMaxTable StatuteMaxTable::parse(std::string_view tsv) {
  StatuteMaxTable t;
  for (const auto& row : parse_delimited(tsv)) {
    auto fail = [&](const std::string& why) {
      return ConfigError("statute table line " + std::to_string(row.line) + ": " + why);
    };
    if (row.fields.size() < 5) throw fail("expected statute, article, max_months, offence_class, valid_from");
    const std::string& statute = row.fields[0];
    std::string article = to_lower_ascii(row.fields[1]);
    if (statute.empty() || article.empty()) throw fail("empty statute or article");
    StatuteEntry e;
    try {
      size_t used = 0;
      e.max_months = std::stod(row.fields[2], &used);
      if (used != row.fields[2].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw fail("max_months is not a number");
    }
    if (!(e.max_months > 0 && e.max_months <= 360)) throw fail("max_months outside (0, 360]");
    auto cls = offence_class_from_string(row.fields[3]);
    if (!cls) throw fail("unknown offence class '" + row.fields[3] + "'");
    e.offence_class = *cls;
    auto from = parse_date(row.fields[4]);
    if (!from) throw fail("invalid valid_from date");
    e.valid_from = *from;
    auto& list = t.entries_[{statute, article}];
    list.push_back(e);
    std::stable_sort(list.begin(), list.end(),
                     [](const StatuteEntry& a, const StatuteEntry& b) { return a.valid_from < b.valid_from; });
    ++t.rows_;
  }
  return t;
}

const StatuteMaxTable& StatuteMaxTable::builtin() {
  static const StatuteMaxTable t = parse(load_config_text({}, "statute_maxima.tsv"));
  return t;
}

const StatuteEntry* StatuteMaxTable::lookup(std::string_view statute, std::string_view article,
                                            std::optional<Date> at) const {
  auto it = entries_.find({std::string(statute), to_lower_ascii(article)});
  if (it == entries_.end()) return nullptr;
  const StatuteEntry* best = nullptr;
  for (const auto& e : it->second)
    if (!at || e.valid_from <= *at) best = &e;
  return best;
}

bool is_book_one(std::string_view statute, std::string_view article) {
  if (statute != "Sr") return false;
  size_t n = 0;
  while (n < article.size() && is_digit(article[n])) ++n;
  if (n == 0 || n > 3) return false;
  int num = std::stoi(std::string(article.substr(0, n)));
  return num >= 1 && num <= 91;
}

MaxLookup max_prison_months(const std::vector<extract::StatuteArticles>& legal_basis, const StatuteMaxTable& table,
                            std::optional<Date> at) {
  std::set<std::pair<std::string, std::string>> book_one, other;
  for (const auto& e : legal_basis) {
    if (e.statute.empty() || e.statute == "Sv") continue;
    for (const auto& a : e.articles) {
      auto key = std::make_pair(e.statute, to_lower_ascii(a));
      (is_book_one(e.statute, a) ? book_one : other).insert(key);
    }
  }
  const auto& eligible = other.empty() ? book_one : other;
  MaxLookup out;
  out.n_offences = static_cast<int>(eligible.size());
  // std::set iterates in (statute, article) order, so the first maximum wins ties.
  for (const auto& [statute, article] : eligible) {
    const StatuteEntry* e = table.lookup(statute, article, at);
    if (!e) {
      out.unknown_articles.push_back(statute + " " + article);
      continue;
    }
    if (!out.result || e->max_months > out.result->max_months)
      out.result = MaxResult{e->max_months, e->offence_class, statute, article};
  }
  return out;
}

MaxBucket bucket_max(double m) {
  if (m < 72) return MaxBucket::le71;
  if (m < 96) return MaxBucket::m72_95;
  if (m < 108) return MaxBucket::m96_107;
  if (m < 120) return MaxBucket::m108_119;
  if (m < 144) return MaxBucket::m120_143;
  if (m < 180) return MaxBucket::m144_179;
  if (m < 216) return MaxBucket::m180_215;
  return MaxBucket::ge216;
}

AgeBucket bucket_age(int birth_year, int decision_year) {
  int age = decision_year - birth_year;
  if (age < 18) throw DataError("offender age " + std::to_string(age) + " is below 18");
  if (age <= 20) return AgeBucket::a18_20;
  if (age <= 30) return AgeBucket::a21_30;
  if (age <= 40) return AgeBucket::a31_40;
  if (age <= 50) return AgeBucket::a41_50;
  return AgeBucket::ge51;
}

std::optional<double> custodial_months(const extract::CodedRecord& record) {
  for (const auto& d : record.decisions) {
    bool custodial = d.kind == extract::DecisionKind::incarceration || d.kind == extract::DecisionKind::measure;
    if (custodial && d.amount && *d.amount > 0 && is_duration(d.unit)) return to_months(*d.amount, d.unit);
  }
  return std::nullopt;
}

AnalysisRow derive_row(const extract::CodedRecord& r, const StatuteMaxTable& table) {
  AnalysisRow row;
  row.ecli = r.meta.ecli;
  row.year = r.meta.decision_year();
  row.court = r.meta.court;

  if (auto months = custodial_months(r)) {
    row.prison_months = *months;
    row.ln_prison_months = std::log(*months);
  }

  if (r.legal_basis.chapter_found && !r.legal_basis.entries.empty()) {
    auto max = max_prison_months(r.legal_basis.entries, table, r.meta.decision_date);
    row.n_offences = max.n_offences;
    if (max.result) {
      row.max_prison_months = max.result->max_months;
      row.max_bucket = bucket_max(max.result->max_months);
      row.offence_class = max.result->offence_class;
    }
  }

  row.guidelines = r.prosecution.guidelines_mentioned ? 1 : 0;
  row.prosecution_expertise = r.prosecution.expertise.empty() ? 0 : 1;

  if (r.offender.birth_year) {
    row.age = row.year - *r.offender.birth_year;
    row.age_bucket = bucket_age(*r.offender.birth_year, row.year);
  }
  if (r.offender.birth_country != extract::BirthCountry::missing)
    row.born_abroad = r.offender.birth_country == extract::BirthCountry::foreign ? 1 : 0;
  row.female = r.offender.sex == extract::Sex::female ? 1 : 0;
  if (r.legal.recidivism != extract::Recidivism::missing)
    row.repeat_offender = r.legal.recidivism == extract::Recidivism::repeat_offender ? 1 : 0;
  if (r.legal.victim_count) row.multiple_victims = *r.legal.victim_count >= 2 ? 1 : 0;
  row.special_skills = r.special_tech_terms.empty() ? 0 : 1;
  row.basic_skills = (!r.basic_tech_terms.empty() && row.special_skills == 0) ? 1 : 0;
  return row;
}

}  // namespace judgcode::codebook
