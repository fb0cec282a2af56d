#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "judgcode/document.hpp"
#include "judgcode/extract.hpp"

namespace judgcode::codebook {

enum class OffenceClass {
  property,
  violent,  // reference category
  public_order,
  other_penal_code,
  road_traffic,
  drugs,
  weapons,
  other_criminal,
};
inline constexpr OffenceClass kAllOffenceClasses[] = {
    OffenceClass::property, OffenceClass::violent, OffenceClass::public_order, OffenceClass::other_penal_code,
    OffenceClass::road_traffic, OffenceClass::drugs, OffenceClass::weapons, OffenceClass::other_criminal};

enum class MaxBucket { le71, m72_95, m96_107, m108_119, m120_143, m144_179, m180_215, ge216 };
inline constexpr MaxBucket kAllMaxBuckets[] = {MaxBucket::le71,     MaxBucket::m72_95,   MaxBucket::m96_107,
                                              MaxBucket::m108_119, MaxBucket::m120_143, MaxBucket::m144_179,
                                              MaxBucket::m180_215, MaxBucket::ge216};

enum class AgeBucket { a18_20, a21_30, a31_40, a41_50, ge51 };
inline constexpr AgeBucket kAllAgeBuckets[] = {AgeBucket::a18_20, AgeBucket::a21_30, AgeBucket::a31_40,
                                              AgeBucket::a41_50, AgeBucket::ge51};

std::string_view to_string(OffenceClass c);
std::string_view to_string(MaxBucket b);  // "<=71", "72-95", ..., ">=216"
std::string_view to_string(AgeBucket b);  // "18-20", ..., ">=51"
std::optional<OffenceClass> offence_class_from_string(std::string_view s);
std::optional<MaxBucket> max_bucket_from_string(std::string_view s);
std::optional<AgeBucket> age_bucket_from_string(std::string_view s);

struct StatuteEntry {
  double max_months = 0;
  OffenceClass offence_class = OffenceClass::other_criminal;
  Date valid_from{};
};

class StatuteMaxTable {
 public:
  static StatuteMaxTable parse(std::string_view tsv);
  static const StatuteMaxTable& builtin();

  // Latest row valid on `at` (any row when `at` is absent).
  const StatuteEntry* lookup(std::string_view statute, std::string_view article,
                             std::optional<Date> at = std::nullopt) const;
  size_t size() const { return rows_; }

 private:
  std::map<std::pair<std::string, std::string>, std::vector<StatuteEntry>> entries_;  // sorted by valid_from
  size_t rows_ = 0;
};

// Penal Code Book One: articles 1 to 91.
bool is_book_one(std::string_view statute, std::string_view article);

struct MaxResult {
  double max_months = 0;
  OffenceClass offence_class = OffenceClass::other_criminal;
  std::string statute;
  std::string article;
};

struct MaxLookup {
  std::optional<MaxResult> result;
  std::vector<std::string> unknown_articles;  // "statute article"
  int n_offences = 0;                         // distinct eligible articles
};

// Longest maximum over the eligible articles; Book One only when nothing else
// is cited. Ties go to the smallest (statute, article).
MaxLookup max_prison_months(const std::vector<extract::StatuteArticles>& legal_basis, const StatuteMaxTable& table,
                            std::optional<Date> at = std::nullopt);

MaxBucket bucket_max(double max_months);
// Throws DataError for ages below 18.
AgeBucket bucket_age(int birth_year, int decision_year);

struct AnalysisRow {
  std::string ecli;
  int year = 0;
  std::string court;
  std::optional<double> ln_prison_months;
  std::optional<double> prison_months;
  std::optional<double> max_prison_months;
  std::optional<MaxBucket> max_bucket;
  std::optional<OffenceClass> offence_class;
  std::optional<int> n_offences;
  int guidelines = 0;
  int prosecution_expertise = 0;
  std::optional<int> age;
  std::optional<AgeBucket> age_bucket;
  std::optional<int> born_abroad;
  int female = 0;
  std::optional<int> repeat_offender;
  std::optional<int> multiple_victims;
  int basic_skills = 0;
  int special_skills = 0;

  bool operator==(const AnalysisRow&) const = default;
};

// Custodial months of the first incarceration (or measure with a duration).
std::optional<double> custodial_months(const extract::CodedRecord& record);

AnalysisRow derive_row(const extract::CodedRecord& record, const StatuteMaxTable& table = StatuteMaxTable::builtin());

}  // namespace judgcode::codebook
