#include "judgcode/stats/descriptives.hpp"

#include <cmath>
#include <functional>
#include <map>

namespace judgcode::stats {

using codebook::AnalysisRow;

RatioSummary summarize(const std::string& variable, const std::vector<std::optional<double>>& values) {
  RatioSummary s;
  s.variable = variable;
  double sum = 0;
  for (const auto& v : values) {
    if (!v) continue;
    ++s.n;
    sum += *v;
    s.min = s.min ? std::min(*s.min, *v) : *v;
    s.max = s.max ? std::max(*s.max, *v) : *v;
  }
  if (s.n == 0) return s;
  s.mean = sum / static_cast<double>(s.n);
  if (s.n >= 2) {
    double ss = 0;
    for (const auto& v : values)
      if (v) ss += (*v - *s.mean) * (*v - *s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(s.n - 1));
  }
  return s;
}

std::vector<YearlyShare> yearly_share(const std::vector<AnalysisRow>& rows, int AnalysisRow::*flag) {
  std::map<int, YearlyShare> by_year;
  for (const auto& r : rows) {
    auto& y = by_year[r.year];
    y.year = r.year;
    ++y.n;
    if (r.*flag) ++y.count;
  }
  std::vector<YearlyShare> out;
  for (auto& [year, y] : by_year) {
    y.percent = 100.0 * static_cast<double>(y.count) / static_cast<double>(y.n);
    out.push_back(y);
  }
  return out;
}

namespace {

template <class T>
std::optional<double> as_double(const std::optional<T>& v) {
  return v ? std::optional<double>(static_cast<double>(*v)) : std::nullopt;
}

FrequencyRow frequency(const std::string& variable, const std::string& value, size_t count, size_t valid) {
  FrequencyRow f{variable, value, count, 0, valid};
  f.percent = valid ? 100.0 * static_cast<double>(count) / static_cast<double>(valid) : 0;
  return f;
}

}  // namespace

Descriptives describe_rows(const std::vector<AnalysisRow>& rows) {
  Descriptives d;
  auto ratio = [&](const std::string& name, std::function<std::optional<double>(const AnalysisRow&)> get) {
    std::vector<std::optional<double>> v;
    v.reserve(rows.size());
    for (const auto& r : rows) v.push_back(get(r));
    d.ratio.push_back(summarize(name, v));
  };
  ratio("prison_months", [](const AnalysisRow& r) { return r.prison_months; });
  ratio("max_prison_months", [](const AnalysisRow& r) { return r.max_prison_months; });
  ratio("n_offences", [](const AnalysisRow& r) { return as_double(r.n_offences); });
  ratio("age", [](const AnalysisRow& r) { return as_double(r.age); });

  auto flag = [&](const std::string& name, std::function<std::optional<int>(const AnalysisRow&)> get) {
    size_t valid = 0, ones = 0;
    for (const auto& r : rows)
      if (auto v = get(r)) {
        ++valid;
        if (*v) ++ones;
      }
    d.dichotomous.push_back(frequency(name, "1", ones, valid));
  };
  flag("guidelines", [](const AnalysisRow& r) { return std::optional<int>(r.guidelines); });
  flag("prosecution_expertise", [](const AnalysisRow& r) { return std::optional<int>(r.prosecution_expertise); });
  flag("born_abroad", [](const AnalysisRow& r) { return r.born_abroad; });
  flag("female", [](const AnalysisRow& r) { return std::optional<int>(r.female); });
  flag("repeat_offender", [](const AnalysisRow& r) { return r.repeat_offender; });
  flag("multiple_victims", [](const AnalysisRow& r) { return r.multiple_victims; });
  flag("basic_skills", [](const AnalysisRow& r) { return std::optional<int>(r.basic_skills); });
  flag("special_skills", [](const AnalysisRow& r) { return std::optional<int>(r.special_skills); });

  auto categorical = [&](const std::string& name, const auto& all, auto get) {
    std::map<std::string, size_t> counts;
    size_t valid = 0;
    for (const auto& r : rows)
      if (auto v = get(r)) {
        ++valid;
        ++counts[std::string(codebook::to_string(*v))];
      }
    for (auto value : all) {
      std::string label(codebook::to_string(value));
      d.categorical.push_back(frequency(name, label, counts[label], valid));
    }
  };
  categorical("max_bucket", codebook::kAllMaxBuckets, [](const AnalysisRow& r) { return r.max_bucket; });
  categorical("offence_class", codebook::kAllOffenceClasses, [](const AnalysisRow& r) { return r.offence_class; });
  categorical("age_bucket", codebook::kAllAgeBuckets, [](const AnalysisRow& r) { return r.age_bucket; });

  d.special_skills_by_year = yearly_share(rows, &AnalysisRow::special_skills);
  d.basic_skills_by_year = yearly_share(rows, &AnalysisRow::basic_skills);
  return d;
}

}  // namespace judgcode::stats
