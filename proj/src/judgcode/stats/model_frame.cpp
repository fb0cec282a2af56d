#include "judgcode/stats/model_frame.hpp"

#include <algorithm>
#include <functional>

#include <fmt/format.h>

#include "judgcode/errors.hpp"

namespace judgcode::stats {

using codebook::AnalysisRow;

namespace {

constexpr codebook::MaxBucket kMaxReference = codebook::MaxBucket::m108_119;
constexpr codebook::OffenceClass kOffenceReference = codebook::OffenceClass::violent;
constexpr codebook::AgeBucket kAgeReference = codebook::AgeBucket::a21_30;

struct Required {
  const char* name;
  std::function<bool(const AnalysisRow&)> present;
};

const std::vector<Required>& required() {
  static const std::vector<Required> r = {
      {"ln_prison_months", [](const AnalysisRow& a) { return a.ln_prison_months.has_value(); }},
      {"max_bucket", [](const AnalysisRow& a) { return a.max_bucket.has_value(); }},
      {"offence_class", [](const AnalysisRow& a) { return a.offence_class.has_value(); }},
      {"n_offences", [](const AnalysisRow& a) { return a.n_offences.has_value(); }},
      {"age_bucket", [](const AnalysisRow& a) { return a.age_bucket.has_value(); }},
      {"born_abroad", [](const AnalysisRow& a) { return a.born_abroad.has_value(); }},
      {"repeat_offender", [](const AnalysisRow& a) { return a.repeat_offender.has_value(); }},
      {"multiple_victims", [](const AnalysisRow& a) { return a.multiple_victims.has_value(); }},
  };
  return r;
}

struct Column {
  std::string name;
  std::function<double(const AnalysisRow&)> value;
  bool dummy = false;
};

std::vector<Column> columns_for(int model) {
  std::vector<Column> cols;
  cols.push_back({"(Constant)", [](const AnalysisRow&) { return 1.0; }});
  for (auto b : codebook::kAllMaxBuckets) {
    if (b == kMaxReference) continue;
    cols.push_back({fmt::format("max_bucket[{}]", codebook::to_string(b)),
                    [b](const AnalysisRow& r) { return *r.max_bucket == b ? 1.0 : 0.0; }, true});
  }
  for (auto c : codebook::kAllOffenceClasses) {
    if (c == kOffenceReference) continue;
    cols.push_back({fmt::format("offence_class[{}]", codebook::to_string(c)),
                    [c](const AnalysisRow& r) { return *r.offence_class == c ? 1.0 : 0.0; }, true});
  }
  cols.push_back({"n_offences", [](const AnalysisRow& r) { return static_cast<double>(*r.n_offences); }});
  if (model >= 2) {
    cols.push_back({"guidelines", [](const AnalysisRow& r) { return static_cast<double>(r.guidelines); }});
    cols.push_back({"prosecution_expertise",
                    [](const AnalysisRow& r) { return static_cast<double>(r.prosecution_expertise); }});
  }
  if (model >= 3) {
    for (auto a : codebook::kAllAgeBuckets) {
      if (a == kAgeReference) continue;
      cols.push_back({fmt::format("age_bucket[{}]", codebook::to_string(a)),
                      [a](const AnalysisRow& r) { return *r.age_bucket == a ? 1.0 : 0.0; }, true});
    }
    cols.push_back({"born_abroad", [](const AnalysisRow& r) { return static_cast<double>(*r.born_abroad); }});
    cols.push_back({"female", [](const AnalysisRow& r) { return static_cast<double>(r.female); }});
    cols.push_back(
        {"repeat_offender", [](const AnalysisRow& r) { return static_cast<double>(*r.repeat_offender); }});
    cols.push_back(
        {"multiple_victims", [](const AnalysisRow& r) { return static_cast<double>(*r.multiple_victims); }});
    cols.push_back({"basic_skills", [](const AnalysisRow& r) { return static_cast<double>(r.basic_skills); }});
    cols.push_back(
        {"special_skills", [](const AnalysisRow& r) { return static_cast<double>(r.special_skills); }});
  }
  return cols;
}

}  // namespace

std::vector<AnalysisRow> listwise_complete(const std::vector<AnalysisRow>& rows, Missingness* report) {
  std::vector<AnalysisRow> out;
  std::vector<size_t> missing(required().size(), 0);
  for (const auto& r : rows) {
    bool ok = true;
    for (size_t i = 0; i < required().size(); ++i)
      if (!required()[i].present(r)) {
        ++missing[i];
        ok = false;
      }
    if (ok) out.push_back(r);
  }
  if (report) {
    report->input_rows = rows.size();
    report->complete_rows = out.size();
    report->missing.clear();
    for (size_t i = 0; i < required().size(); ++i) report->missing.emplace_back(required()[i].name, missing[i]);
  }
  return out;
}

Design build_design(const std::vector<AnalysisRow>& complete, int model) {
  if (model < 1 || model > 3) throw InvalidArgument(fmt::format("unknown model {}", model));
  auto cols = columns_for(model);
  const auto n = static_cast<Eigen::Index>(complete.size());
  Design d;
  d.y.resize(n);
  Eigen::MatrixXd full(n, static_cast<Eigen::Index>(cols.size()));
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& r = complete[static_cast<size_t>(i)];
    if (!r.ln_prison_months) throw InvalidArgument("design rows must be listwise complete");
    d.y(i) = *r.ln_prison_months;
    d.eclis.push_back(r.ecli);
    for (size_t c = 0; c < cols.size(); ++c) full(i, static_cast<Eigen::Index>(c)) = cols[c].value(r);
  }
  std::vector<Eigen::Index> keep;
  for (size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].dummy && full.col(static_cast<Eigen::Index>(c)).isZero(0.0)) {
      d.dropped.push_back(cols[c].name);
      continue;
    }
    keep.push_back(static_cast<Eigen::Index>(c));
    d.names.push_back(cols[c].name);
  }
  d.X.resize(n, static_cast<Eigen::Index>(keep.size()));
  for (size_t j = 0; j < keep.size(); ++j) d.X.col(static_cast<Eigen::Index>(j)) = full.col(keep[j]);
  return d;
}

Hierarchy fit_hierarchy(const std::vector<AnalysisRow>& rows, std::vector<int> models) {
  std::sort(models.begin(), models.end());
  models.erase(std::unique(models.begin(), models.end()), models.end());
  if (models.empty()) throw InvalidArgument("no models requested");
  for (int m : models)
    if (m < 1 || m > 3) throw InvalidArgument(fmt::format("unknown model {}", m));

  Hierarchy h;
  h.models = models;
  auto complete = listwise_complete(rows, &h.missingness);
  // Every model is checked for size before any is fitted.
  for (int m : models) {
    Design d = build_design(complete, m);
    if (complete.size() <= static_cast<size_t>(d.X.cols()))
      throw DataError(fmt::format("model {} has {} columns but only {} complete rows; {}", m, d.X.cols(),
                                  complete.size(), describe(h.missingness)));
    h.designs.push_back(std::move(d));
  }
  for (const auto& d : h.designs) h.fits.push_back(fit_ols(d.X, d.y, d.names));
  return h;
}

std::string describe(const Missingness& m) {
  std::string s = fmt::format("{} of {} rows complete", m.complete_rows, m.input_rows);
  for (const auto& [name, count] : m.missing)
    if (count) s += fmt::format("; {} missing in {}", name, count);
  return s;
}

}  // namespace judgcode::stats
