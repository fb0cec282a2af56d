#pragma once

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "judgcode/codebook.hpp"

namespace testsupport {

// Known generating coefficients for the synthetic sentencing data.
struct Truth {
  double intercept = 2.0;
  std::map<std::string, double> b = {
      {"max_bucket[<=71]", -0.8},       {"max_bucket[144-179]", 0.5},   {"offence_class[drugs]", 0.3},
      {"offence_class[property]", -0.4}, {"n_offences", 0.15},          {"guidelines", 0.2},
      {"prosecution_expertise", 0.35},  {"age_bucket[18-20]", -0.25},  {"born_abroad", 0.1},
      {"female", -0.2},                 {"repeat_offender", 0.11},      {"multiple_victims", 0.4},
      {"basic_skills", 0.05},           {"special_skills", 0.6}};
  double sigma = 0.5;
};

// Complete rows drawn from the Truth model; `missing_every` > 0 blanks the age
// of every n-th row.
inline std::vector<judgcode::codebook::AnalysisRow> synthetic_rows(size_t n, unsigned seed, const Truth& truth = {},
                                                                 size_t missing_every = 0) {
  using namespace judgcode::codebook;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0, truth.sigma);
  std::uniform_real_distribution<double> u(0, 1);
  const MaxBucket buckets[] = {MaxBucket::le71, MaxBucket::m108_119, MaxBucket::m144_179};
  const double bucket_max[] = {48, 108, 144};
  const OffenceClass classes[] = {OffenceClass::violent, OffenceClass::drugs, OffenceClass::property};
  const AgeBucket ages[] = {AgeBucket::a18_20, AgeBucket::a21_30};
  const int age_years[] = {19, 25};
  const char* courts[] = {"Rechtbank Amsterdam", "Rechtbank Den Haag", "Rechtbank Rotterdam"};
  std::vector<AnalysisRow> rows;
  for (size_t i = 0; i < n; ++i) {
    AnalysisRow r;
    r.ecli = "ECLI:NL:RBSYN:" + std::to_string(2015 + i % 6) + ":" + std::to_string(i + 1);
    r.year = static_cast<int>(2015 + i % 6);
    r.court = courts[i % 3];
    size_t bi = rng() % 3;
    r.max_bucket = buckets[bi];
    r.max_prison_months = bucket_max[bi];
    r.offence_class = classes[rng() % 3];
    r.n_offences = 1 + static_cast<int>(rng() % 4);
    r.guidelines = u(rng) < 0.3;
    r.prosecution_expertise = u(rng) < 0.4;
    size_t ai = rng() % 2;
    r.age_bucket = ages[ai];
    r.age = age_years[ai];
    r.born_abroad = u(rng) < 0.3;
    r.female = u(rng) < 0.15;
    r.repeat_offender = u(rng) < 0.5;
    r.multiple_victims = u(rng) < 0.2;
    r.special_skills = u(rng) < 0.2;
    r.basic_skills = r.special_skills ? 0 : u(rng) < 0.4;

    double y = truth.intercept + noise(rng);
    auto add = [&](const std::string& name, double x) {
      auto it = truth.b.find(name);
      if (it != truth.b.end()) y += it->second * x;
    };
    add(std::string("max_bucket[") + std::string(to_string(*r.max_bucket)) + "]", 1);
    add(std::string("offence_class[") + std::string(to_string(*r.offence_class)) + "]", 1);
    add("n_offences", *r.n_offences);
    add("guidelines", r.guidelines);
    add("prosecution_expertise", r.prosecution_expertise);
    add(std::string("age_bucket[") + std::string(to_string(*r.age_bucket)) + "]", 1);
    add("born_abroad", *r.born_abroad);
    add("female", r.female);
    add("repeat_offender", *r.repeat_offender);
    add("multiple_victims", *r.multiple_victims);
    add("basic_skills", r.basic_skills);
    add("special_skills", r.special_skills);
    r.ln_prison_months = y;
    r.prison_months = std::exp(y);
    if (missing_every && i % missing_every == 0) {
      r.age.reset();
      r.age_bucket.reset();
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace testsupport
