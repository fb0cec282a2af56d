#pragma once

#include <optional>
#include <string>
#include <vector>

#include "judgcode/codebook.hpp"

namespace judgcode::stats {

struct RatioSummary {
  std::string variable;
  size_t n = 0;
  std::optional<double> min, max, mean, sd;  // sd needs n >= 2
};

struct FrequencyRow {
  std::string variable;
  std::string value;
  size_t frequency = 0;
  double percent = 0;  // of the variable's valid N
  size_t valid_n = 0;
};

struct YearlyShare {
  int year = 0;
  size_t n = 0;
  size_t count = 0;
  double percent = 0;
};

struct Descriptives {
  std::vector<RatioSummary> ratio;
  std::vector<FrequencyRow> dichotomous;  // value "1" only
  std::vector<FrequencyRow> categorical;  // every bucket or class
  std::vector<YearlyShare> special_skills_by_year;
  std::vector<YearlyShare> basic_skills_by_year;
};

RatioSummary summarize(const std::string& variable, const std::vector<std::optional<double>>& values);

// Share of rows per year with the flag set.
std::vector<YearlyShare> yearly_share(const std::vector<codebook::AnalysisRow>& rows,
                                      int codebook::AnalysisRow::*flag);

Descriptives describe_rows(const std::vector<codebook::AnalysisRow>& rows);

}  // namespace judgcode::stats
