#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "judgcode/document.hpp"
#include "judgcode/lint.hpp"
#include "judgcode/stats/descriptives.hpp"
#include "judgcode/stats/diagnostics.hpp"
#include "judgcode/stats/model_frame.hpp"
#include "judgcode/stats/reliability.hpp"

namespace judgcode::reports {

// "*" p < .05, "**" p < .01, "***" p < .001.
std::string stars(double p);

// Relative change of the response for a unit change of a log-scale coefficient.
double percent_effect(double b);

struct NamedInteraction {
  std::string label;
  stats::InteractionResult result;
};

struct AnalysisResult {
  stats::Hierarchy hierarchy;
  std::optional<double> durbin_watson;  // of the largest model
  std::vector<stats::Tolerance> tolerances;
  double outlier_threshold = 3;
  std::vector<std::string> outliers;  // ECLIs
  std::optional<double> outlier_mean_prison_months;
  std::vector<NamedInteraction> interactions;
  std::vector<std::string> interaction_errors;
  std::optional<stats::CorrelationMatrix> correlations;
  stats::Descriptives descriptives;
};

std::string regression_text(const AnalysisResult& a);
nlohmann::ordered_json regression_json(const AnalysisResult& a);

// Lines such as "special_skills: B = 0.67, +95.4%" for the largest model's
// significant binary predictors.
std::vector<std::string> effect_lines(const stats::ModelFit& fit, double alpha = 0.05);

std::string descriptives_text(const stats::Descriptives& d);
nlohmann::ordered_json descriptives_json(const stats::Descriptives& d);

// One column per tally set, e.g. before and after improvements.
std::string reliability_text(const std::vector<std::vector<stats::ReliabilityTally>>& sets,
                             const std::vector<std::string>& headings, size_t n);
nlohmann::ordered_json reliability_json(const std::vector<std::vector<stats::ReliabilityTally>>& sets,
                                        const std::vector<std::string>& headings, size_t n);

std::string lint_csv(const lint::LintReport& r, const Date& checked);
nlohmann::ordered_json lint_json(const lint::LintReport& r, const Date& checked);
std::string lint_summary(const lint::LintReport& r);

struct ChiSquareReport {
  std::string term;
  std::string split;
  long a = 0, b = 0, c = 0, d = 0;  // term present: split 1, 0; term absent: split 1, 0
  stats::ChiSquare test;
  double percent_present = 0;  // split share among documents with the term
  double percent_absent = 0;
};

std::string chisq_text(const ChiSquareReport& r);
nlohmann::ordered_json chisq_json(const ChiSquareReport& r);

// Fixed two-decimal text used throughout the reports.
std::string fixed2(double v);

}  // namespace judgcode::reports
