#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "judgcode/codebook.hpp"
#include "judgcode/stats/ols.hpp"

namespace judgcode::stats {

struct Design {
  Eigen::MatrixXd X;
  Eigen::VectorXd y;  // ln_prison_months
  std::vector<std::string> names;
  std::vector<std::string> dropped;  // dummy columns with no observations
  std::vector<std::string> eclis;    // one per row
};

struct Missingness {
  size_t input_rows = 0;
  size_t complete_rows = 0;
  std::vector<std::pair<std::string, size_t>> missing;  // variable, rows missing it
};

// Rows complete on every Model 3 variable, in input order.
std::vector<codebook::AnalysisRow> listwise_complete(const std::vector<codebook::AnalysisRow>& rows,
                                                     Missingness* report = nullptr);

// Design matrix of model 1, 2 or 3 on listwise-complete rows.
Design build_design(const std::vector<codebook::AnalysisRow>& complete, int model);

struct Hierarchy {
  std::vector<int> models;  // requested subset of {1,2,3}, ascending
  std::vector<Design> designs;
  std::vector<ModelFit> fits;
  Missingness missingness;
};

// Fits the requested nested models on the same listwise-deleted rows. Throws
// DataError with the missingness breakdown when too few rows remain.
Hierarchy fit_hierarchy(const std::vector<codebook::AnalysisRow>& rows, std::vector<int> models = {1, 2, 3});

std::string describe(const Missingness& m);

}  // namespace judgcode::stats
