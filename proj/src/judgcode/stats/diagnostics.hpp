#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "judgcode/stats/ols.hpp"

namespace judgcode::stats {

// Sum of squared successive differences over the residual sum of squares.
// Throws InvalidArgument for fewer than 2 residuals and DomainError when all
// residuals are zero.
double durbin_watson(const Eigen::VectorXd& residuals);

struct Tolerance {
  std::string name;
  double tolerance = 1;  // 1 - R^2 of the column on all other columns
};

// One entry per non-intercept column.
std::vector<Tolerance> tolerances(const Eigen::MatrixXd& X, const std::vector<std::string>& names);

// Externally studentized residuals; NaN where the leverage is 1.
Eigen::VectorXd studentized_residuals(const ModelFit& fit);

// Rows whose externally studentized residual exceeds `threshold` in absolute value.
std::vector<size_t> studentized_outliers(const ModelFit& fit, double threshold = 3.0);

struct InteractionResult {
  double delta_r2 = 0;
  double f_change = 0;
  double df1 = 0;
  double df2 = 0;
  double p = 1;
  std::vector<std::string> added;    // product columns kept
  std::vector<std::string> dropped;  // product columns that were all zero
  ModelFit base;
  ModelFit full;
};

// Adds the products of every column in `a` with every column in `b` and
// tests the R^2 change.
InteractionResult interaction_test(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                                   const std::vector<std::string>& names, const std::vector<size_t>& a,
                                   const std::vector<size_t>& b);

struct CorrelationMatrix {
  std::vector<std::string> names;
  Eigen::MatrixXd r;           // NaN where undefined
  Eigen::MatrixXi n;           // pairwise complete observations
  std::optional<double> max_abs_offdiag;
  std::pair<size_t, size_t> max_pair{0, 0};
};

// Pairwise-deletion Pearson correlations; NaN marks a missing value.
CorrelationMatrix correlation_matrix(const Eigen::MatrixXd& data, const std::vector<std::string>& names);

}  // namespace judgcode::stats
