#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace judgcode::stats {

struct Coefficient {
  std::string name;
  double b = 0;
  double se = 0;
  double t = 0;
  double p = 1;
};

struct FTest {
  double f = 0;
  double df1 = 0;
  double df2 = 0;
  double p = 1;
};

struct ModelFit {
  std::vector<Coefficient> coefficients;
  double r2 = 0;
  double adjusted_r2 = 0;
  FTest f;
  size_t n = 0;
  size_t k = 0;  // columns, including the intercept
  bool intercept = false;
  double rss = 0;
  double sigma2 = 0;  // unbiased residual variance
  Eigen::VectorXd residuals;
  Eigen::VectorXd fitted;
  Eigen::VectorXd leverage;  // diagonal of the hat matrix
  Eigen::MatrixXd covariance;

  const Coefficient* find(const std::string& name) const;
};

// Least squares by column-pivoted Householder QR. An all-ones column is taken
// as the intercept. Throws RankDeficientError naming the dependent columns and
// InvalidArgument when n does not exceed the column count.
ModelFit fit_ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, const std::vector<std::string>& names);

// Two-sided p-value of a t statistic.
double t_pvalue(double t, double df);
// Upper-tail p-value of an F statistic.
double f_pvalue(double f, double df1, double df2);

}  // namespace judgcode::stats
