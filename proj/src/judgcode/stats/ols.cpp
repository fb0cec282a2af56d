#include "judgcode/stats/ols.hpp"

#include <cmath>
#include <limits>

#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <fmt/format.h>

#include "judgcode/errors.hpp"

namespace judgcode::stats {

const Coefficient* ModelFit::find(const std::string& name) const {
  for (const auto& c : coefficients)
    if (c.name == name) return &c;
  return nullptr;
}

double t_pvalue(double t, double df) {
  if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
  if (std::isinf(t)) return 0.0;
  boost::math::students_t dist(df);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
}

double f_pvalue(double f, double df1, double df2) {
  if (std::isnan(f)) return std::numeric_limits<double>::quiet_NaN();
  if (std::isinf(f)) return 0.0;
  if (f <= 0) return 1.0;
  boost::math::fisher_f dist(df1, df2);
  return boost::math::cdf(boost::math::complement(dist, f));
}

ModelFit fit_ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, const std::vector<std::string>& names) {
  const Eigen::Index n = X.rows(), k = X.cols();
  if (y.size() != n) throw InvalidArgument("response length does not match the design");
  if (static_cast<Eigen::Index>(names.size()) != k) throw InvalidArgument("one name per design column required");
  if (k == 0) throw InvalidArgument("empty design");
  if (n <= k) throw InvalidArgument(fmt::format("{} observations cannot support {} coefficients", n, k));
  if (!X.allFinite() || !y.allFinite()) throw InvalidArgument("design or response contains non-finite values");

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  if (qr.rank() < k) {
    std::vector<std::string> dependent;
    const auto& perm = qr.colsPermutation().indices();
    for (Eigen::Index i = qr.rank(); i < k; ++i) dependent.push_back(names[static_cast<size_t>(perm(i))]);
    std::string list;
    for (const auto& d : dependent) list += (list.empty() ? "" : ", ") + d;
    throw RankDeficientError(fmt::format("design has rank {} < {} columns; collinear: {}", qr.rank(), k, list),
                             dependent);
  }

  ModelFit fit;
  fit.n = static_cast<size_t>(n);
  fit.k = static_cast<size_t>(k);
  for (Eigen::Index j = 0; j < k && !fit.intercept; ++j) fit.intercept = (X.col(j).array() == 1.0).all();

  Eigen::VectorXd beta = qr.solve(y);
  fit.fitted = X * beta;
  fit.residuals = y - fit.fitted;
  fit.rss = fit.residuals.squaredNorm();
  const double df = static_cast<double>(n - k);
  fit.sigma2 = fit.rss / df;

  // (X'X)^-1 = P R^-1 R^-T P'
  Eigen::MatrixXd R = qr.matrixR().topLeftCorner(k, k).triangularView<Eigen::Upper>();
  Eigen::MatrixXd Rinv = R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
  Eigen::MatrixXd unscaled = Rinv * Rinv.transpose();
  Eigen::MatrixXd xtx_inv = qr.colsPermutation() * unscaled * qr.colsPermutation().transpose();
  fit.covariance = fit.sigma2 * xtx_inv;

  Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(n, k);
  fit.leverage = Q.rowwise().squaredNorm();

  for (Eigen::Index j = 0; j < k; ++j) {
    Coefficient c;
    c.name = names[static_cast<size_t>(j)];
    c.b = beta(j);
    c.se = std::sqrt(std::max(0.0, fit.covariance(j, j)));
    if (c.se > 0)
      c.t = c.b / c.se;
    else
      c.t = c.b == 0 ? std::numeric_limits<double>::quiet_NaN() : std::copysign(INFINITY, c.b);
    c.p = t_pvalue(c.t, df);
    fit.coefficients.push_back(std::move(c));
  }

  double tss, ess;
  if (fit.intercept) {
    double mean = y.mean();
    tss = (y.array() - mean).square().sum();
    ess = (fit.fitted.array() - mean).square().sum();
  } else {
    tss = y.squaredNorm();
    ess = fit.fitted.squaredNorm();
  }
  fit.r2 = tss > 0 ? std::clamp(ess / tss, 0.0, 1.0) : 0.0;
  double dof_model = static_cast<double>(fit.intercept ? k - 1 : k);
  double dof_total = static_cast<double>(fit.intercept ? n - 1 : n);
  fit.adjusted_r2 = 1.0 - (1.0 - fit.r2) * dof_total / df;
  fit.f.df1 = dof_model;
  fit.f.df2 = df;
  if (dof_model > 0) {
    fit.f.f = fit.r2 < 1.0 ? (fit.r2 / dof_model) / ((1.0 - fit.r2) / df) : INFINITY;
    fit.f.p = f_pvalue(fit.f.f, fit.f.df1, fit.f.df2);
  } else {
    fit.f.f = std::numeric_limits<double>::quiet_NaN();
    fit.f.p = std::numeric_limits<double>::quiet_NaN();
  }
  return fit;
}

}  // namespace judgcode::stats
