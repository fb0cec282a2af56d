#include "judgcode/stats/diagnostics.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "judgcode/errors.hpp"

namespace judgcode::stats {

double durbin_watson(const Eigen::VectorXd& e) {
  if (e.size() < 2) throw InvalidArgument("Durbin-Watson needs at least 2 residuals");
  double denom = e.squaredNorm();
  if (denom == 0) throw DomainError("Durbin-Watson is undefined for all-zero residuals");
  double num = (e.tail(e.size() - 1) - e.head(e.size() - 1)).squaredNorm();
  return num / denom;
}

std::vector<Tolerance> tolerances(const Eigen::MatrixXd& X, const std::vector<std::string>& names) {
  Eigen::VectorXd dummy = Eigen::VectorXd::Zero(X.rows());
  (void)fit_ols(X, dummy, names);  // rank and size checks
  std::vector<Tolerance> out;
  const Eigen::Index k = X.cols();
  for (Eigen::Index j = 0; j < k; ++j) {
    if ((X.col(j).array() == 1.0).all()) continue;
    Eigen::MatrixXd others(X.rows(), k - 1);
    std::vector<std::string> other_names;
    for (Eigen::Index c = 0, o = 0; c < k; ++c) {
      if (c == j) continue;
      others.col(o++) = X.col(c);
      other_names.push_back(names[static_cast<size_t>(c)]);
    }
    double r2 = 0;
    if (k > 1) r2 = fit_ols(others, X.col(j), other_names).r2;
    out.push_back({names[static_cast<size_t>(j)], 1.0 - r2});
  }
  return out;
}

Eigen::VectorXd studentized_residuals(const ModelFit& fit) {
  const Eigen::Index n = fit.residuals.size();
  Eigen::VectorXd t(n);
  const double df = static_cast<double>(fit.n) - static_cast<double>(fit.k) - 1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double e = fit.residuals(i);
    double h = fit.leverage(i);
    if (1.0 - h <= 1e-12 || df <= 0) {
      t(i) = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    double s2 = (fit.rss - e * e / (1.0 - h)) / df;
    if (s2 <= 0) {
      t(i) = e == 0 ? 0.0 : std::copysign(INFINITY, e);
      continue;
    }
    t(i) = e / std::sqrt(s2 * (1.0 - h));
  }
  return t;
}

std::vector<size_t> studentized_outliers(const ModelFit& fit, double threshold) {
  std::vector<size_t> out;
  // A perfect fit has no outliers, whatever rounding leaves in the residuals.
  double scale = fit.fitted.size() ? fit.fitted.cwiseAbs().maxCoeff() : 0.0;
  if (fit.rss <= 1e-20 * std::max(1.0, scale * scale) * static_cast<double>(fit.n)) return out;
  Eigen::VectorXd t = studentized_residuals(fit);
  for (Eigen::Index i = 0; i < t.size(); ++i)
    if (!std::isnan(t(i)) && std::fabs(t(i)) > threshold) out.push_back(static_cast<size_t>(i));
  return out;
}

InteractionResult interaction_test(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                                   const std::vector<std::string>& names, const std::vector<size_t>& a,
                                   const std::vector<size_t>& b) {
  if (a.empty() || b.empty()) throw InvalidArgument("interaction needs columns on both sides");
  for (size_t c : a)
    if (c >= static_cast<size_t>(X.cols())) throw InvalidArgument("interaction column out of range");
  for (size_t c : b)
    if (c >= static_cast<size_t>(X.cols())) throw InvalidArgument("interaction column out of range");

  InteractionResult r;
  std::vector<Eigen::VectorXd> products;
  for (size_t i : a)
    for (size_t j : b) {
      Eigen::VectorXd p = X.col(static_cast<Eigen::Index>(i)).cwiseProduct(X.col(static_cast<Eigen::Index>(j)));
      std::string name = names[i] + " x " + names[j];
      if (p.isZero(0.0)) {
        r.dropped.push_back(name);
      } else {
        products.push_back(std::move(p));
        r.added.push_back(name);
      }
    }
  if (products.empty()) throw DataError("all interaction products are zero");

  Eigen::MatrixXd full(X.rows(), X.cols() + static_cast<Eigen::Index>(products.size()));
  full.leftCols(X.cols()) = X;
  for (size_t i = 0; i < products.size(); ++i) full.col(X.cols() + static_cast<Eigen::Index>(i)) = products[i];
  std::vector<std::string> full_names = names;
  full_names.insert(full_names.end(), r.added.begin(), r.added.end());

  r.base = fit_ols(X, y, names);
  r.full = fit_ols(full, y, full_names);
  r.delta_r2 = r.full.r2 - r.base.r2;
  r.df1 = static_cast<double>(products.size());
  r.df2 = r.full.f.df2;
  if (r.full.r2 >= 1.0) {
    r.f_change = INFINITY;
    r.p = 0;
  } else {
    r.f_change = (std::max(0.0, r.delta_r2) / r.df1) / ((1.0 - r.full.r2) / r.df2);
    r.p = f_pvalue(r.f_change, r.df1, r.df2);
  }
  return r;
}

CorrelationMatrix correlation_matrix(const Eigen::MatrixXd& data, const std::vector<std::string>& names) {
  const Eigen::Index k = data.cols();
  if (static_cast<Eigen::Index>(names.size()) != k) throw InvalidArgument("one name per column required");
  CorrelationMatrix cm;
  cm.names = names;
  cm.r = Eigen::MatrixXd::Constant(k, k, std::numeric_limits<double>::quiet_NaN());
  cm.n = Eigen::MatrixXi::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i; j < k; ++j) {
      double sx = 0, sy = 0;
      int n = 0;
      for (Eigen::Index row = 0; row < data.rows(); ++row) {
        double x = data(row, i), y = data(row, j);
        if (std::isnan(x) || std::isnan(y)) continue;
        sx += x;
        sy += y;
        ++n;
      }
      cm.n(i, j) = cm.n(j, i) = n;
      if (n < 2) continue;
      double mx = sx / n, my = sy / n, sxx = 0, syy = 0, sxy = 0;
      for (Eigen::Index row = 0; row < data.rows(); ++row) {
        double x = data(row, i), y = data(row, j);
        if (std::isnan(x) || std::isnan(y)) continue;
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
        sxy += (x - mx) * (y - my);
      }
      if (sxx == 0 || syy == 0) continue;
      double r = i == j ? 1.0 : std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
      cm.r(i, j) = cm.r(j, i) = r;
      if (i != j && (!cm.max_abs_offdiag || std::fabs(r) > *cm.max_abs_offdiag)) {
        cm.max_abs_offdiag = std::fabs(r);
        cm.max_pair = {static_cast<size_t>(i), static_cast<size_t>(j)};
      }
    }
  return cm;
}

}  // namespace judgcode::stats
