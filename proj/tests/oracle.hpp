#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

// Normal-equations least squares with textbook standard errors, on plain
// vectors; used to check the QR-based solver.
namespace testsupport {

using Mat = std::vector<std::vector<double>>;

// Gauss-Jordan inverse with partial pivoting on plain vectors.
inline Mat invert(Mat a) {
  size_t k = a.size();
  Mat inv(k, std::vector<double>(k, 0));
  for (size_t i = 0; i < k; ++i) inv[i][i] = 1;
  for (size_t c = 0; c < k; ++c) {
    size_t piv = c;
    for (size_t r = c + 1; r < k; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    std::swap(inv[c], inv[piv]);
    double d = a[c][c];
    for (size_t j = 0; j < k; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (size_t r = 0; r < k; ++r) {
      if (r == c) continue;
      double f = a[r][c];
      for (size_t j = 0; j < k; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

struct OracleFit {
  std::vector<double> b, se;
  double r2, adj;
};

// beta = (X'X)^-1 X'y, se = sqrt(s^2 diag((X'X)^-1)), first column the intercept.
inline OracleFit oracle(const Mat& x, const std::vector<double>& y) {
  size_t n = x.size(), k = x[0].size();
  Mat xtx(k, std::vector<double>(k, 0));
  std::vector<double> xty(k, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t a = 0; a < k; ++a) {
      xty[a] += x[i][a] * y[i];
      for (size_t b = 0; b < k; ++b) xtx[a][b] += x[i][a] * x[i][b];
    }
  Mat inv = invert(xtx);
  OracleFit f;
  f.b.assign(k, 0);
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b) f.b[a] += inv[a][b] * xty[b];
  double rss = 0, mean = 0, tss = 0;
  for (double v : y) mean += v / static_cast<double>(n);
  for (size_t i = 0; i < n; ++i) {
    double fit = 0;
    for (size_t a = 0; a < k; ++a) fit += x[i][a] * f.b[a];
    rss += (y[i] - fit) * (y[i] - fit);
    tss += (y[i] - mean) * (y[i] - mean);
  }
  double s2 = rss / static_cast<double>(n - k);
  for (size_t a = 0; a < k; ++a) f.se.push_back(std::sqrt(s2 * inv[a][a]));
  f.r2 = 1 - rss / tss;
  f.adj = 1 - (1 - f.r2) * static_cast<double>(n - 1) / static_cast<double>(n - k);
  return f;
}

}  // namespace testsupport
