#include "boxlab/lp.hpp"

#include <algorithm>
#include <cmath>

#include "boxlab/common.hpp"

namespace boxlab {

ConvexFit convex_weights(const std::vector<std::vector<double>>& points, std::span<const double> target,
                         double tol) {
  const int n = static_cast<int>(points.size());
  const int dim = static_cast<int>(target.size());
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim) throw Error(ErrorCode::InvalidInput, "vertex dimension mismatch");
  const int m = dim + 1;
  const int cols = n + m + 1;
  const int rhs = cols - 1;
  std::vector<double> T(static_cast<std::size_t>(m + 1) * cols, 0.0);
  auto at = [&](int r, int c) -> double& { return T[static_cast<std::size_t>(r) * cols + c]; };

  for (int r = 0; r < m; ++r) {
    double b = r < dim ? target[r] : 1.0;
    const double s = b < 0 ? -1.0 : 1.0;
    for (int k = 0; k < n; ++k) at(r, k) = s * (r < dim ? points[k][r] : 1.0);
    at(r, n + r) = 1.0;
    at(r, rhs) = s * b;
  }
  for (int c = 0; c < cols; ++c) {
    if (c >= n && c < n + m) continue;
    double s = 0;
    for (int r = 0; r < m; ++r) s -= at(r, c);
    at(m, c) = s;
  }
  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) basis[r] = n + r;

  const double pivotTol = 1e-12;
  const int maxIter = 50 * (n + m) + 1000;
  int iter = 0;
  for (;; ++iter) {
    if (iter > maxIter) throw Error(ErrorCode::LpNumericalFailure, "simplex iteration cap reached");
    int enter = -1;
    for (int c = 0; c < n + m; ++c)
      if (at(m, c) < -pivotTol) {
        enter = c;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    double best = 0;
    for (int r = 0; r < m; ++r) {
      const double a = at(r, enter);
      if (a <= pivotTol) continue;
      const double ratio = at(r, rhs) / a;
      if (leave < 0 || ratio < best - 1e-15 || (std::abs(ratio - best) <= 1e-15 && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) throw Error(ErrorCode::LpNumericalFailure, "unbounded phase-one problem");
    const double piv = at(leave, enter);
    for (int c = 0; c < cols; ++c) at(leave, c) /= piv;
    for (int r = 0; r <= m; ++r) {
      if (r == leave) continue;
      const double f = at(r, enter);
      if (f == 0.0) continue;
      for (int c = 0; c < cols; ++c) at(r, c) -= f * at(leave, c);
    }
    basis[leave] = enter;
  }

  ConvexFit fit;
  fit.infeasibility = -at(m, rhs);
  fit.weights.assign(n, 0.0);
  for (int r = 0; r < m; ++r)
    if (basis[r] < n) fit.weights[basis[r]] = std::max(0.0, at(r, rhs));
  double err = 0;
  for (int d = 0; d < dim; ++d) {
    double s = 0;
    for (int k = 0; k < n; ++k) s += fit.weights[k] * points[k][d];
    err = std::max(err, std::abs(s - target[d]));
  }
  double total = 0;
  for (double w : fit.weights) total += w;
  err = std::max(err, std::abs(total - 1.0));
  fit.reconstructionError = err;
  fit.feasible = fit.infeasibility <= tol && err <= 1e-7;
  return fit;
}

}  // namespace boxlab
