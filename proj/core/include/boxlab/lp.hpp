#pragma once

#include <span>
#include <vector>

namespace boxlab {

struct ConvexFit {
  bool feasible = false;
  std::vector<double> weights;
  // Phase-one objective at termination: sum of artificial variables.
  double infeasibility = 0;
  double reconstructionError = 0;
};

// Finds w >= 0 with sum(w) = 1 and sum_k w_k * points[k] = target, by a dense two-phase
// simplex restricted to phase one, pivoting with Bland's rule.
// Throws Error(LpNumericalFailure) when the iteration cap is hit.
ConvexFit convex_weights(const std::vector<std::vector<double>>& points, std::span<const double> target,
                         double tol = 1e-9);

}  // namespace boxlab
