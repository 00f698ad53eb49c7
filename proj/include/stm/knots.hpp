#pragma once

#include <Eigen/Dense>

namespace stm::splines {

/// Farthest-point (space-filling) knot selection over the rows of `points`
/// (n×d). Starts at the point nearest the centroid, then repeatedly adds the
/// point with the largest minimum distance to the chosen set; ties break on
/// the lowest row index. Deterministic given input order. If fewer than k
/// distinct points exist, k is reduced with a warning.
Eigen::MatrixXd select_knots(const Eigen::MatrixXd& points, int k);

/// Quantile-spaced knots over the distinct values of x, endpoints included.
/// Reduces k with a warning when there are fewer than k distinct values.
Eigen::VectorXd quantile_knots(const Eigen::VectorXd& x, int k);

}  // namespace stm::splines
