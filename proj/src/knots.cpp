#include "stm/knots.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "stm/error.hpp"

namespace stm::splines {

Eigen::MatrixXd select_knots(const Eigen::MatrixXd& points, int k) {
  const int n = static_cast<int>(points.rows());
  const int d = static_cast<int>(points.cols());
  if (n == 0) throw Error("select_knots: no points");
  if (k < 1) throw Error("select_knots: k must be positive");

  // Deduplicate, keeping first occurrence order.
  std::vector<int> distinct;
  distinct.reserve(n);
  for (int i = 0; i < n; ++i) {
    bool dup = false;
    for (int j : distinct) {
      if ((points.row(i) - points.row(j)).norm() == 0.0) {
        dup = true;
        break;
      }
    }
    if (!dup) distinct.push_back(i);
  }
  int m = static_cast<int>(distinct.size());
  if (k > m) {
    log_warn("select_knots: only " + std::to_string(m) + " distinct points for k=" +
             std::to_string(k) + "; reducing k");
    k = m;
  }

  Eigen::RowVectorXd centroid = Eigen::RowVectorXd::Zero(d);
  for (int j : distinct) centroid += points.row(j);
  centroid /= m;

  // Start at the distinct point nearest the centroid (lowest index on ties).
  int start = distinct[0];
  double best = std::numeric_limits<double>::infinity();
  for (int j : distinct) {
    double dist = (points.row(j) - centroid).norm();
    if (dist < best) {
      best = dist;
      start = j;
    }
  }

  std::vector<int> chosen{start};
  std::vector<double> min_dist(m, std::numeric_limits<double>::infinity());
  auto update = [&](int new_knot) {
    for (int idx = 0; idx < m; ++idx) {
      double dist = (points.row(distinct[idx]) - points.row(new_knot)).norm();
      min_dist[idx] = std::min(min_dist[idx], dist);
    }
  };
  update(start);
  while (static_cast<int>(chosen.size()) < k) {
    int next = -1;
    double far = -1.0;
    for (int idx = 0; idx < m; ++idx) {
      if (min_dist[idx] > far) {
        far = min_dist[idx];
        next = distinct[idx];
      }
    }
    chosen.push_back(next);
    update(next);
  }

  Eigen::MatrixXd knots(k, d);
  for (int i = 0; i < k; ++i) knots.row(i) = points.row(chosen[i]);
  return knots;
}

Eigen::VectorXd quantile_knots(const Eigen::VectorXd& x, int k) {
  if (x.size() == 0) throw Error("quantile_knots: empty input");
  if (k < 1) throw Error("quantile_knots: k must be positive");
  std::vector<double> sorted(x.data(), x.data() + x.size());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  int m = static_cast<int>(sorted.size());
  if (k > m) {
    log_warn("quantile_knots: only " + std::to_string(m) + " distinct values for k=" +
             std::to_string(k) + "; reducing k");
    k = m;
  }
  Eigen::VectorXd knots(k);
  if (k == 1) {
    knots[0] = sorted[0];
    return knots;
  }
  for (int i = 0; i < k; ++i) {
    double p = static_cast<double>(i) / (k - 1) * (m - 1);
    int lo = static_cast<int>(p);
    double frac = p - lo;
    knots[i] = lo + 1 < m ? sorted[lo] * (1 - frac) + sorted[lo + 1] * frac : sorted[m - 1];
  }
  // Quantile interpolation can still collide for heavily tied data.
  std::vector<double> uniq(knots.data(), knots.data() + k);
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  if (static_cast<int>(uniq.size()) < k) {
    Eigen::VectorXd reduced(uniq.size());
    for (std::size_t i = 0; i < uniq.size(); ++i) reduced[i] = uniq[i];
    return reduced;
  }
  return knots;
}

}  // namespace stm::splines
