#include "stm/smooth_basis.hpp"

#include <cmath>

#include "stm/error.hpp"
#include "stm/knots.hpp"

namespace stm::splines {

namespace {

inline double tps_eta(double r) { return r > 0.0 ? r * r * std::log(r) : 0.0; }
inline double cubic_eta(double r) { return r * r * r; }

Eigen::MatrixXd kernel_matrix(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, BasisKind kind) {
  Eigen::MatrixXd k(a.rows(), b.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.rows(); ++j) {
      double r = (a.row(i) - b.row(j)).norm();
      k(i, j) = kind == BasisKind::tps2d ? tps_eta(r) : cubic_eta(r);
    }
  return k;
}

// Orthonormal basis of the complement of the polynomial space spanned at the
// knots, via the trailing columns of a full Householder QR.
Eigen::MatrixXd null_complement(const Eigen::MatrixXd& poly) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(poly);
  Eigen::MatrixXd q = qr.householderQ();
  return q.rightCols(poly.rows() - poly.cols());
}

}  // namespace

SmoothBasis SmoothBasis::tps(const Eigen::MatrixXd& points, const Eigen::MatrixXd& knots) {
  if (points.cols() != 2 || knots.cols() != 2) throw Error("tps basis: inputs must be n×2");
  const int k = static_cast<int>(knots.rows());
  if (k < 4) throw Error("tps basis: need at least 4 knots");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if ((knots.row(i) - knots.row(j)).norm() == 0.0) throw Error("tps basis: duplicate knots");

  SmoothBasis b;
  b.kind_ = BasisKind::tps2d;
  b.null_dim_ = 3;
  b.knots_ = knots;
  b.center_ = points.colwise().mean();
  Eigen::MatrixXd centered = points.rowwise() - b.center_.transpose();
  double var = centered.squaredNorm() / (2.0 * points.rows());
  b.scale_ = var > 0 ? std::sqrt(var) : 1.0;

  Eigen::MatrixXd kn = (knots.rowwise() - b.center_.transpose()) / b.scale_;
  Eigen::MatrixXd poly(k, 3);
  poly.col(0).setOnes();
  poly.col(1) = kn.col(0);
  poly.col(2) = kn.col(1);
  b.zproj_ = null_complement(poly);
  b.build_penalty();
  b.design_ = b.design_at(points);
  return b;
}

SmoothBasis SmoothBasis::uni(const Eigen::VectorXd& x, int k) {
  if (k < 3) throw Error("uni basis: k must be at least 3");
  Eigen::VectorXd kq = quantile_knots(x, k);
  if (kq.size() < 3)
    throw Error("uni basis: fewer than 3 distinct values; cannot build a smooth");

  SmoothBasis b;
  b.kind_ = BasisKind::uni1d;
  b.null_dim_ = 2;
  b.knots_ = kq;
  b.center_ = Eigen::VectorXd::Constant(1, x.mean());
  Eigen::VectorXd centered = x.array() - b.center_[0];
  double var = centered.squaredNorm() / x.size();
  b.scale_ = var > 0 ? std::sqrt(var) : 1.0;

  Eigen::VectorXd kn = (kq.array() - b.center_[0]) / b.scale_;
  Eigen::MatrixXd poly(kn.size(), 2);
  poly.col(0).setOnes();
  poly.col(1) = kn;
  b.zproj_ = null_complement(poly);
  b.build_penalty();
  b.design_ = b.design_at(x);
  return b;
}

SmoothBasis SmoothBasis::from_parts(BasisKind kind, Eigen::MatrixXd knots, Eigen::VectorXd center,
                                    double scale, Eigen::MatrixXd zproj) {
  SmoothBasis b;
  b.kind_ = kind;
  b.null_dim_ = kind == BasisKind::tps2d ? 3 : 2;
  b.knots_ = std::move(knots);
  b.center_ = std::move(center);
  b.scale_ = scale;
  b.zproj_ = std::move(zproj);
  b.build_penalty();
  return b;
}

void SmoothBasis::build_penalty() {
  const int k = static_cast<int>(knots_.rows());
  Eigen::MatrixXd kn = (knots_.rowwise() - center_.transpose()) / scale_;
  Eigen::MatrixXd e = kernel_matrix(kn, kn, kind_);
  Eigen::MatrixXd s = zproj_.transpose() * e * zproj_;
  penalty_ = Eigen::MatrixXd::Zero(k, k);
  penalty_.bottomRightCorner(k - null_dim_, k - null_dim_) = 0.5 * (s + s.transpose());
}

Eigen::MatrixXd SmoothBasis::design_at(const Eigen::MatrixXd& pts) const {
  const int d = dim();
  if (pts.cols() != d)
    throw Error("basis evaluation: expected " + std::to_string(d) + " columns, got " +
                std::to_string(pts.cols()));
  const Eigen::Index m = pts.rows();
  const int k = static_cast<int>(knots_.rows());
  Eigen::MatrixXd scaled = (pts.rowwise() - center_.transpose()) / scale_;
  Eigen::MatrixXd kn = (knots_.rowwise() - center_.transpose()) / scale_;
  Eigen::MatrixXd x(m, k);
  x.col(0).setOnes();
  for (int j = 0; j < d; ++j) x.col(1 + j) = scaled.col(j);
  x.rightCols(k - null_dim_) = kernel_matrix(scaled, kn, kind_) * zproj_;
  return x;
}

}  // namespace stm::splines
