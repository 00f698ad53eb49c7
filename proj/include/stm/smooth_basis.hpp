#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>

namespace stm::splines {

enum class BasisKind : std::uint8_t { tps2d = 0, uni1d = 1 };

/// Low-rank penalized spline basis in the knot-based radial form: unpenalized
/// polynomial columns (1, x[, y]) followed by radial columns projected onto
/// the complement of the polynomial space at the knots, so the kernel penalty
/// is positive semidefinite on the projected block and exactly zero on the
/// polynomial block.
///
/// Column 0 of every design is the constant; additive-model fitting drops it
/// and centers the remaining columns for identifiability.
class SmoothBasis {
 public:
  /// 2-D thin plate basis: radial kernel r^2 log r, null space {1, x, y}.
  /// `points` are the training locations (n×2, km), `knots` k×2 distinct rows.
  static SmoothBasis tps(const Eigen::MatrixXd& points, const Eigen::MatrixXd& knots);

  /// 1-D basis with cubic radial kernel |r|^3 (second-derivative-type
  /// penalty), null space {1, x}; knots at quantiles of x.
  static SmoothBasis uni(const Eigen::VectorXd& x, int k);

  /// Rebuild from serialized parts.
  static SmoothBasis from_parts(BasisKind kind, Eigen::MatrixXd knots, Eigen::VectorXd center,
                                double scale, Eigen::MatrixXd zproj);

  /// Basis evaluation at new inputs: m×2 for tps2d, m×1 for uni1d.
  Eigen::MatrixXd design_at(const Eigen::MatrixXd& pts) const;

  const Eigen::MatrixXd& design() const { return design_; }
  const Eigen::MatrixXd& penalty() const { return penalty_; }
  int null_dim() const { return null_dim_; }
  int size() const { return static_cast<int>(knots_.rows()); }  // p = k columns
  BasisKind kind() const { return kind_; }
  int dim() const { return kind_ == BasisKind::tps2d ? 2 : 1; }

  const Eigen::MatrixXd& knots() const { return knots_; }
  const Eigen::VectorXd& center() const { return center_; }
  double scale() const { return scale_; }
  const Eigen::MatrixXd& zproj() const { return zproj_; }

 private:
  SmoothBasis() = default;
  void build_penalty();

  BasisKind kind_ = BasisKind::tps2d;
  int null_dim_ = 3;
  Eigen::MatrixXd knots_;   // k×d, raw coordinates
  Eigen::VectorXd center_;  // d
  double scale_ = 1.0;      // isotropic rescaling applied before the kernel
  Eigen::MatrixXd zproj_;   // k×(k−null_dim), null-space complement at the knots
  Eigen::MatrixXd design_;  // training design, n×k
  Eigen::MatrixXd penalty_;  // k×k, PSD
};

using BasisPtr = std::shared_ptr<const SmoothBasis>;

}  // namespace stm::splines
