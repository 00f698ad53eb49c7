#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "stm/smooth_basis.hpp"

namespace stm::gam {

enum class LambdaPolicy : std::uint8_t { free = 0, fixed = 1, lower_bounded = 2 };

struct TermSpec {
  std::string name;
  splines::BasisPtr basis;
  LambdaPolicy policy = LambdaPolicy::free;
  double lambda = 1.0;  // fixed value, or lower bound for lower_bounded
};

/// Unpenalized design block (e.g. an intercept column).
struct FixedBlock {
  std::string name;
  Eigen::MatrixXd design;
};

/// Grouping factor whose per-group effects are profiled out by within-group
/// centering instead of entering the design as dummy columns.
struct GroupSpec {
  std::string name;
  std::vector<int> index;  // row -> group, 0-based, dense
  int n_groups = 0;
};

struct FitOptions {
  double log10_lo = -8.0;
  double log10_hi = 8.0;
  double grid_step = 2.0;
  double rel_tol = 1e-7;
  int max_cycles = 30;
};

struct FittedTerm {
  std::string name;
  splines::BasisPtr basis;
  Eigen::VectorXd col_means;  // centering applied to basis columns 1..p-1
  int offset = 0;
  int size = 0;
  double lambda = 0.0;
  double edf = 0.0;
};

struct FittedBlock {
  std::string name;
  int offset = 0;
  int size = 0;
};

/// A fitted additive model. Coefficients are stored jointly; coef_cov is the
/// posterior covariance sigma2 * (X'WX + sum_k lambda_k S_k)^-1.
struct AdditiveFit {
  std::vector<FittedTerm> terms;
  std::vector<FittedBlock> blocks;
  Eigen::VectorXd coef;
  Eigen::MatrixXd coef_cov;
  double sigma2 = 0.0;
  double gcv = 0.0;
  double rss = 0.0;
  double edf_total = 0.0;  // tr(A), including profiled group effects
  long n = 0;

  std::string group_name;
  Eigen::VectorXd group_effects;     // per group, empty when no grouping
  Eigen::VectorXd group_effect_var;  // sampling variance of each group effect

  // Training-data artifacts; not serialized.
  Eigen::VectorXd fitted;
  Eigen::MatrixXd design_centered;  // globally centered design (no group centering)

  const FittedTerm& term(const std::string& name) const;
  const FittedBlock& block(const std::string& name) const;
  bool has_term(const std::string& name) const;
};

/// GCV = n * RSS / (n - tr(A))^2. Throws when tr(A) >= n.
double gcv_score(double n, double rss, double tr_a);

/// Assembled penalized least-squares problem. Construction fixes the designs,
/// penalties and weights; fit() can then be called repeatedly with new
/// responses (smoothing parameters re-selected each call).
class AdditiveFitter {
 public:
  AdditiveFitter(std::vector<TermSpec> terms, std::vector<FixedBlock> fixed,
                 std::optional<GroupSpec> group = std::nullopt,
                 Eigen::VectorXd weights = Eigen::VectorXd(), FitOptions options = FitOptions());

  /// Select free smoothing parameters by GCV and return the full fit.
  AdditiveFit fit(const Eigen::VectorXd& y) const;

  /// Fit at explicitly given per-term lambdas (no search).
  AdditiveFit fit_at(const Eigen::VectorXd& y, const Eigen::VectorXd& lambdas) const;

  /// GCV score at the given lambdas.
  double gcv_at(const Eigen::VectorXd& y, const Eigen::VectorXd& lambdas) const;

  long n_rows() const { return n_; }
  int n_coef() const { return p_; }
  int n_terms() const { return static_cast<int>(terms_.size()); }

  /// Raw assembled (globally centered, group-centered) design and the total
  /// penalty at given lambdas; used by the dense-influence-matrix oracle.
  const Eigen::MatrixXd& solver_design() const { return solver_design_raw_; }
  Eigen::MatrixXd penalty_at(const Eigen::VectorXd& lambdas) const;
  const Eigen::VectorXd& weights() const { return weights_; }
  int n_groups() const { return group_ ? group_->n_groups : 0; }

 private:
  struct TermWork {
    TermSpec spec;
    Eigen::VectorXd col_means;
    int offset = 0;
    int size = 0;
    Eigen::MatrixXd penalty;       // equilibrated
    Eigen::MatrixXd penalty_sqrt;  // rows r×size with L'L = penalty
    Eigen::MatrixXd penalty_raw;   // unequilibrated (oracle accessor)
  };

  struct Solve {
    Eigen::VectorXd beta_scaled;
    Eigen::MatrixXd r;  // upper-triangular factor, P×P
    double rss = 0.0;
    double tr_a = 0.0;
    Eigen::VectorXd edf_cols;
  };

  Eigen::VectorXd center_by_group(const Eigen::VectorXd& v) const;
  Solve solve_at(const Eigen::VectorXd& y_centered_weighted, const Eigen::VectorXd& lambdas) const;
  Eigen::VectorXd search_lambdas(const Eigen::VectorXd& yw) const;
  double score(const Eigen::VectorXd& yw, const Eigen::VectorXd& lambdas) const;
  AdditiveFit build_fit(const Eigen::VectorXd& y, const Eigen::VectorXd& lambdas) const;

  std::vector<TermWork> terms_;
  std::vector<FittedBlock> block_layout_;
  std::vector<Eigen::MatrixXd> block_designs_;
  std::optional<GroupSpec> group_;
  Eigen::VectorXd weights_;      // all ones if not supplied
  Eigen::VectorXd sqrt_weights_;
  FitOptions options_;

  long n_ = 0;
  int p_ = 0;
  Eigen::MatrixXd design_centered_;    // global centering only
  Eigen::MatrixXd solver_design_raw_;  // + group centering, before equilibration
  Eigen::MatrixXd solver_design_;      // + column equilibration
  Eigen::VectorXd col_scale_;          // equilibration factors
  Eigen::MatrixXd a_top_;              // sqrt(W) * solver_design_
  Eigen::MatrixXd btb_;                // a_top' a_top
  std::vector<double> group_weight_sums_;
};

struct TermPrediction {
  Eigen::VectorXd mean;
  Eigen::VectorXd se;
};

/// Mean and pointwise standard error of one smooth term at new inputs
/// (m×2 for tps2d, m×1 for uni1d). Throws for unknown names.
TermPrediction predict_term(const AdditiveFit& fit, const std::string& name,
                            const Eigen::MatrixXd& inputs);

/// One part of a joint prediction: a smooth term evaluated at raw inputs, or
/// a fixed block with its design supplied directly.
struct JointPart {
  std::string name;
  Eigen::MatrixXd data;
  bool is_block = false;
};

/// Joint mean and standard error of a sum of terms/blocks, using the full
/// covariance across their coefficient segments.
TermPrediction predict_joint(const AdditiveFit& fit, const std::vector<JointPart>& parts);

/// Fitted contribution of one term on the training rows.
Eigen::VectorXd term_fitted(const AdditiveFit& fit, const std::string& name);

}  // namespace stm::gam
