#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace lasserre {

/// Standard-form semidefinite program over block-diagonal symmetric matrices:
///   minimize   sum_b <C_b, X_b>
///   subject to sum_b <A_{j,b}, X_b> = rhs_j   (j = 1..m),   X_b psd.
struct SdpProblem {
  std::vector<int> block_sizes;
  std::vector<Eigen::MatrixXd> objective;                  // C_b per block
  std::vector<std::vector<Eigen::MatrixXd>> constraints;   // [j][b] = A_{j,b}
  std::vector<double> rhs;                                  // b_j
  std::vector<std::string> labels;                          // optional metadata

  int num_blocks() const { return static_cast<int>(block_sizes.size()); }
  int num_constraints() const { return static_cast<int>(rhs.size()); }

  static SdpProblem zeros(std::vector<int> block_sizes, int num_constraints);
  /// Adds v to A_{j,b}[r,c] (and [c,r] for r != c). j = -1 addresses C.
  void add_entry(int j, int block, int r, int c, double v);
  void validate() const;
};

enum class SdpStatus {
  kOptimal,
  kPrimalInfeasible,  // certificate: y with mat(A^T y) psd-negative, b^T y > 0
  kDualInfeasible,    // certificate: X psd, A(X) = 0, <C, X> < 0
  kAmbiguous,
};

std::string to_string(SdpStatus s);

struct SdpSolution {
  SdpStatus status = SdpStatus::kAmbiguous;
  std::vector<Eigen::MatrixXd> X;  // primal blocks (or dual-infeasibility ray)
  Eigen::VectorXd y;               // dual vector (or primal-infeasibility ray)
  std::vector<Eigen::MatrixXd> S;  // dual slacks
  double primal_objective = 0;
  double dual_objective = 0;
  // residuals recomputed from the returned iterates, not the solver loop
  double primal_residual = 0;  // ||A(X) - b|| / (1 + ||b||)
  double dual_residual = 0;    // ||mat(A^T y) + S - C||_F / (1 + ||C||_F)
  double duality_gap = 0;      // <X, S> / (1 + |pobj| + |dobj|)
  double certificate_margin = 0;  // violation margin of an infeasibility ray
  int iterations = 0;
  std::string detail;
};

struct SdpConfig {
  // target tolerances; the solver iterates until it meets these
  double feas_tol = 1e-9;
  double gap_tol = 1e-9;
  // contract tolerances: a stalled iterate within these still counts optimal
  double contract_feas_tol = 1e-7;
  double contract_gap_tol = 1e-7;
  double infeas_tol = 1e-9;
  int max_iterations = 120;
  double step_fraction = 0.98;
  double min_step = 1e-10;  // declare stall below this
};

/// Primal-dual path-following with Nesterov-Todd scaling on the homogeneous
/// self-dual embedding, so infeasible instances terminate with certificates
/// instead of diverging. Deterministic: no seeding, fixed iteration order.
SdpSolution solve(const SdpProblem& p, const SdpConfig& cfg = SdpConfig());

enum class PsdClass { kPositiveDefinite, kPositiveSemidefinite, kNotPsd };

struct PsdReport {
  PsdClass classification;
  double min_eigenvalue;
};

/// Classification by symmetric eigendecomposition: pd needs min eig > tol,
/// psd needs min eig >= -tol. Throws on non-symmetric input (1e-12 relative).
PsdReport psd_check(const Eigen::MatrixXd& A, double tol);

}  // namespace lasserre
