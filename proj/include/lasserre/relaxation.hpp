#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lasserre/poly_matrix.hpp"
#include "lasserre/polynomial.hpp"
#include "lasserre/sdp.hpp"

namespace lasserre {

/// Degree bookkeeping of the degree-d relaxation: r_i = (d - deg g_i)/2 with
/// the -infinity sentinel for g_i = 0, bases v_i of monomials of degree at
/// most floor(r_i), ell_i = |v_i|, and the lifted-monomial index set
/// I = {alpha : 2 <= |alpha| <= d}.
struct RelaxationSpec {
  PolySystem system;
  int d = 0;
  std::vector<Degree> twice_r;  // d - deg g_i (exact, r_i = twice_r/2)
  std::vector<Degree> r_floor;  // floor(r_i)
  std::vector<std::vector<Monomial>> bases;
  std::vector<long> ell;
  std::vector<Monomial> y_index;
};

/// Affine form over the joint variables (x_1..x_n, y_alpha): ids 0..n-1 are
/// the x's, n+k addresses y_index[k].
struct AffineForm {
  Rational constant;
  std::vector<std::pair<int, Rational>> linear;  // sorted by id

  double eval(std::span<const double> joint) const;
};

struct LmiBlock {
  int constraint = 0;  // 0 addresses g_0 = 1
  int size = 0;
  std::vector<AffineForm> entries;  // row-major, symmetric

  const AffineForm& at(int r, int c) const { return entries[static_cast<size_t>(r * size + c)]; }
  Eigen::MatrixXd eval(std::span<const double> joint) const;
};

/// The linearized block LMI M(x, y) = diag(M_0, ..., M_m); empty blocks are
/// omitted with a record.
struct BlockLMI {
  int nx = 0;
  std::vector<Monomial> y_index;
  std::vector<LmiBlock> blocks;
  std::vector<int> omitted_blocks;

  int num_joint_vars() const { return nx + static_cast<int>(y_index.size()); }
  /// The lift of x: joint vector (x, x^alpha for alpha in y_index).
  std::vector<double> lift(std::span<const double> x) const;
};

struct Relaxation {
  RelaxationSpec spec;
  BlockLMI lmi;
};

/// Builds the degree-d Lasserre relaxation: localizing matrices g_i v_i v_i^T
/// with every monomial of degree 2..d replaced by y_alpha.
Relaxation build_relaxation(const PolySystem& system, int d);

enum class Feasibility { kFeasible, kInfeasible, kAmbiguous };

std::string to_string(Feasibility f);

struct PointMembership {
  Feasibility verdict = Feasibility::kAmbiguous;
  double t_star = 0;                // optimal of max t s.t. M(x, y) - tI psd
  std::vector<double> y_witness;    // for feasible verdicts
  double witness_min_eig = 0;       // recomputed from the witness, not the solver
  std::vector<Eigen::MatrixXd> obstruction;  // normalized dual certificate (infeasible)
  SdpSolution raw;
};

/// Decides x in S_d(g) by solving max t s.t. M(x, y) - t I psd over y; the
/// reformulation is strictly feasible for every x, so boundary cases resolve
/// cleanly. Feasible requires every block of the witness >= -1e-7.
PointMembership point_membership(const BlockLMI& lmi, std::span<const double> x,
                                 const SdpConfig& cfg = SdpConfig());

/// Per-constraint psd Gram matrices witnessing f = sum_i (v_i^T G_i v_i) g_i
/// (scalar) or P = sum_i g_i V_i^T G_i V_i with V_i = v_i (x) I_k (matricial).
struct GramCertificate {
  std::vector<int> constraint;            // block -> constraint index i
  std::vector<std::vector<Monomial>> basis;
  std::vector<Eigen::MatrixXd> gram;
  int matrix_k = 1;  // k = 1 for the scalar module
  double residual_linf = 0;  // exact coefficient defect, recomputed
  double min_gram_eig = 0;   // recomputed by eigendecomposition
};

struct MembershipResult {
  Feasibility verdict = Feasibility::kAmbiguous;
  std::optional<GramCertificate> certificate;
  // infeasibility: separating functional L with L(f) = 1, L psd-negative on
  // the module's Gram cone; indexed like monomial_basis(n, d)
  std::vector<double> separating_functional;
  double separation_margin = 0;
  int degree = 0;
  SdpSolution raw;
};

/// Membership of f in the d-truncated quadratic module M_d(g), decided by a
/// coefficient-matching SDP with min-trace objective. Requires deg f <= d.
MembershipResult module_membership(const PolySystem& system, const Polynomial& f, int d,
                                   const SdpConfig& cfg = SdpConfig());

/// Membership of a symmetric matrix polynomial in M_d^{kxk}(g); one psd Gram
/// variable of size k*ell_i per constraint, acting on v_i (x) I_k.
MembershipResult matrix_module_membership(const PolySystem& system, const PolyMatrix& P, int d,
                                          const SdpConfig& cfg = SdpConfig());

/// Searches d = d_min, d_min+2, ... <= d_cap; returns the first feasible
/// result, else the last one.
MembershipResult module_membership_search(const PolySystem& system, const Polynomial& f,
                                          int d_min, int d_cap, const SdpConfig& cfg = SdpConfig());
MembershipResult matrix_module_membership_search(const PolySystem& system, const PolyMatrix& P,
                                                 int d_min, int d_cap,
                                                 const SdpConfig& cfg = SdpConfig());

/// Exact verification, independent of the solver: reconstructs the combination
/// over Q (doubles are dyadic rationals) and reports the worst coefficient
/// defect together with the minimal Gram eigenvalue.
void verify_certificate(const PolySystem& system, const Polynomial& f, GramCertificate& cert);
void verify_certificate(const PolySystem& system, const PolyMatrix& P, GramCertificate& cert);

/// Renders each G_i (lower triangle, 17 significant digits) plus the residual.
std::string certificate_report(const GramCertificate& cert);

/// H(x) = int_0^1 int_0^t P(u + s(x - u)) ds dt, exact: the degree-q form in
/// s picks up the factor 1/((q+1)(q+2)).
PolyMatrix path_double_integral(const PolyMatrix& P, std::span<const Rational> u);

/// Single-integral variant int_0^1 P(u + s(x-u)) ds with factor 1/(q+1).
PolyMatrix path_single_integral(const PolyMatrix& P, std::span<const Rational> u);

struct LinearOptimum {
  enum class Status { kOptimal, kUnbounded, kInfeasibleLmi, kAmbiguous } status;
  double value = 0;
  std::vector<double> x;  // x-part of the optimizer
  SdpSolution raw;
};

/// min w^T x over the spectrahedron {(x, y) : M(x, y) psd}. Requires |w| = 1.
LinearOptimum optimize_linear(const BlockLMI& lmi, std::span<const double> w,
                              const SdpConfig& cfg = SdpConfig());

}  // namespace lasserre
