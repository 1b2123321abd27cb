#include "lasserre/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lasserre {

SdpProblem SdpProblem::zeros(std::vector<int> sizes, int num_constraints) {
  SdpProblem p;
  p.block_sizes = std::move(sizes);
  p.objective.reserve(p.block_sizes.size());
  for (int n : p.block_sizes) p.objective.push_back(Eigen::MatrixXd::Zero(n, n));
  p.constraints.resize(static_cast<size_t>(num_constraints));
  for (auto& row : p.constraints) {
    row.reserve(p.block_sizes.size());
    for (int n : p.block_sizes) row.push_back(Eigen::MatrixXd::Zero(n, n));
  }
  p.rhs.assign(static_cast<size_t>(num_constraints), 0.0);
  return p;
}

void SdpProblem::add_entry(int j, int block, int r, int c, double v) {
  Eigen::MatrixXd& m = (j < 0) ? objective[static_cast<size_t>(block)]
                               : constraints[static_cast<size_t>(j)][static_cast<size_t>(block)];
  m(r, c) += v;
  if (r != c) m(c, r) += v;
}

void SdpProblem::validate() const {
  if (objective.size() != block_sizes.size())
    throw std::invalid_argument("SdpProblem: objective block count mismatch");
  if (constraints.size() != rhs.size())
    throw std::invalid_argument("SdpProblem: constraint/rhs count mismatch");
  for (size_t b = 0; b < block_sizes.size(); ++b) {
    int n = block_sizes[b];
    if (objective[b].rows() != n || objective[b].cols() != n)
      throw std::invalid_argument("SdpProblem: objective block shape mismatch");
    if (!objective[b].isApprox(objective[b].transpose(), 1e-12))
      throw std::invalid_argument("SdpProblem: objective block not symmetric");
  }
  for (const auto& row : constraints) {
    if (row.size() != block_sizes.size())
      throw std::invalid_argument("SdpProblem: constraint block count mismatch");
    for (size_t b = 0; b < block_sizes.size(); ++b) {
      int n = block_sizes[b];
      if (row[b].rows() != n || row[b].cols() != n)
        throw std::invalid_argument("SdpProblem: constraint block shape mismatch");
      if (!row[b].isApprox(row[b].transpose(), 1e-12))
        throw std::invalid_argument("SdpProblem: constraint block not symmetric");
    }
  }
}

std::string to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::kOptimal: return "optimal";
    case SdpStatus::kPrimalInfeasible: return "primal-infeasible";
    case SdpStatus::kDualInfeasible: return "dual-infeasible";
    case SdpStatus::kAmbiguous: return "ambiguous";
  }
  return "unknown";
}

PsdReport psd_check(const Eigen::MatrixXd& A, double tol) {
  if (A.rows() != A.cols()) throw std::invalid_argument("psd_check: not square");
  double scale = std::max(1.0, A.norm());
  if ((A - A.transpose()).norm() > 1e-12 * scale)
    throw std::invalid_argument("psd_check: input not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
  double mn = A.rows() == 0 ? 0.0 : es.eigenvalues().minCoeff();
  PsdReport r{PsdClass::kNotPsd, mn};
  if (mn > tol)
    r.classification = PsdClass::kPositiveDefinite;
  else if (mn >= -tol)
    r.classification = PsdClass::kPositiveSemidefinite;
  return r;
}

namespace {

using Blocks = std::vector<Eigen::MatrixXd>;

double inner(const Blocks& a, const Blocks& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i].cwiseProduct(b[i]).sum();
  return s;
}

double fro(const Blocks& a) {
  double s = 0;
  for (const auto& m : a) s += m.squaredNorm();
  return std::sqrt(s);
}

struct NtScaling {
  Eigen::MatrixXd R;      // R^T S R = R^-1 X R^-T = diag(lambda)
  Eigen::MatrixXd Rinv;
  Eigen::VectorXd lambda;
  Eigen::MatrixXd W;      // R R^T
};

Eigen::MatrixXd chol_lower(const Eigen::MatrixXd& V) {
  Eigen::LLT<Eigen::MatrixXd> llt(V);
  if (llt.info() == Eigen::Success) return llt.matrixL();
  // near-singular iterate: rebuild from clamped eigendecomposition
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(V);
  Eigen::VectorXd d = es.eigenvalues().cwiseMax(1e-300);
  Eigen::MatrixXd B = es.eigenvectors() * d.cwiseSqrt().asDiagonal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(B.transpose());
  Eigen::MatrixXd Lt = qr.matrixQR().triangularView<Eigen::Upper>();
  // enforce positive diagonal
  for (int i = 0; i < Lt.rows(); ++i)
    if (Lt(i, i) < 0) Lt.row(i) = -Lt.row(i);
  return Lt.transpose();
}

NtScaling nt_scaling(const Eigen::MatrixXd& X, const Eigen::MatrixXd& S) {
  NtScaling nt;
  Eigen::MatrixXd L = chol_lower(X);
  Eigen::MatrixXd U = chol_lower(S);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(U.transpose() * L,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd sig = svd.singularValues().cwiseMax(1e-300);
  Eigen::VectorXd isq = sig.cwiseSqrt().cwiseInverse();
  nt.R = L * svd.matrixV() * isq.asDiagonal();
  // R^-1 = diag(sig^1/2) V^T L^-1, but the triangular solve form is stabler:
  Eigen::MatrixXd Linv = L.triangularView<Eigen::Lower>().solve(
      Eigen::MatrixXd::Identity(L.rows(), L.cols()));
  nt.Rinv = sig.cwiseSqrt().asDiagonal() * svd.matrixV().transpose() * Linv;
  nt.lambda = sig;
  nt.W = nt.R * nt.R.transpose();
  return nt;
}

// largest a with V + a*D psd (V pd), via min eigenvalue of L^-1 D L^-T
double max_step(const Eigen::MatrixXd& V, const Eigen::MatrixXd& D) {
  Eigen::MatrixXd L = chol_lower(V);
  Eigen::MatrixXd Li = L.triangularView<Eigen::Lower>().solve(
      Eigen::MatrixXd::Identity(L.rows(), L.cols()));
  Eigen::MatrixXd G = Li * D * Li.transpose();
  Eigen::MatrixXd Gs = 0.5 * (G + G.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Gs, Eigen::EigenvaluesOnly);
  double mn = es.eigenvalues().minCoeff();
  if (mn >= 0) return std::numeric_limits<double>::infinity();
  return -1.0 / mn;
}

}  // namespace

SdpSolution solve(const SdpProblem& prob, const SdpConfig& cfg) {
  prob.validate();
  const int m = prob.num_constraints();
  const int nb = prob.num_blocks();
  if (m == 0) throw std::invalid_argument("solve: need at least one constraint");

  Eigen::VectorXd b(m);
  for (int j = 0; j < m; ++j) b(j) = prob.rhs[static_cast<size_t>(j)];

  auto apply_A = [&](const Blocks& X) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(m);
    for (int j = 0; j < m; ++j)
      for (int bk = 0; bk < nb; ++bk)
        v(j) += prob.constraints[static_cast<size_t>(j)][static_cast<size_t>(bk)]
                    .cwiseProduct(X[static_cast<size_t>(bk)])
                    .sum();
    return v;
  };
  auto apply_At = [&](const Eigen::VectorXd& y) {
    Blocks Z;
    Z.reserve(static_cast<size_t>(nb));
    for (int bk = 0; bk < nb; ++bk) {
      Eigen::MatrixXd z = Eigen::MatrixXd::Zero(prob.block_sizes[static_cast<size_t>(bk)],
                                                prob.block_sizes[static_cast<size_t>(bk)]);
      for (int j = 0; j < m; ++j)
        z += y(j) * prob.constraints[static_cast<size_t>(j)][static_cast<size_t>(bk)];
      Z.push_back(std::move(z));
    }
    return Z;
  };

  int nu = 0;
  for (int n : prob.block_sizes) nu += n;

  // homogeneous self-dual state
  Blocks X, S;
  for (int n : prob.block_sizes) {
    X.push_back(Eigen::MatrixXd::Identity(n, n));
    S.push_back(Eigen::MatrixXd::Identity(n, n));
  }
  Eigen::VectorXd y = Eigen::VectorXd::Zero(m);
  double tau = 1.0, kappa = 1.0;

  const Blocks& C = prob.objective;
  const double bnorm = b.norm(), Cnorm = fro(C);

  SdpSolution sol;
  sol.X = X;
  sol.S = S;
  sol.y = y;

  auto finalize_optimal = [&]() {
    sol.status = SdpStatus::kOptimal;
    for (int bk = 0; bk < nb; ++bk) {
      sol.X[static_cast<size_t>(bk)] = X[static_cast<size_t>(bk)] / tau;
      sol.S[static_cast<size_t>(bk)] = S[static_cast<size_t>(bk)] / tau;
    }
    sol.y = y / tau;
    sol.primal_objective = inner(C, sol.X);
    sol.dual_objective = b.dot(sol.y);
    sol.primal_residual = (apply_A(sol.X) - b).norm() / (1 + bnorm);
    Blocks Aty = apply_At(sol.y);
    double dres = 0;
    for (int bk = 0; bk < nb; ++bk)
      dres += (Aty[static_cast<size_t>(bk)] + sol.S[static_cast<size_t>(bk)] -
               C[static_cast<size_t>(bk)])
                  .squaredNorm();
    sol.dual_residual = std::sqrt(dres) / (1 + Cnorm);
    sol.duality_gap = inner(sol.X, sol.S) /
                      (1 + std::abs(sol.primal_objective) + std::abs(sol.dual_objective));
  };

  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    sol.iterations = iter;

    // residuals of the homogeneous model
    Eigen::VectorXd rP = apply_A(X) - b * tau;
    Blocks Aty = apply_At(y);
    Blocks RD;
    RD.reserve(static_cast<size_t>(nb));
    for (int bk = 0; bk < nb; ++bk)
      RD.push_back(C[static_cast<size_t>(bk)] * tau - Aty[static_cast<size_t>(bk)] -
                   S[static_cast<size_t>(bk)]);
    double rG = b.dot(y) - inner(C, X) - kappa;
    double mu = (inner(X, S) + tau * kappa) / (nu + 1);

    // convergence of the scaled-back iterate
    {
      double pres = (apply_A(X) / tau - b).norm() / (1 + bnorm);
      double dres = 0;
      for (int bk = 0; bk < nb; ++bk)
        dres += (Aty[static_cast<size_t>(bk)] / tau + S[static_cast<size_t>(bk)] / tau -
                 C[static_cast<size_t>(bk)])
                    .squaredNorm();
      dres = std::sqrt(dres) / (1 + Cnorm);
      double pobj = inner(C, X) / tau, dobj = b.dot(y) / tau;
      double gap = inner(X, S) / (tau * tau) / (1 + std::abs(pobj) + std::abs(dobj));
      if (pres <= cfg.feas_tol && dres <= cfg.feas_tol && gap <= cfg.gap_tol) {
        finalize_optimal();
        return sol;
      }
      // infeasibility certificates from the homogeneous ray
      double by = b.dot(y);
      if (by > 0) {
        Blocks Zn = apply_At(y);
        double viol = 0;
        for (int bk = 0; bk < nb; ++bk)
          viol += (Zn[static_cast<size_t>(bk)] + S[static_cast<size_t>(bk)]).squaredNorm();
        viol = std::sqrt(viol) / by;
        if (viol <= cfg.infeas_tol * (1 + y.norm() / by)) {
          sol.status = SdpStatus::kPrimalInfeasible;
          sol.y = y / by;  // b^T y = 1, mat(A^T y) <= -S/by (psd-negative)
          for (int bk = 0; bk < nb; ++bk) sol.S[static_cast<size_t>(bk)] = S[static_cast<size_t>(bk)] / by;
          sol.certificate_margin = 1.0 / (1 + y.norm() / by);
          sol.detail = "Farkas ray: b^T y = 1, ||mat(A^T y) + S|| = " + std::to_string(viol);
          return sol;
        }
      }
      double cx = inner(C, X);
      if (cx < 0) {
        double viol = apply_A(X).norm() / (-cx);
        if (viol <= cfg.infeas_tol * (1 + fro(X) / (-cx))) {
          sol.status = SdpStatus::kDualInfeasible;
          for (int bk = 0; bk < nb; ++bk) sol.X[static_cast<size_t>(bk)] = X[static_cast<size_t>(bk)] / (-cx);
          sol.certificate_margin = 1.0 / (1 + fro(X) / (-cx));
          sol.detail = "improving ray: <C, X> = -1, ||A(X)|| = " + std::to_string(viol);
          return sol;
        }
      }
    }

    // NT scalings
    std::vector<NtScaling> nt;
    nt.reserve(static_cast<size_t>(nb));
    for (int bk = 0; bk < nb; ++bk)
      nt.push_back(nt_scaling(X[static_cast<size_t>(bk)], S[static_cast<size_t>(bk)]));

    // Schur complement M_jk = sum_b <A_j, W A_k W>, factorized once per iter
    std::vector<Blocks> WAW(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
      WAW[static_cast<size_t>(j)].reserve(static_cast<size_t>(nb));
      for (int bk = 0; bk < nb; ++bk)
        WAW[static_cast<size_t>(j)].push_back(
            nt[static_cast<size_t>(bk)].W *
            prob.constraints[static_cast<size_t>(j)][static_cast<size_t>(bk)] *
            nt[static_cast<size_t>(bk)].W);
    }
    Eigen::MatrixXd M(m, m);
    for (int j = 0; j < m; ++j)
      for (int k = j; k < m; ++k) {
        double v = 0;
        for (int bk = 0; bk < nb; ++bk)
          v += prob.constraints[static_cast<size_t>(j)][static_cast<size_t>(bk)]
                   .cwiseProduct(WAW[static_cast<size_t>(k)][static_cast<size_t>(bk)])
                   .sum();
        M(j, k) = v;
        M(k, j) = v;
      }
    Eigen::LDLT<Eigen::MatrixXd> Mfac(M);
    if (Mfac.info() != Eigen::Success || !(Mfac.vectorD().minCoeff() > 0)) {
      M.diagonal().array() += std::max(1e-14 * M.trace() / m, 1e-300);
      Mfac.compute(M);
    }

    Blocks WCW;
    WCW.reserve(static_cast<size_t>(nb));
    for (int bk = 0; bk < nb; ++bk)
      WCW.push_back(nt[static_cast<size_t>(bk)].W * C[static_cast<size_t>(bk)] *
                    nt[static_cast<size_t>(bk)].W);
    Eigen::VectorXd p = apply_A(WCW);
    double q = inner(C, WCW);
    Blocks WRdW;
    WRdW.reserve(static_cast<size_t>(nb));
    for (int bk = 0; bk < nb; ++bk)
      WRdW.push_back(nt[static_cast<size_t>(bk)].W * RD[static_cast<size_t>(bk)] *
                     nt[static_cast<size_t>(bk)].W);
    Eigen::VectorXd A_WRdW = apply_A(WRdW);
    double C_WRdW = inner(C, WRdW);

    // one Newton solve for given (eta, sigma, corrector terms)
    struct Direction {
      Blocks dX, dS;
      Eigen::VectorXd dy;
      double dtau, dkappa;
    };
    auto newton = [&](double eta, double sigma, const Blocks* corr, double corr_tk) {
      Direction d;
      Blocks G0;
      G0.reserve(static_cast<size_t>(nb));
      for (int bk = 0; bk < nb; ++bk) {
        const auto& lam = nt[static_cast<size_t>(bk)].lambda;
        int n = prob.block_sizes[static_cast<size_t>(bk)];
        Eigen::MatrixXd K(n, n);
        for (int i = 0; i < n; ++i)
          for (int j2 = 0; j2 < n; ++j2) {
            double rhs = (i == j2) ? (sigma * mu - lam(i) * lam(i)) : 0.0;
            if (corr) rhs -= (*corr)[static_cast<size_t>(bk)](i, j2);
            K(i, j2) = 2.0 * rhs / (lam(i) + lam(j2));
          }
        G0.push_back(nt[static_cast<size_t>(bk)].R * K * nt[static_cast<size_t>(bk)].R.transpose());
      }
      Eigen::VectorXd r1 = -eta * rP - apply_A(G0) + eta * A_WRdW;
      double r2 = -eta * rG + inner(C, G0) - eta * C_WRdW + (sigma * mu - tau * kappa - corr_tk) / tau;
      Eigen::VectorXd u1 = Mfac.solve(r1);
      Eigen::VectorXd u2 = Mfac.solve(p + b);
      double denom = (b - p).dot(u2) + q + kappa / tau;
      d.dtau = (r2 - (b - p).dot(u1)) / denom;
      d.dy = u1 + d.dtau * u2;
      Blocks Atdy = apply_At(d.dy);
      d.dS.reserve(static_cast<size_t>(nb));
      d.dX.reserve(static_cast<size_t>(nb));
      for (int bk = 0; bk < nb; ++bk) {
        Eigen::MatrixXd dS = C[static_cast<size_t>(bk)] * d.dtau - Atdy[static_cast<size_t>(bk)] +
                             eta * RD[static_cast<size_t>(bk)];
        Eigen::MatrixXd dX =
            G0[static_cast<size_t>(bk)] -
            nt[static_cast<size_t>(bk)].W * dS * nt[static_cast<size_t>(bk)].W;
        dX = 0.5 * (dX + dX.transpose());
        d.dS.push_back(0.5 * (dS + dS.transpose()));
        d.dX.push_back(std::move(dX));
      }
      d.dkappa = (sigma * mu - tau * kappa - corr_tk - kappa * d.dtau) / tau;
      return d;
    };

    auto step_bound = [&](const Direction& d) {
      double a = std::numeric_limits<double>::infinity();
      for (int bk = 0; bk < nb; ++bk) {
        a = std::min(a, max_step(X[static_cast<size_t>(bk)], d.dX[static_cast<size_t>(bk)]));
        a = std::min(a, max_step(S[static_cast<size_t>(bk)], d.dS[static_cast<size_t>(bk)]));
      }
      if (d.dtau < 0) a = std::min(a, -tau / d.dtau);
      if (d.dkappa < 0) a = std::min(a, -kappa / d.dkappa);
      return a;
    };

    // predictor
    Direction aff = newton(1.0, 0.0, nullptr, 0.0);
    double a_aff = std::min(1.0, cfg.step_fraction * step_bound(aff));
    double mu_aff = 0;
    {
      double xs = 0;
      for (int bk = 0; bk < nb; ++bk)
        xs += (X[static_cast<size_t>(bk)] + a_aff * aff.dX[static_cast<size_t>(bk)])
                  .cwiseProduct(S[static_cast<size_t>(bk)] + a_aff * aff.dS[static_cast<size_t>(bk)])
                  .sum();
      mu_aff = (xs + (tau + a_aff * aff.dtau) * (kappa + a_aff * aff.dkappa)) / (nu + 1);
    }
    double ratio = std::max(mu_aff / mu, 0.0);
    double sigma = std::clamp(ratio * ratio * ratio, 1e-12, 1.0 - 1e-12);

    // corrector terms in scaled space
    Blocks corr;
    corr.reserve(static_cast<size_t>(nb));
    for (int bk = 0; bk < nb; ++bk) {
      const auto& s = nt[static_cast<size_t>(bk)];
      Eigen::MatrixXd dXs = s.Rinv * aff.dX[static_cast<size_t>(bk)] * s.Rinv.transpose();
      Eigen::MatrixXd dSs = s.R.transpose() * aff.dS[static_cast<size_t>(bk)] * s.R;
      Eigen::MatrixXd pr = dXs * dSs;
      corr.push_back(0.5 * (pr + pr.transpose()));
    }
    Direction dir = newton(1.0 - sigma, sigma, &corr, aff.dtau * aff.dkappa);
    double alpha = std::min(1.0, cfg.step_fraction * step_bound(dir));
    if (!(alpha > cfg.min_step) || !std::isfinite(alpha)) {
      sol.status = SdpStatus::kAmbiguous;
      sol.detail = "step length collapsed at iteration " + std::to_string(iter);
      break;
    }

    for (int bk = 0; bk < nb; ++bk) {
      X[static_cast<size_t>(bk)] += alpha * dir.dX[static_cast<size_t>(bk)];
      S[static_cast<size_t>(bk)] += alpha * dir.dS[static_cast<size_t>(bk)];
    }
    y += alpha * dir.dy;
    tau += alpha * dir.dtau;
    kappa += alpha * dir.dkappa;
  }

  if (sol.detail.empty()) sol.detail = "iteration cap reached without a definitive status";
  // report the scaled-back iterate with honest residuals; a stalled iterate
  // inside the contract tolerances still counts as optimal
  finalize_optimal();
  bool contract_ok = sol.primal_residual <= cfg.contract_feas_tol &&
                     sol.dual_residual <= cfg.contract_feas_tol &&
                     sol.duality_gap <= cfg.contract_gap_tol;
  sol.status = contract_ok ? SdpStatus::kOptimal : SdpStatus::kAmbiguous;
  return sol;
}

}  // namespace lasserre
