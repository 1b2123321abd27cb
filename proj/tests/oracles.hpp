#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <Eigen/Dense>
#include <random>
#include <vector>

#include "lasserre/poly_matrix.hpp"
#include "lasserre/polynomial.hpp"

namespace oracles {

using lasserre::Monomial;
using lasserre::Polynomial;
using lasserre::Rational;

/// Naive schoolbook product via a coefficient map; independent of the
/// library's merge-based multiplication.
inline Polynomial naive_mul(const Polynomial& a, const Polynomial& b) {
  std::vector<Polynomial::Term> acc;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) acc.emplace_back(ma.times(mb), ca * cb);
  return Polynomial::from_terms(a.nvars(), std::move(acc));
}

/// Central finite-difference gradient at x.
inline Eigen::VectorXd fd_gradient(const Polynomial& p, const Eigen::VectorXd& x, double h) {
  int n = p.nvars();
  Eigen::VectorXd g(n);
  std::vector<double> xp(x.data(), x.data() + n), xm(xp);
  for (int j = 0; j < n; ++j) {
    xp[static_cast<size_t>(j)] += h;
    xm[static_cast<size_t>(j)] -= h;
    g(j) = (p.eval(xp) - p.eval(xm)) / (2 * h);
    xp[static_cast<size_t>(j)] = x(j);
    xm[static_cast<size_t>(j)] = x(j);
  }
  return g;
}

/// Central finite-difference Hessian at x.
inline Eigen::MatrixXd fd_hessian(const Polynomial& p, const Eigen::VectorXd& x, double h) {
  int n = p.nvars();
  Eigen::MatrixXd H(n, n);
  std::vector<double> pt(x.data(), x.data() + n);
  auto at = [&](int i, int j, double si, double sj) {
    pt[static_cast<size_t>(i)] += si * h;
    pt[static_cast<size_t>(j)] += sj * h;
    double v = p.eval(pt);
    pt[static_cast<size_t>(i)] = x(i);
    pt[static_cast<size_t>(j)] = x(j);
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      H(i, j) = (at(i, j, 1, 1) - at(i, j, 1, -1) - at(i, j, -1, 1) + at(i, j, -1, -1)) / (4 * h * h);
  return H;
}

/// Gauss-Legendre nodes/weights on [0, 1].
inline void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(static_cast<size_t>(n));
  weights.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Newton from Chebyshev-like initial guess on [-1, 1]
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1);
    nodes[static_cast<size_t>(i)] = 0.5 * (x + 1);
    weights[static_cast<size_t>(i)] = 1.0 / ((1 - x * x) * dp * dp);
  }
}

/// 2-D iterated quadrature of int_0^1 int_0^t F(u + s(x-u)) ds dt entrywise,
/// with an nq x nq Gauss-Legendre rule.
inline Eigen::MatrixXd quadrature_double_integral(const lasserre::PolyMatrix& P,
                                                  const Eigen::VectorXd& u,
                                                  const Eigen::VectorXd& x, int nq) {
  std::vector<double> nodes, weights;
  gauss_legendre_01(nq, nodes, weights);
  int k = P.rows();
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(k, k);
  std::vector<double> pt(static_cast<size_t>(u.size()));
  for (int it = 0; it < nq; ++it) {
    double t = nodes[static_cast<size_t>(it)];
    Eigen::MatrixXd inner = Eigen::MatrixXd::Zero(k, k);
    for (int is = 0; is < nq; ++is) {
      double s = t * nodes[static_cast<size_t>(is)];  // map [0,1] -> [0,t]
      for (long j = 0; j < u.size(); ++j) pt[static_cast<size_t>(j)] = u(j) + s * (x(j) - u(j));
      inner += weights[static_cast<size_t>(is)] * P.eval(pt);
    }
    acc += weights[static_cast<size_t>(it)] * t * inner;
  }
  return acc;
}

/// Random sparse polynomial with small rational coefficients.
inline Polynomial random_poly(std::mt19937& rng, int nvars, int maxdeg, int nterms) {
  std::uniform_int_distribution<int> coef(-6, 6), den(1, 4), expo(0, maxdeg);
  std::vector<Polynomial::Term> terms;
  for (int t = 0; t < nterms; ++t) {
    Monomial m(nvars);
    int budget = maxdeg;
    for (int j = 0; j < nvars; ++j) {
      int e = expo(rng) % (budget + 1);
      m.set(j, e);
      budget -= e;
    }
    int c = coef(rng);
    if (c == 0) c = 1;
    terms.emplace_back(m, lasserre::make_rational(c, den(rng)));
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

}  // namespace oracles
