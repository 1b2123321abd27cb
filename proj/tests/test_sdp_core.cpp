#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <random>
#include <sstream>

#include "lasserre/sdp.hpp"
#include "lasserre/sdpa_io.hpp"
#include "sdp_fixtures.hpp"

using namespace lasserre;

TEST_CASE("analytic fixture suite") {
  for (const auto& fx : sdp_fixtures::analytic_suite()) {
    CAPTURE(fx.name);
    SdpSolution sol = solve(fx.problem);
    CHECK(sol.status == SdpStatus::kOptimal);
    CHECK(std::abs(sol.primal_objective - fx.optimum) <= 1e-6 * (1 + std::abs(fx.optimum)));
    CHECK(sol.primal_residual <= 1e-7);
    CHECK(sol.dual_residual <= 1e-7);
    // weak duality on the returned iterates (min sense)
    CHECK(sol.primal_objective >= sol.dual_objective - 1e-9 * (1 + std::abs(sol.primal_objective)));
    // returned primal blocks are psd within tolerance
    for (const auto& Xb : sol.X) {
      if (Xb.rows() == 0) continue;
      auto rep = psd_check(Xb, 1e-7 * std::max(1.0, Xb.norm()));
      CHECK(rep.classification != PsdClass::kNotPsd);
    }
  }
}

TEST_CASE("primal infeasibility certificates") {
  {  // x = -1 with x >= 0
    SdpProblem p = SdpProblem::zeros({1}, 1);
    p.add_entry(0, 0, 0, 0, 1.0);
    p.rhs[0] = -1.0;
    SdpSolution sol = solve(p);
    REQUIRE(sol.status == SdpStatus::kPrimalInfeasible);
    // certificate: b^T y = 1 and mat(A^T y) negative semidefinite
    CHECK(std::abs(sol.y(0) * p.rhs[0] - 1.0) <= 1e-6);
    CHECK(sol.y(0) <= 0);
  }
  {  // X11 = 1, X22 = 1, 2 X12 = 6: |X12| <= 1 required
    SdpProblem p = SdpProblem::zeros({2}, 3);
    p.add_entry(0, 0, 0, 0, 1.0);
    p.rhs[0] = 1.0;
    p.add_entry(1, 0, 1, 1, 1.0);
    p.rhs[1] = 1.0;
    p.add_entry(2, 0, 0, 1, 1.0);
    p.rhs[2] = 6.0;
    SdpSolution sol = solve(p);
    REQUIRE(sol.status == SdpStatus::kPrimalInfeasible);
    // verify the Farkas ray from scratch
    Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(2, 2);
    Z(0, 0) = sol.y(0);
    Z(1, 1) = sol.y(1);
    Z(0, 1) = Z(1, 0) = sol.y(2);
    double by = sol.y(0) + sol.y(1) + 6 * sol.y(2);
    CHECK(by > 0);
    auto rep = psd_check(Eigen::MatrixXd(-Z), 1e-6 * (1 + Z.norm()));
    CHECK(rep.classification != PsdClass::kNotPsd);
  }
}

TEST_CASE("dual infeasibility certificate (unbounded primal)") {
  // min -X22 s.t. X11 = 1: unbounded below, ray X = diag(0, 1)
  SdpProblem p = SdpProblem::zeros({2}, 1);
  p.add_entry(-1, 0, 1, 1, -1.0);
  p.add_entry(0, 0, 0, 0, 1.0);
  p.rhs[0] = 1.0;
  SdpSolution sol = solve(p);
  REQUIRE(sol.status == SdpStatus::kDualInfeasible);
  // ray: psd, A(ray) ~ 0, <C, ray> = -1
  auto rep = psd_check(sol.X[0], 1e-7 * (1 + sol.X[0].norm()));
  CHECK(rep.classification != PsdClass::kNotPsd);
  CHECK(std::abs(sol.X[0](0, 0)) <= 1e-6);
  CHECK(-sol.X[0](1, 1) == doctest::Approx(-1.0).epsilon(1e-5));
}

TEST_CASE("determinism: bitwise-identical reruns") {
  auto fx = sdp_fixtures::analytic_suite()[4];  // lovasz theta
  SdpSolution a = solve(fx.problem);
  SdpSolution b = solve(fx.problem);
  REQUIRE(a.X[0].rows() == b.X[0].rows());
  CHECK(std::memcmp(a.X[0].data(), b.X[0].data(),
                    sizeof(double) * static_cast<size_t>(a.X[0].size())) == 0);
  CHECK(std::memcmp(a.y.data(), b.y.data(), sizeof(double) * static_cast<size_t>(a.y.size())) == 0);
  CHECK(a.primal_objective == b.primal_objective);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("psd_check") {
  Eigen::MatrixXd I3 = Eigen::MatrixXd::Identity(3, 3);
  auto r1 = psd_check(I3, 1e-9);
  CHECK(r1.classification == PsdClass::kPositiveDefinite);
  CHECK(r1.min_eigenvalue == doctest::Approx(1.0));

  Eigen::MatrixXd D(2, 2);
  D << 14, 0, 0, -10;
  auto r2 = psd_check(D, 1e-9);
  CHECK(r2.classification == PsdClass::kNotPsd);
  CHECK(r2.min_eigenvalue == doctest::Approx(-10.0));

  auto r3 = psd_check(Eigen::MatrixXd::Zero(4, 4), 1e-9);
  CHECK(r3.classification == PsdClass::kPositiveSemidefinite);
  CHECK(r3.min_eigenvalue == doctest::Approx(0.0));

  Eigen::MatrixXd ns(2, 2);
  ns << 1, 2, 3, 4;
  CHECK_THROWS_AS(psd_check(ns, 1e-9), std::invalid_argument);
}

TEST_CASE("psd_check agrees with a pivoted-cholesky oracle") {
  std::mt19937 rng(97);
  std::normal_distribution<double> gauss(0, 1);
  int done = 0;
  while (done < 200) {
    int n = 1 + static_cast<int>(rng() % 20);
    Eigen::MatrixXd B(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) B(i, j) = gauss(rng);
    Eigen::MatrixXd A;
    bool want_psd = (done % 2 == 0);
    if (want_psd) {
      A = B.transpose() * B;
    } else {
      A = B.transpose() * B;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
      A -= (es.eigenvalues().minCoeff() + 0.5 * (1 + A.norm())) * Eigen::MatrixXd::Identity(n, n);
    }
    double tol = 1e-9 * (1 + A.norm());
    auto mine = psd_check(A, tol);
    // oracle: pivoted LDLT
    Eigen::LDLT<Eigen::MatrixXd> ldlt(A);
    bool oracle_psd = (ldlt.info() == Eigen::Success) && ldlt.isPositive();
    if (want_psd) {
      CHECK(mine.classification != PsdClass::kNotPsd);
      CHECK(oracle_psd);
    } else {
      CHECK(mine.classification == PsdClass::kNotPsd);
      CHECK_FALSE(oracle_psd);
    }
    ++done;
  }
}

TEST_CASE("sdpa round trip") {
  std::mt19937 rng(131);
  std::normal_distribution<double> gauss(0, 3);
  for (int rep = 0; rep < 8; ++rep) {
    SdpProblem p = SdpProblem::zeros({2, 3, 1}, 4);
    for (int j = -1; j < 4; ++j)
      for (int bk = 0; bk < 3; ++bk) {
        int n = p.block_sizes[static_cast<size_t>(bk)];
        for (int r = 0; r < n; ++r)
          for (int c = r; c < n; ++c)
            if (rng() % 3 == 0) p.add_entry(j, bk, r, c, gauss(rng));
      }
    for (int j = 0; j < 4; ++j) p.rhs[static_cast<size_t>(j)] = gauss(rng);

    std::stringstream ss;
    write_sdpa(p, ss);
    SdpProblem q = read_sdpa(ss);
    REQUIRE(q.block_sizes == p.block_sizes);
    REQUIRE(q.rhs.size() == p.rhs.size());
    for (size_t j = 0; j < p.rhs.size(); ++j) CHECK(q.rhs[j] == p.rhs[j]);  // bit-exact
    for (int bk = 0; bk < 3; ++bk)
      CHECK(q.objective[static_cast<size_t>(bk)] == p.objective[static_cast<size_t>(bk)]);
    for (size_t j = 0; j < p.constraints.size(); ++j)
      for (int bk = 0; bk < 3; ++bk)
        CHECK(q.constraints[j][static_cast<size_t>(bk)] == p.constraints[j][static_cast<size_t>(bk)]);
  }
}

TEST_CASE("sdpa golden fixture") {
  // 1-constraint 1-block toy: min x s.t. 2x = 5
  SdpProblem p = SdpProblem::zeros({1}, 1);
  p.add_entry(-1, 0, 0, 0, 1.0);
  p.add_entry(0, 0, 0, 0, 2.0);
  p.rhs[0] = 5.0;
  std::stringstream ss;
  write_sdpa(p, ss);
  CHECK(ss.str() ==
        "1\n"
        "1\n"
        "1\n"
        "5.0000000000000000e+00\n"
        "0 1 1 1 1.0000000000000000e+00\n"
        "1 1 1 1 2.0000000000000000e+00\n");
}

TEST_CASE("sdpa diagonal block convention") {
  SdpProblem p = SdpProblem::zeros({3}, 1);
  p.add_entry(-1, 0, 0, 0, 1.0);
  p.add_entry(-1, 0, 2, 2, -2.0);
  p.add_entry(0, 0, 1, 1, 4.0);
  p.rhs[0] = 1.0;
  std::stringstream ss;
  write_sdpa(p, ss);
  CHECK(ss.str().find("\n-3\n") != std::string::npos);  // diagonal block marked negative
  SdpProblem q = read_sdpa(ss);
  CHECK(q.block_sizes == std::vector<int>{3});
  CHECK(q.objective[0] == p.objective[0]);
}

TEST_CASE("sdpa parse errors carry position and token") {
  std::stringstream bad("2\nnotanumber\n1\n1.0\n");
  try {
    read_sdpa(bad);
    FAIL("expected parse error");
  } catch (const SdpaParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.token() == "notanumber");
    CHECK(std::string(e.what()).find("notanumber") != std::string::npos);
  }

  std::stringstream bad2("1\n1\n2\n1.0\n1 1 2 1 3.0\n");  // lower-triangle index
  CHECK_THROWS_AS(read_sdpa(bad2), SdpaParseError);
}
