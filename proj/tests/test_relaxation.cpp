#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lasserre/relaxation.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace lasserre;
using testing_helpers::two_disks;
using testing_helpers::unit_disk;

TEST_CASE("build_relaxation: unit disk at d = 2") {
  auto rel = build_relaxation(unit_disk(), 2);
  REQUIRE(rel.spec.ell == std::vector<long>{3, 1});
  CHECK(rel.spec.r_floor[0] == Degree(1));
  CHECK(rel.spec.r_floor[1] == Degree(0));
  REQUIRE(rel.spec.y_index.size() == 3);  // y20 y11 y02
  REQUIRE(rel.lmi.blocks.size() == 2);

  // block 0 is the moment pencil [[1, x, y], [x, y20, y11], [y, y11, y02]]
  const LmiBlock& m0 = rel.lmi.blocks[0];
  CHECK(m0.at(0, 0).constant == 1);
  CHECK(m0.at(0, 1).linear == std::vector<std::pair<int, Rational>>{{0, Rational(1)}});
  CHECK(m0.at(0, 2).linear == std::vector<std::pair<int, Rational>>{{1, Rational(1)}});
  // y ids: 2 + index into y_index; y_index sorted = [x^2, xy, y^2]
  CHECK(m0.at(1, 1).linear == std::vector<std::pair<int, Rational>>{{2, Rational(1)}});
  CHECK(m0.at(1, 2).linear == std::vector<std::pair<int, Rational>>{{3, Rational(1)}});
  CHECK(m0.at(2, 2).linear == std::vector<std::pair<int, Rational>>{{4, Rational(1)}});

  // block 1 is the 1x1 pencil [1 - y20 - y02]
  const LmiBlock& m1 = rel.lmi.blocks[1];
  REQUIRE(m1.size == 1);
  CHECK(m1.at(0, 0).constant == 1);
  CHECK(m1.at(0, 0).linear ==
        std::vector<std::pair<int, Rational>>{{2, Rational(-1)}, {4, Rational(-1)}});
}

TEST_CASE("build_relaxation: two disks at d = 4 and empty blocks") {
  auto rel = build_relaxation(two_disks(), 4);
  CHECK(rel.spec.ell == std::vector<long>{6, 1, 3});  // r = (2, 0, 3/2)
  CHECK(rel.spec.r_floor[2] == Degree(1));

  auto rel2 = build_relaxation(two_disks(), 2);  // d < deg g_1
  CHECK(rel2.spec.ell == std::vector<long>{3, 0, 1});
  CHECK(rel2.lmi.omitted_blocks == std::vector<int>{1});

  // pathological g_i = 0
  PolySystem degen = unit_disk();
  degen.constraints.push_back(Polynomial(2));
  auto rel3 = build_relaxation(degen, 2);
  CHECK(rel3.spec.twice_r[2].is_neg_infinity());
  CHECK(rel3.spec.ell[2] == 0);
}

TEST_CASE("lift consistency: blocks at the lift reproduce g_i v_i v_i^T") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> unif(-1.2, 1.2);
  for (const auto& sys : {unit_disk(), two_disks()}) {
    for (int d : {2, 3, 4}) {
      auto rel = build_relaxation(sys, d);
      for (int rep = 0; rep < 10; ++rep) {
        std::vector<double> x{unif(rng), unif(rng)};
        auto joint = rel.lmi.lift(x);
        for (const auto& blk : rel.lmi.blocks) {
          int i = blk.constraint;
          Polynomial g = (i == 0) ? Polynomial::constant(2, 1) : sys.constraints[static_cast<size_t>(i - 1)];
          double gv = g.eval(std::span<const double>(x));
          const auto& basis = rel.spec.bases[static_cast<size_t>(i)];
          Eigen::MatrixXd expect(blk.size, blk.size);
          for (int a = 0; a < blk.size; ++a)
            for (int b = 0; b < blk.size; ++b) {
              double va = Polynomial::monomial(2, basis[static_cast<size_t>(a)], 1).eval(std::span<const double>(x));
              double vb = Polynomial::monomial(2, basis[static_cast<size_t>(b)], 1).eval(std::span<const double>(x));
              expect(a, b) = gv * va * vb;
            }
          CHECK((blk.eval(joint) - expect).cwiseAbs().maxCoeff() <= 1e-9 * (1 + expect.norm()));
        }
      }
    }
  }
}

TEST_CASE("point membership on the unit disk") {
  auto rel = build_relaxation(unit_disk(), 2);
  std::vector<double> origin{0.0, 0.0};
  auto in = point_membership(rel.lmi, origin);
  CHECK(in.verdict == Feasibility::kFeasible);
  CHECK(in.witness_min_eig >= -1e-7);

  std::vector<double> outside{2.0, 0.0};
  auto out = point_membership(rel.lmi, outside);
  CHECK(out.verdict == Feasibility::kInfeasible);
  CHECK(out.t_star < -1e-4);
}

TEST_CASE("two-disks: the tangency-line point is relaxation-feasible though outside S(g)") {
  auto sys = two_disks();
  std::vector<double> pt{-0.05, 1.0};
  CHECK(sys.constraints[0].eval(std::span<const double>(pt)) < 0);  // outside S(g)
  for (int d : {4, 6}) {
    auto rel = build_relaxation(sys, d);
    auto mem = point_membership(rel.lmi, pt);
    CAPTURE(d);
    CHECK(mem.verdict == Feasibility::kFeasible);
  }
}

TEST_CASE("nestedness on sampled points: feasible at d+1 implies feasible at d") {
  auto sys = two_disks();
  auto rel4 = build_relaxation(sys, 4);
  auto rel5 = build_relaxation(sys, 5);
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> ux(-1.5, 6.5), uy(-2.5, 1.5);
  int tested = 0;
  for (int rep = 0; rep < 60 && tested < 8; ++rep) {
    std::vector<double> x{ux(rng), uy(rng)};
    auto m5 = point_membership(rel5.lmi, x);
    if (m5.verdict != Feasibility::kFeasible) continue;
    auto m4 = point_membership(rel4.lmi, x);
    CHECK(m4.verdict == Feasibility::kFeasible);
    ++tested;
  }
  CHECK(tested >= 4);
}

TEST_CASE("module membership: constants and the disk certificate") {
  auto disk = unit_disk();

  // 1 in M_0(g): G_0 = [1]
  auto one = module_membership(disk, Polynomial::constant(2, 1), 0);
  REQUIRE(one.verdict == Feasibility::kFeasible);
  REQUIRE(one.certificate.has_value());
  CHECK(one.certificate->gram[0](0, 0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(one.certificate->residual_linf <= 1e-8);

  // f = 1 - (3x + 4y)/5 at d = 2
  Polynomial f = Polynomial::constant(2, 1) - Polynomial::variable(2, 0).scaled(Rational(3, 5)) -
                 Polynomial::variable(2, 1).scaled(Rational(4, 5));
  auto mem = module_membership(disk, f, 2);
  REQUIRE(mem.verdict == Feasibility::kFeasible);
  CHECK(mem.certificate->residual_linf <= 1e-8 * 2);
  CHECK(mem.certificate->min_gram_eig >= -1e-8);

  // the closed-form identity 2f = (w1 x + w2 y - 1)^2 + (w2 x - w1 y)^2 + g
  Polynomial w1x_w2y = Polynomial::variable(2, 0).scaled(Rational(3, 5)) +
                       Polynomial::variable(2, 1).scaled(Rational(4, 5));
  Polynomial t1 = w1x_w2y - Polynomial::constant(2, 1);
  Polynomial t2 = Polynomial::variable(2, 0).scaled(Rational(4, 5)) -
                  Polynomial::variable(2, 1).scaled(Rational(3, 5));
  CHECK(f.scaled(2) == t1 * t1 + t2 * t2 + disk.constraints[0]);

  // degree precondition
  CHECK_THROWS_AS(module_membership(disk, f * f * f, 2), std::invalid_argument);
}

TEST_CASE("module membership: infeasible with separating functional") {
  // -1 is not in any truncated module of the disk (modules contain only
  // polynomials nonnegative at interior points)
  auto disk = unit_disk();
  auto res = module_membership(disk, Polynomial::constant(2, -1), 2);
  REQUIRE(res.verdict == Feasibility::kInfeasible);
  CHECK(!res.separating_functional.empty());

  // x (changes sign on the disk) is not in M_d for small d
  auto res2 = module_membership(disk, Polynomial::variable(2, 0), 4);
  CHECK(res2.verdict == Feasibility::kInfeasible);
}

TEST_CASE("module membership: g_2 of the two disks is trivially a member") {
  auto sys = two_disks();
  Polynomial g2 = sys.constraints[1];
  for (int d : {2, 4, 6, 8}) {
    auto res = module_membership(sys, g2, d);
    CAPTURE(d);
    CHECK(res.verdict == Feasibility::kFeasible);  // s_2 = 1 works at every d >= 1
  }
}

TEST_CASE("matrix module membership") {
  // identity at k = 2 with no constraints, d = 0
  PolySystem free;
  free.variables = {"x", "y"};
  auto id = matrix_module_membership(free, PolyMatrix::identity(2, 2), 0);
  CHECK(id.verdict == Feasibility::kFeasible);

  // -Hess(1 - x^2 - y^2) = 2I: sos-concavity of the disk constraint
  auto disk = unit_disk();
  PolyMatrix negHess = -hessian(disk.constraints[0]);
  auto conc = matrix_module_membership(free, negHess, 0);
  CHECK(conc.verdict == Feasibility::kFeasible);
  CHECK(conc.certificate->residual_linf <= 1e-7);

  // -Hess(-x^4) = 12 x^2 over one variable, m = 0, needs d = 2
  PolySystem line;
  line.variables = {"x"};
  Polynomial x = Polynomial::variable(1, 0);
  PolyMatrix H(1, 1, 1);
  H.set(0, 0, (x * x).scaled(12));
  auto sq = matrix_module_membership(line, H, 2);
  CHECK(sq.verdict == Feasibility::kFeasible);

  // -2I is not an sos matrix
  PolyMatrix neg = PolyMatrix::identity(2, 2).scaled(Rational(-2));
  auto bad = matrix_module_membership(free, neg, 0);
  CHECK(bad.verdict == Feasibility::kInfeasible);
}

TEST_CASE("path integrals: closed forms") {
  // constant P -> P/2
  PolyMatrix P(2, 2, 2);
  P.set_sym(0, 0, Polynomial::constant(2, 4));
  P.set_sym(0, 1, Polynomial::constant(2, 1));
  P.set_sym(1, 1, Polynomial::constant(2, -2));
  std::vector<Rational> u{Rational(1, 3), Rational(-2)};
  auto H = path_double_integral(P, u);
  CHECK(H.at(0, 0) == Polynomial::constant(2, 2));
  CHECK(H.at(0, 1) == Polynomial::constant(2, Rational(1, 2)));
  CHECK(H.at(1, 1) == Polynomial::constant(2, -1));

  // n = 1, P = [x], u = 0 -> x/6
  PolyMatrix Q(1, 1, 1);
  Q.set(0, 0, Polynomial::variable(1, 0));
  std::vector<Rational> zero{Rational(0)};
  auto HQ = path_double_integral(Q, zero);
  CHECK(HQ.at(0, 0) == Polynomial::variable(1, 0).scaled(Rational(1, 6)));

  // single integral of a constant is the constant
  auto S1 = path_single_integral(P, u);
  CHECK(S1.at(0, 0) == P.at(0, 0));
}

TEST_CASE("path double integral matches 32x32 quadrature on random quadratics") {
  std::mt19937 rng(71);
  std::uniform_real_distribution<double> unif(-1, 1);
  for (int rep = 0; rep < 5; ++rep) {
    PolyMatrix P(2, 2, 2);
    for (int r = 0; r < 2; ++r)
      for (int c = r; c < 2; ++c) P.set_sym(r, c, oracles::random_poly(rng, 2, 2, 4));
    std::vector<Rational> u{make_rational(static_cast<long>(rng() % 7) - 3, 4),
                            make_rational(static_cast<long>(rng() % 7) - 3, 4)};
    auto H = path_double_integral(P, u);

    Eigen::VectorXd uv(2), xv(2);
    uv << to_double(u[0]), to_double(u[1]);
    for (int pt = 0; pt < 5; ++pt) {
      xv << unif(rng), unif(rng);
      Eigen::MatrixXd quad = oracles::quadrature_double_integral(P, uv, xv, 32);
      std::vector<double> x{xv(0), xv(1)};
      Eigen::MatrixXd sym = H.eval(std::span<const double>(x));
      CHECK((sym - quad).cwiseAbs().maxCoeff() <= 1e-10 * (1 + quad.norm()));
    }

    // linearity and transpose commute; value at u is P(u)/2
    auto H2 = path_double_integral(P.scaled(2), u);
    CHECK(H2.at(0, 1) == H.at(0, 1).scaled(2));
    auto Ht = path_double_integral(P.transpose(), u);
    CHECK(Ht.at(1, 0) == H.at(0, 1));
    std::vector<double> ud{to_double(u[0]), to_double(u[1])};
    Eigen::MatrixXd atu = H.eval(std::span<const double>(ud));
    Eigen::MatrixXd pu = P.eval(std::span<const double>(ud));
    CHECK((atu - 0.5 * pu).cwiseAbs().maxCoeff() <= 1e-12 * (1 + pu.norm()));
  }
}

TEST_CASE("bochner stability: integrated members stay members at the same degree") {
  std::mt19937 rng(83);
  auto disk = unit_disk();
  for (int rep = 0; rep < 3; ++rep) {
    // P := V0^T V0 + g * V1^T V1 with random low-degree entries is in
    // M_4^{2x2}(g) by construction
    auto rnd_lin = [&](int) {
      return oracles::random_poly(rng, 2, 1, 3);
    };
    PolyMatrix V0(2, 2, 2), V1(2, 2, 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        V0.set(r, c, rnd_lin(0) + oracles::random_poly(rng, 2, 2, 2));
        V1.set(r, c, rnd_lin(0));
      }
    auto sym_prod = [](const PolyMatrix& V) {
      PolyMatrix out(2, 2, 2);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          Polynomial acc(2);
          for (int t = 0; t < 2; ++t) acc = acc + V.at(t, r) * V.at(t, c);
          out.set(r, c, acc);
        }
      return out;
    };
    PolyMatrix P = sym_prod(V0);
    PolyMatrix GP = sym_prod(V1);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        P.set(r, c, P.at(r, c) + disk.constraints[0] * GP.at(r, c));

    auto direct = matrix_module_membership(disk, P, 4);
    REQUIRE(direct.verdict == Feasibility::kFeasible);

    std::vector<Rational> u{make_rational(1, 4), make_rational(-1, 8)};
    PolyMatrix H = path_double_integral(P, u);
    auto integrated = matrix_module_membership(disk, H, 4);
    CHECK(integrated.verdict == Feasibility::kFeasible);
  }
}

TEST_CASE("optimize_linear on the unit disk relaxation") {
  auto rel = build_relaxation(unit_disk(), 2);
  std::vector<double> down{0.0, 1.0};
  auto r1 = optimize_linear(rel.lmi, down);
  REQUIRE(r1.status == LinearOptimum::Status::kOptimal);
  CHECK(r1.value == doctest::Approx(-1.0).epsilon(1e-6));

  std::vector<double> right{1.0, 0.0};
  auto r2 = optimize_linear(rel.lmi, right);
  REQUIRE(r2.status == LinearOptimum::Status::kOptimal);
  CHECK(r2.value == doctest::Approx(-1.0).epsilon(1e-6));

  std::vector<double> notunit{0.5, 0.0};
  CHECK_THROWS_AS(optimize_linear(rel.lmi, notunit), std::invalid_argument);
}

TEST_CASE("membership sanity: members evaluate nonnegative on S(g)") {
  auto disk = unit_disk();
  Polynomial f = Polynomial::constant(2, 1) - Polynomial::variable(2, 1);  // 1 - y >= 0 on disk
  auto res = module_membership(disk, f, 2);
  REQUIRE(res.verdict == Feasibility::kFeasible);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> unif(-1, 1);
  int n = 0;
  while (n < 100) {
    std::vector<double> x{unif(rng), unif(rng)};
    if (x[0] * x[0] + x[1] * x[1] > 1) continue;
    CHECK(f.eval(std::span<const double>(x)) >= -1e-9);
    ++n;
  }
}

TEST_CASE("certificate report renders") {
  auto disk = unit_disk();
  auto one = module_membership(disk, Polynomial::constant(2, 1), 0);
  REQUIRE(one.certificate.has_value());
  std::string rep = certificate_report(*one.certificate);
  CHECK(rep.find("G[0]") != std::string::npos);
  CHECK(rep.find("residual_linf") != std::string::npos);
}
