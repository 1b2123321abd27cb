#include "lasserre/gadgets.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace lasserre {

UnivariatePoly e_taylor(const Rational& c, int d) {
  if (c <= 0) throw std::invalid_argument("e_taylor: c must be positive");
  if (d < 0) throw std::invalid_argument("e_taylor: negative degree");
  std::vector<Rational> coeffs(static_cast<size_t>(d) + 1);
  Rational term(1);
  coeffs[0] = term;
  for (int k = 1; k <= d; ++k) {
    term *= c;
    term /= k;
    coeffs[static_cast<size_t>(k)] = term;
  }
  return UnivariatePoly(std::move(coeffs));
}

UnivariatePoly f_taylor(const Rational& c, int d) {
  if (c <= 0) throw std::invalid_argument("f_taylor: c must be positive");
  if (d < 0) throw std::invalid_argument("f_taylor: negative degree");
  std::vector<Rational> coeffs(static_cast<size_t>(d) + 1);
  Rational term(1);  // c^k / (k+1)!
  coeffs[0] = term;
  for (int k = 1; k <= d; ++k) {
    term *= c;
    term /= (k + 1);
    coeffs[static_cast<size_t>(k)] = (k % 2 == 0) ? term : -term;
  }
  return UnivariatePoly(std::move(coeffs));
}

namespace {

UnivariatePoly reflect(const UnivariatePoly& p) {  // p(-T)
  return p.compose_affine(Rational(-1), Rational(0));
}

// Certified upper bound for max p on [a, b]: big-float sampling for the
// estimate, then an exact Sturm interval check of U - p > 0. Grows U until
// the certificate holds.
Rational certified_max_bound(const UnivariatePoly& p, const Rational& a, const Rational& b) {
  double ad = to_double(a), bd = to_double(b);
  const int kSamples = 512;
  double est = -1e300;
  for (int i = 0; i <= kSamples; ++i) {
    double t = ad + (bd - ad) * i / kSamples;
    est = std::max(est, p.eval_bigfloat(t));
  }
  Rational U = rational_from_double(est);
  Rational bump = abs(U) / 64 + Rational(1, 1000000);
  U += bump;
  for (int tries = 0; tries < 80; ++tries) {
    if (positive_on_interval(UnivariatePoly::constant(U) - p, a, b)) return U;
    bump *= 4;
    U += bump;
  }
  throw std::runtime_error("certified_max_bound: no certificate found");
}

// Certified lower bound for min p on [a, b], analogous.
Rational certified_min_bound(const UnivariatePoly& p, const Rational& a, const Rational& b) {
  return -certified_max_bound(-p, a, b);
}

double log2_abs(const Rational& q) {
  if (q == 0) return -1e9;
  long en, ed;
  double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return (std::log2(std::abs(mn)) + static_cast<double>(en)) -
         (std::log2(std::abs(md)) + static_cast<double>(ed));
}

// Fujiwara-style numeric estimate of a bound on the absolute values of the
// real roots; only used to place the sampling window, never as a certificate.
double root_bound_estimate(const UnivariatePoly& p) {
  int d = p.degree().value();
  double lead = log2_abs(p.leading_coeff());
  double best = 0;
  for (int k = 0; k < d; ++k) {
    if (p.coeff(static_cast<size_t>(k)) == 0) continue;
    double lg = (log2_abs(p.coeff(static_cast<size_t>(k))) - lead) / (d - k);
    best = std::max(best, lg);
  }
  return 2.0 * std::exp2(best);
}

}  // namespace

GuessConditionReport check_guess_conditions(const Rational& c, int d, const Rational& H,
                                            const Rational& delta, const Rational& eps,
                                            const Rational& R) {
  GuessConditionReport rep;
  UnivariatePoly w = reflect(e_taylor(c, d));        // e_{c,d}(-T) = f + T f'
  UnivariatePoly w1 = reflect(e_taylor(c, d - 1));   // e_{c,d-1}(-T)

  // (a): even-degree truncation of exp is positive on the whole line
  rep.cond_a = (d % 2 == 0) && w.leading_coeff() > 0 && count_real_roots(w) == 0;

  // (b): c e_{c,d-1}(-t) > H e_{c,d}(-t) on [-R, R]
  rep.cond_b = positive_on_interval(w1.scaled(c) - w.scaled(H), -R, R);

  // (c): H max{w on [eps,R]} < min{w on [-R,delta]}, via certified bounds
  rep.cond_c_upper = certified_max_bound(w, eps, R);
  rep.cond_c_lower = certified_min_bound(w, -R, delta);
  rep.cond_c = (rep.cond_c_lower > 0) && (H * rep.cond_c_upper < rep.cond_c_lower);
  return rep;
}

GuessSelection select_guess_params(const Rational& H, const Rational& delta, const Rational& eps,
                                   const Rational& R, int d_cap) {
  if (!(H > 0)) throw std::invalid_argument("select_guess_params: H must be positive");
  if (!(0 < delta && delta < eps && eps < R))
    throw std::invalid_argument("select_guess_params: need 0 < delta < eps < R");

  // smallest integer strictly above max{H, log H / (eps - delta)}
  double hd = to_double(H);
  double bound = std::max(hd, std::log(hd) / to_double(eps - delta));
  long ci = static_cast<long>(std::floor(bound)) + 1;
  while (!(Rational(ci) > H)) ++ci;  // exact guard on the rational part
  Rational c(ci);

  char last_cond = 'a';
  int last_d = 0;
  for (int d = 2; d <= d_cap; d *= 2) {
    GuessConditionReport rep = check_guess_conditions(c, d, H, delta, eps, R);
    last_d = d;
    if (!rep.cond_a) {
      last_cond = 'a';
      continue;
    }
    if (!rep.cond_b) {
      last_cond = 'b';
      continue;
    }
    if (!rep.cond_c) {
      last_cond = 'c';
      continue;
    }
    // success: scale so h >= 1 on R with a 10% margin
    UnivariatePoly f = f_taylor(c, d);
    Rational fmin_lower;
    {
      // f > 0 on R (even d) and f = 1 at 0, increasing for t < 0; the global
      // minimum sits at some positive t. Estimate by big-float sampling over
      // a root-bound window, then certify f - m > 0 on R by Sturm.
      double B = std::max(1.0, root_bound_estimate(f.derivative())) * 2;
      const int kSamples = 2048;
      double est = 1.0;
      for (int i = 0; i <= kSamples; ++i)
        est = std::min(est, f.eval_bigfloat(B * i / kSamples));
      Rational m = rational_from_double(std::max(est, 1e-300)) / 2;
      for (int tries = 0;; ++tries) {
        if (m > 0 && f.leading_coeff() > 0 &&
            count_real_roots(f - UnivariatePoly::constant(m)) == 0) {
          fmin_lower = m;
          break;
        }
        if (tries > 200) throw std::runtime_error("select_guess_params: no positive floor for f");
        m /= 4;
      }
    }
    Rational gamma = Rational(11, 10) / fmin_lower;
    GuessSelection sel;
    sel.params = GuessParams{H, delta, eps, R, c, d};
    sel.h = f.scaled(gamma);
    sel.gamma = gamma;
    sel.f_min_lower = fmin_lower;
    sel.report = rep;
    return sel;
  }
  throw GuessCapExceeded(last_cond, last_d,
                         std::string("select_guess_params: degree cap exceeded, condition (") +
                             last_cond + ") still failing at d = " + std::to_string(last_d));
}

namespace {

// roots of a monic polynomial via the balanced companion matrix, with a few
// complex Newton polish steps
std::vector<std::complex<double>> complex_roots(const UnivariatePoly& monic) {
  int d = monic.degree().value();
  // balance the variable: T = s U with s = |a_0|^(1/d) to even out magnitudes
  double a0 = std::abs(to_double(monic.coeffs()[0]));
  double s = (a0 > 0) ? std::pow(a0, 1.0 / d) : 1.0;
  if (!(s > 1e-8 && s < 1e8)) s = std::max(1e-8, std::min(1e8, s));
  std::vector<double> b(static_cast<size_t>(d) + 1);  // monic in U: b_k = a_k / s^(d-k)
  {
    double sp = 1.0;
    for (int k = d; k >= 0; --k) {
      b[static_cast<size_t>(k)] = to_double(monic.coeffs()[static_cast<size_t>(k)]) / sp;
      sp *= s;
    }
    double lead = b[static_cast<size_t>(d)];
    for (auto& v : b) v /= lead;
  }
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -b[static_cast<size_t>(i)];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  std::vector<std::complex<double>> roots(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) roots[static_cast<size_t>(i)] = es.eigenvalues()(i) * s;

  // Newton polish on the original polynomial
  auto horner = [&](std::complex<double> z, std::complex<double>& dp) {
    std::complex<double> p(0, 0);
    dp = {0, 0};
    for (size_t k = monic.coeffs().size(); k-- > 0;) {
      dp = dp * z + p;
      p = p * z + to_double(monic.coeffs()[k]);
    }
    return p;
  };
  for (auto& z : roots) {
    for (int it = 0; it < 6; ++it) {
      std::complex<double> dp;
      std::complex<double> p = horner(z, dp);
      if (std::abs(dp) == 0) break;
      std::complex<double> step = p / dp;
      z -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
    }
  }
  return roots;
}

UnivariatePoly from_doubles(const std::vector<double>& c) {
  std::vector<Rational> r;
  r.reserve(c.size());
  for (double v : c) r.push_back(rational_from_double(v));
  return UnivariatePoly(std::move(r));
}

Rational linf(const UnivariatePoly& p) {
  Rational m(0);
  for (const auto& c : p.coeffs()) m = std::max(m, Rational(abs(c)));
  return m;
}

}  // namespace

SosPair sos_decompose(const UnivariatePoly& p) {
  if (p.is_zero()) return SosPair{UnivariatePoly(), UnivariatePoly(), Rational(1), Rational(0), true};
  if (p.degree() == Degree(0)) {
    Rational c = p.coeffs()[0];
    if (c < 0) throw std::domain_error("sos_decompose: negative constant");
    return SosPair{UnivariatePoly::constant(1), UnivariatePoly(), c, Rational(0), true};
  }
  if (p.degree().value() % 2 != 0 || p.leading_coeff() < 0)
    throw std::domain_error("sos_decompose: input is negative somewhere on R (degree/sign)");

  // p = lc * b^2 * a with a, b monic and a squarefree
  auto factors = squarefree_decomposition(p);
  UnivariatePoly a = UnivariatePoly::constant(1);
  UnivariatePoly b = UnivariatePoly::constant(1);
  for (size_t k = 0; k < factors.size(); ++k) {
    long mult = static_cast<long>(k) + 1;
    if (mult % 2 == 1) a = a * factors[k];
    for (long j = 0; j < mult / 2; ++j) b = b * factors[k];
  }
  Rational lc = p.leading_coeff();

  if (!a.is_zero() && a.degree().value() >= 1 && count_real_roots(a) > 0)
    throw std::domain_error("sos_decompose: input is negative somewhere on R (Sturm)");

  if (a.degree() == Degree(0)) {
    // perfect square times a positive constant: exact path
    UnivariatePoly q;
    SosPair out{b, q, lc, Rational(0), true};
    return out;
  }

  // pair complex-conjugate roots of a: a = A(T) * conj(A)(T), A from the
  // upper-half-plane roots
  auto roots = complex_roots(a);
  std::vector<std::complex<double>> upper;
  for (const auto& z : roots)
    if (z.imag() > 0) upper.push_back(z);
  // a has no real roots, so exactly half the roots land (numerically) above
  // the axis; tolerate tiny imaginary noise by keeping the larger half
  if (static_cast<int>(upper.size()) != a.degree().value() / 2) {
    std::vector<std::complex<double>> sorted(roots);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& x, const auto& y) { return x.imag() > y.imag(); });
    upper.assign(sorted.begin(), sorted.begin() + a.degree().value() / 2);
  }
  std::vector<std::complex<double>> A{1.0};
  for (const auto& z : upper) {
    std::vector<std::complex<double>> next(A.size() + 1, 0.0);
    for (size_t i = 0; i < A.size(); ++i) {
      next[i + 1] += A[i];
      next[i] -= A[i] * z;
    }
    A = std::move(next);
  }
  std::vector<double> re(A.size()), im(A.size());
  for (size_t i = 0; i < A.size(); ++i) {
    re[i] = A[i].real();
    im[i] = A[i].imag();
  }
  UnivariatePoly p1 = from_doubles(re) * b;
  UnivariatePoly q1 = from_doubles(im) * b;
  if (!q1.is_zero() && q1.leading_coeff() < 0) q1 = -q1;

  UnivariatePoly recon = (p1 * p1 + q1 * q1).scaled(lc);
  SosPair out{p1, q1, lc, linf(recon - p), false};
  return out;
}

}  // namespace lasserre
