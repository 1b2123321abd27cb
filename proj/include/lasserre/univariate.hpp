#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lasserre/degree.hpp"
#include "lasserre/rational.hpp"

namespace lasserre {

/// Dense univariate polynomial over exact rationals, coefficients ascending.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Rational> coeffs);

  static UnivariatePoly zero() { return UnivariatePoly(); }
  static UnivariatePoly constant(const Rational& c);
  static UnivariatePoly variable();  // T

  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  bool is_zero() const { return c_.empty(); }
  Degree degree() const;
  Rational leading_coeff() const;

  UnivariatePoly operator-() const;
  UnivariatePoly operator+(const UnivariatePoly& o) const;
  UnivariatePoly operator-(const UnivariatePoly& o) const;
  UnivariatePoly operator*(const UnivariatePoly& o) const;
  UnivariatePoly scaled(const Rational& s) const;
  bool operator==(const UnivariatePoly& o) const = default;

  UnivariatePoly derivative() const;

  Rational eval(const Rational& t) const;
  double eval(double t) const;
  /// Horner in GMP floats at the given precision; rescues evaluations whose
  /// alternating terms cancel catastrophically in double.
  double eval_bigfloat(double t, int prec_bits = 512) const;

  /// T -> a*T + b.
  UnivariatePoly compose_affine(const Rational& a, const Rational& b) const;

  std::string str(const std::string& var = "T") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Sturm chain of a nonzero polynomial, held as primitive integer polynomials
/// (content-reduced after every remainder step; positive contents preserve
/// signs, so variation counts are unchanged).
class SturmChain {
 public:
  explicit SturmChain(const UnivariatePoly& p);

  /// Distinct real roots in (a, b]. Requires a <= b.
  int count_roots(const Rational& a, const Rational& b) const;
  /// Distinct real roots on the whole line.
  int count_roots() const;

  int variations_at(const Rational& t) const;
  int variations_at_neg_infinity() const;
  int variations_at_pos_infinity() const;

 private:
  std::vector<std::vector<Integer>> chain_;  // ascending integer coefficients
};

/// Exact count of distinct real roots, whole line or interval (a, b].
int count_real_roots(const UnivariatePoly& p);
int count_real_roots(const UnivariatePoly& p, const Rational& a, const Rational& b);

/// Decides p > 0 on [a, b] exactly: positive at both endpoints and no root in
/// the open interval.
bool positive_on_interval(const UnivariatePoly& p, const Rational& a, const Rational& b);

/// A Cauchy-type bound B with all real roots of p in [-B, B].
Rational root_bound(const UnivariatePoly& p);

/// Quotient and remainder over Q: a = q*b + r, deg r < deg b.
std::pair<UnivariatePoly, UnivariatePoly> poly_divmod(const UnivariatePoly& a,
                                                      const UnivariatePoly& b);

/// Monic gcd over Q (gcd(0, 0) = 0).
UnivariatePoly poly_gcd(const UnivariatePoly& a, const UnivariatePoly& b);

/// Yun squarefree decomposition: returns factors P_1, P_2, ... (monic,
/// squarefree, pairwise coprime) with p = lc * prod P_k^k.
std::vector<UnivariatePoly> squarefree_decomposition(const UnivariatePoly& p);

/// Disjoint isolating intervals (each containing exactly one distinct real
/// root of p) covering all real roots in [a, b], by Sturm bisection.
std::vector<std::pair<Rational, Rational>> isolate_roots(const UnivariatePoly& p,
                                                         const Rational& a, const Rational& b);

/// Shrinks an isolating interval below the given width by bisection.
std::pair<Rational, Rational> refine_root(const SturmChain& chain, Rational lo, Rational hi,
                                          const Rational& width);

/// Certified rational bounds L <= min p on [a,b], U >= max p on [a,b], via
/// root isolation of p' plus a derivative-based remainder bound on each
/// isolating interval. `slack` controls how tight the bounds are pushed.
struct RangeBounds {
  Rational lower;
  Rational upper;
};
RangeBounds bound_range(const UnivariatePoly& p, const Rational& a, const Rational& b,
                        const Rational& slack);

}  // namespace lasserre
