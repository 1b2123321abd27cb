#pragma once

#include <stdexcept>
#include <string>

#include "lasserre/univariate.hpp"

namespace lasserre {

/// Truncated Taylor expansion of exp(c t): sum_{k<=d} c^k T^k / k!.
UnivariatePoly e_taylor(const Rational& c, int d);

/// f_{c,d} = (1 - e_{c,d+1}(-T)) / (cT) = sum_{k<=d} c^k (-T)^k / (k+1)!.
UnivariatePoly f_taylor(const Rational& c, int d);

/// Parameters controlling the auxiliary univariate polynomial h: with
/// h := gamma * f_{c,d}, h - 1 is sos and
///   (a) h(t) + t h'(t) > 0 on R,
///   (b) 2 h'(t) + t h''(t) < -H (h(t) + t h'(t)) on [-R, R],
///   (c) H max{h+th' on [eps,R]} < min{h+th' on [-R,delta]}.
struct GuessParams {
  Rational H;
  Rational delta;
  Rational eps;
  Rational R;
  Rational c;  // integral, > max{H, log H / (eps - delta)}
  int d;       // even
};

struct GuessConditionReport {
  bool cond_a = false;
  bool cond_b = false;
  bool cond_c = false;
  Rational cond_c_upper;  // certified upper bound of e_{c,d}(-t) on [eps, R]
  Rational cond_c_lower;  // certified lower bound of e_{c,d}(-t) on [-R, delta]
};

struct GuessSelection {
  GuessParams params;
  UnivariatePoly h;       // gamma * f_{c,d}
  Rational gamma;         // 11/10 / (certified lower bound of min f_{c,d} on R)
  Rational f_min_lower;   // that certified lower bound
  GuessConditionReport report;
};

/// Thrown when the even-degree doubling search hits the cap; carries the
/// condition that failed at the largest degree tried.
class GuessCapExceeded : public std::runtime_error {
 public:
  GuessCapExceeded(char condition, int last_d, std::string msg)
      : std::runtime_error(std::move(msg)), condition_(condition), last_d_(last_d) {}
  char condition() const { return condition_; }
  int last_degree() const { return last_d_; }

 private:
  char condition_;
  int last_d_;
};

/// Verifies conditions (a)-(c) for h := f_{c,d} by exact Sturm/interval
/// computations (stated over e_{c,d} via the calculus identities).
GuessConditionReport check_guess_conditions(const Rational& c, int d, const Rational& H,
                                            const Rational& delta, const Rational& eps,
                                            const Rational& R);

/// Selects c as the smallest integer > max{H, log H/(eps-delta)} and searches
/// even d = 2, 4, 8, ... up to d_cap until (a)-(c) all verify, then scales
/// h = gamma f_{c,d} so that h >= 1 on R with a 10% margin.
GuessSelection select_guess_params(const Rational& H, const Rational& delta, const Rational& eps,
                                   const Rational& R, int d_cap = 256);

/// Witness for a univariate sos decomposition: scale * (p^2 + q^2).
struct SosPair {
  UnivariatePoly p;
  UnivariatePoly q;
  Rational scale;
  Rational residual_linf;  // max |coeff| of scale*(p^2+q^2) - input, exact
  bool exact;              // true when the input was a perfect square times a constant
};

/// Decomposes a polynomial nonnegative on R as scale*(p^2 + q^2), pairing
/// complex-conjugate roots. Exact when the strictly positive squarefree part
/// is trivial; otherwise float root finding with Newton polish, residual
/// computed exactly afterwards. Throws std::domain_error if the input is
/// negative somewhere on R (decided by Sturm).
SosPair sos_decompose(const UnivariatePoly& p);

}  // namespace lasserre
