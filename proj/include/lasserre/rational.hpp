#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lasserre {

/// Exact rational scalar. All symbolic computation in this library runs over
/// Q; conversion to double happens only at SDP and evaluation boundaries.
using Rational = mpq_class;
using Integer = mpz_class;

inline double to_double(const Rational& q) { return q.get_d(); }

/// mpq_class(num, den) does not reduce; this does.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

inline Integer integer_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double x);

/// Parses "p/q", an integer, or a decimal like "0.05" (-> 1/20). Decimals are
/// mapped to exact powers-of-ten fractions.
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& q);

/// floor(num/den) for den > 0, correct for negative numerators.
inline long floor_div(long num, long den) {
  long q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

inline long floor_rational(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!fl.fits_slong_p()) throw std::overflow_error("floor_rational: out of range");
  return fl.get_si();
}

}  // namespace lasserre
