#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lasserre/degree.hpp"
#include "lasserre/monomial.hpp"
#include "lasserre/rational.hpp"

namespace lasserre {

class UnivariatePoly;

/// Sparse multivariate polynomial over exact rationals.
///
/// Terms are kept sorted in graded-lex order with no zero coefficients, so
/// equality is plain term-list equality and the degree is the last term's
/// total degree. Values are immutable in spirit: every operation returns a
/// fresh polynomial.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit Polynomial(int nvars = 0);

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int j);
  static Polynomial monomial(int nvars, const Monomial& m, const Rational& c);
  /// Normalizes: sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  /// deg 0 = -infinity, otherwise the maximal total degree of a stored term.
  Degree degree() const;

  Rational coeff(const Monomial& m) const;
  Rational constant_term() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& o) const = default;

  Polynomial derivative(int var) const;

  /// Floating evaluation with Neumaier compensated summation.
  double eval(std::span<const double> x) const;
  /// Exact evaluation at a rational point.
  Rational eval(std::span<const Rational> x) const;

  /// Substitutes images[j] for variable j; images live over a common
  /// (possibly different) variable space. Plain composition, exact.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  /// Renders in the grammar accepted by the problem-file parser.
  std::string str(const std::vector<std::string>& names) const;
  std::string str() const;

 private:
  friend Polynomial compose_univariate(const Polynomial& g, const UnivariatePoly& h);
  void normalize();

  int nvars_;
  std::vector<Term> terms_;
};

/// h(g) for univariate h, computed by Horner over the polynomial ring. Runs
/// on an integer core (coefficients with a shared denominator) so that deep
/// compositions do not pay per-operation gcd costs.
Polynomial compose_univariate(const Polynomial& g, const UnivariatePoly& h);

/// All exponent vectors with |alpha| <= bound in graded-lex order; empty for
/// bound < 0 (including the -infinity sentinel). Length C(n + bound, n).
std::vector<Monomial> monomial_basis(int nvars, Degree bound);

/// Number of monomials of degree <= d in n variables.
long basis_size(int nvars, Degree bound);

}  // namespace lasserre
