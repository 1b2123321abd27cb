#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "lasserre/polynomial.hpp"

namespace lasserre {

/// Vector of polynomials over a common variable space (e.g. a gradient).
struct PolyVector {
  std::vector<Polynomial> entries;

  int size() const { return static_cast<int>(entries.size()); }
  Eigen::VectorXd eval(std::span<const double> x) const;
};

/// Dense matrix of polynomials; symmetric ones hold entry(i,j) == entry(j,i)
/// exactly (asserted by is_symmetric()).
class PolyMatrix {
 public:
  PolyMatrix() : rows_(0), cols_(0), nvars_(0) {}
  PolyMatrix(int rows, int cols, int nvars);

  static PolyMatrix identity(int k, int nvars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return nvars_; }

  const Polynomial& at(int i, int j) const;
  void set(int i, int j, Polynomial p);
  /// Sets both (i,j) and (j,i).
  void set_sym(int i, int j, const Polynomial& p);

  bool is_symmetric() const;
  Degree degree() const;

  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-() const;
  PolyMatrix scaled(const Rational& c) const;
  PolyMatrix transpose() const;

  Eigen::MatrixXd eval(std::span<const double> x) const;
  std::vector<std::vector<Rational>> eval(std::span<const Rational> x) const;

  bool operator==(const PolyMatrix& o) const = default;

 private:
  int rows_, cols_, nvars_;
  std::vector<Polynomial> e_;
};

PolyVector gradient(const Polynomial& p);
PolyMatrix hessian(const Polynomial& p);

/// A finite polynomial inequality system g = (g_1, ..., g_m) with named
/// variables; g_0 := 1 is implicit. Defines S(g) = {x | g_i(x) >= 0}.
struct PolySystem {
  std::vector<std::string> variables;
  std::vector<Polynomial> constraints;

  int nvars() const { return static_cast<int>(variables.size()); }
  int size() const { return static_cast<int>(constraints.size()); }

  void validate() const;  // unique names, matching variable counts

  /// Membership of a point in S(g) within a tolerance.
  bool contains(std::span<const double> x, double tol) const;
  /// min_i g_i(x); +inf for m = 0.
  double slack(std::span<const double> x) const;
};

}  // namespace lasserre
