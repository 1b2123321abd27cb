#include "lasserre/poly_matrix.hpp"

#include <limits>
#include <set>
#include <stdexcept>

namespace lasserre {

Eigen::VectorXd PolyVector::eval(std::span<const double> x) const {
  Eigen::VectorXd v(entries.size());
  for (size_t i = 0; i < entries.size(); ++i) v(static_cast<long>(i)) = entries[i].eval(x);
  return v;
}

PolyMatrix::PolyMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars),
      e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Polynomial(nvars)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("PolyMatrix: negative shape");
}

PolyMatrix PolyMatrix::identity(int k, int nvars) {
  PolyMatrix m(k, k, nvars);
  for (int i = 0; i < k; ++i) m.set(i, i, Polynomial::constant(nvars, 1));
  return m;
}

const Polynomial& PolyMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("PolyMatrix::at");
  return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

void PolyMatrix::set(int i, int j, Polynomial p) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("PolyMatrix::set");
  if (p.nvars() != nvars_) throw std::invalid_argument("PolyMatrix::set: nvars mismatch");
  e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)] = std::move(p);
}

void PolyMatrix::set_sym(int i, int j, const Polynomial& p) {
  set(i, j, p);
  if (i != j) set(j, i, p);
}

bool PolyMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (!(at(i, j) == at(j, i))) return false;
  return true;
}

Degree PolyMatrix::degree() const {
  Degree d = Degree::neg_infinity();
  for (const auto& p : e_) d = std::max(d, p.degree());
  return d;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("PolyMatrix +: shape");
  PolyMatrix r(rows_, cols_, nvars_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r(rows_, cols_, nvars_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
  return r;
}

PolyMatrix PolyMatrix::scaled(const Rational& c) const {
  PolyMatrix r(rows_, cols_, nvars_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].scaled(c);
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(cols_, rows_, nvars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

Eigen::MatrixXd PolyMatrix::eval(std::span<const double> x) const {
  Eigen::MatrixXd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = at(i, j).eval(x);
  return m;
}

std::vector<std::vector<Rational>> PolyMatrix::eval(std::span<const Rational> x) const {
  std::vector<std::vector<Rational>> m(static_cast<size_t>(rows_),
                                       std::vector<Rational>(static_cast<size_t>(cols_)));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = at(i, j).eval(x);
  return m;
}

PolyVector gradient(const Polynomial& p) {
  PolyVector g;
  g.entries.reserve(static_cast<size_t>(p.nvars()));
  for (int j = 0; j < p.nvars(); ++j) g.entries.push_back(p.derivative(j));
  return g;
}

PolyMatrix hessian(const Polynomial& p) {
  int n = p.nvars();
  PolyMatrix h(n, n, n);
  for (int i = 0; i < n; ++i) {
    Polynomial di = p.derivative(i);
    for (int j = i; j < n; ++j) h.set_sym(i, j, di.derivative(j));
  }
  return h;
}

void PolySystem::validate() const {
  std::set<std::string> seen(variables.begin(), variables.end());
  if (seen.size() != variables.size())
    throw std::invalid_argument("PolySystem: duplicate variable names");
  for (const auto& g : constraints)
    if (g.nvars() != nvars())
      throw std::invalid_argument("PolySystem: constraint over wrong variable count");
}

bool PolySystem::contains(std::span<const double> x, double tol) const {
  for (const auto& g : constraints)
    if (g.eval(x) < -tol) return false;
  return true;
}

double PolySystem::slack(std::span<const double> x) const {
  double s = std::numeric_limits<double>::infinity();
  for (const auto& g : constraints) s = std::min(s, g.eval(x));
  return s;
}

}  // namespace lasserre
