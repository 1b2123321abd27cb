#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lasserre {

/// A monomial exponent vector over a fixed number of variables.
/// Stored inline; comparison is graded lexicographic (total degree first,
/// then lexicographic with the first variable most significant), which is the
/// fixed term order used everywhere in this library.
class Monomial {
 public:
  static constexpr int kMaxVars = 8;

  Monomial() : n_(0), total_(0) { exp_.fill(0); }

  explicit Monomial(int nvars) : n_(static_cast<uint8_t>(nvars)), total_(0) {
    check_nvars(nvars);
    exp_.fill(0);
  }

  Monomial(int nvars, const std::vector<int>& exps) : Monomial(nvars) {
    if (static_cast<int>(exps.size()) != nvars)
      throw std::invalid_argument("Monomial: exponent count mismatch");
    for (int i = 0; i < nvars; ++i) set(i, exps[i]);
  }

  static Monomial variable(int nvars, int j, int power = 1) {
    Monomial m(nvars);
    m.set(j, power);
    return m;
  }

  int nvars() const { return n_; }
  int degree() const { return total_; }

  int operator[](int j) const { return exp_[static_cast<size_t>(j)]; }

  void set(int j, int e) {
    if (j < 0 || j >= n_) throw std::out_of_range("Monomial: variable index");
    if (e < 0 || e > 0xffff) throw std::invalid_argument("Monomial: exponent out of range");
    total_ = static_cast<uint32_t>(total_ - exp_[static_cast<size_t>(j)] + e);
    exp_[static_cast<size_t>(j)] = static_cast<uint16_t>(e);
  }

  std::vector<int> exponents() const {
    std::vector<int> v(n_);
    for (int i = 0; i < n_; ++i) v[static_cast<size_t>(i)] = exp_[static_cast<size_t>(i)];
    return v;
  }

  Monomial times(const Monomial& o) const {
    Monomial r(*this);
    for (int i = 0; i < n_; ++i) {
      uint32_t e = static_cast<uint32_t>(exp_[static_cast<size_t>(i)]) + o.exp_[static_cast<size_t>(i)];
      if (e > 0xffff) throw std::overflow_error("Monomial: exponent overflow");
      r.exp_[static_cast<size_t>(i)] = static_cast<uint16_t>(e);
    }
    r.total_ = total_ + o.total_;
    return r;
  }

  bool is_constant() const { return total_ == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.total_ == b.total_ && a.exp_ == b.exp_;
  }

  // Graded lex: lower total degree first; within a grade, a larger exponent
  // on an earlier variable sorts earlier, so a degree-1 basis reads 1, x, y.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.total_ <=> b.total_; c != 0) return c;
    for (int i = 0; i < a.n_; ++i) {
      if (auto c = b.exp_[static_cast<size_t>(i)] <=> a.exp_[static_cast<size_t>(i)]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  static void check_nvars(int n) {
    if (n < 0 || n > kMaxVars) throw std::invalid_argument("Monomial: variable count out of range");
  }

  std::array<uint16_t, kMaxVars> exp_;
  uint8_t n_;
  uint32_t total_;
};

}  // namespace lasserre
