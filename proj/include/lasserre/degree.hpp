#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace lasserre {

/// Degree of a polynomial: an integer or the -infinity sentinel reserved for
/// the zero polynomial. The sentinel compares below every integer.
class Degree {
 public:
  constexpr Degree() : neg_inf_(true), value_(0) {}
  constexpr Degree(int v) : neg_inf_(false), value_(v) {}  // NOLINT(runtime/explicit)

  static constexpr Degree neg_infinity() { return Degree(); }

  constexpr bool is_neg_infinity() const { return neg_inf_; }
  constexpr bool is_finite() const { return !neg_inf_; }

  constexpr int value() const {
    if (neg_inf_) throw std::logic_error("Degree: value() on -infinity");
    return value_;
  }

  /// value() with a fallback for -infinity.
  constexpr int value_or(int fallback) const { return neg_inf_ ? fallback : value_; }

  friend constexpr bool operator==(const Degree& a, const Degree& b) {
    return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.neg_inf_ && b.neg_inf_) return std::strong_ordering::equal;
    if (a.neg_inf_) return std::strong_ordering::less;
    if (b.neg_inf_) return std::strong_ordering::greater;
    return a.value_ <=> b.value_;
  }

  /// deg(p*q) arithmetic: -infinity absorbs.
  friend constexpr Degree operator+(const Degree& a, const Degree& b) {
    if (a.neg_inf_ || b.neg_inf_) return neg_infinity();
    return Degree(a.value_ + b.value_);
  }

  std::string str() const { return neg_inf_ ? "-inf" : std::to_string(value_); }

 private:
  bool neg_inf_;
  int value_;
};

}  // namespace lasserre
