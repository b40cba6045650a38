#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "cyclohodge/errors.hpp"

namespace cyclohodge {

namespace detail {

[[noreturn]] void throw_overflow(const char* op);

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow("mul");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow("add");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw_overflow("sub");
  return r;
}

}  // namespace detail

/// Exact rational number p/q, always in lowest terms with q > 0.
///
/// Backed by 64-bit integers; any operation whose exact result does not fit
/// throws Error(ResourceLimit) instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integer
  Rational(std::int64_t n, std::int64_t d);

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  /// Largest integer <= *this.
  std::int64_t floor() const;
  /// this - floor(this), in [0, 1).
  Rational frac() const;
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  std::string str() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational operator-() const {
    Rational r;
    r.num_ = detail::checked_sub(0, num_);
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return Rational(detail::checked_add(a.num_, b.num_));
    return add_slow(a, b, false);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return Rational(detail::checked_sub(a.num_, b.num_));
    return add_slow(a, b, true);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return Rational(detail::checked_mul(a.num_, b.num_));
    return mul_slow(a, b);
  }
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational add_slow(const Rational& a, const Rational& b, bool subtract);
  static Rational mul_slow(const Rational& a, const Rational& b);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// lcm with overflow checking.
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

}  // namespace cyclohodge
