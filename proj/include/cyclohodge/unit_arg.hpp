#pragma once

#include <compare>
#include <cstdint>

#include "cyclohodge/rational.hpp"

namespace cyclohodge {

/// A root of unity exp(2 pi i t), stored by its argument t in [0, 1).
class UnitArg {
 public:
  UnitArg() = default;
  explicit UnitArg(const Rational& t) : value_(t.frac()) {}

  const Rational& value() const { return value_; }
  /// Multiplicative order of the root of unity.
  std::int64_t order() const { return value_.den(); }
  bool is_one() const { return value_.is_zero(); }

  UnitArg operator-() const { return UnitArg(-value_); }
  friend UnitArg operator+(const UnitArg& a, const UnitArg& b) { return UnitArg(a.value_ + b.value_); }
  friend UnitArg operator-(const UnitArg& a, const UnitArg& b) { return UnitArg(a.value_ - b.value_); }
  /// k-th power of the root of unity.
  friend UnitArg operator*(std::int64_t k, const UnitArg& a) { return UnitArg(Rational(k) * a.value_); }

  friend bool operator==(const UnitArg&, const UnitArg&) = default;
  friend auto operator<=>(const UnitArg& a, const UnitArg& b) { return a.value_ <=> b.value_; }

 private:
  Rational value_;
};

/// x - floor(x).
inline UnitArg frac(const Rational& x) { return UnitArg(x); }

}  // namespace cyclohodge
