#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclohodge/rational.hpp"
#include "cyclohodge/unit_arg.hpp"

namespace cyclohodge {

/// The cyclotomic field Q(zeta_N), zeta_N = exp(2 pi i / N), with the power
/// basis 1, zeta, ..., zeta^(phi(N)-1).
///
/// Fields are interned: `get(N)` always returns the same object. The field is
/// keyed by N as given, so Q(zeta_14) and Q(zeta_7) are distinct objects with
/// distinct bases; mixed arithmetic goes through embed().
class CyclotomicField {
 public:
  static const CyclotomicField& get(std::int64_t conductor);

  /// Conductors above this bound raise ConductorOverflow. Default 840.
  static std::int64_t max_conductor();
  static void set_max_conductor(std::int64_t bound);

  std::int64_t conductor() const { return conductor_; }
  std::size_t degree() const { return degree_; }
  /// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  /// zeta^k reduced to the power basis (k taken mod N).
  const std::vector<std::int64_t>& power(std::int64_t k) const;

 private:
  explicit CyclotomicField(std::int64_t conductor);

  std::int64_t conductor_;
  std::size_t degree_;
  std::vector<std::int64_t> modulus_;
  std::vector<std::vector<std::int64_t>> powers_;
};

/// Euler's totient.
std::int64_t euler_phi(std::int64_t n);
/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);

/// Exact element of Q(zeta_N).
///
/// Equality is coefficientwise in the reduced power basis, which is exact
/// equality of field elements. Binary operations on elements of different
/// fields first embed both operands into the compositum.
class CyclotomicNumber {
 public:
  /// Zero of Q.
  CyclotomicNumber();
  /// Zero of Q(zeta_N).
  explicit CyclotomicNumber(std::int64_t conductor);
  CyclotomicNumber(std::int64_t conductor, const Rational& value);
  CyclotomicNumber(std::int64_t conductor, std::vector<Rational> coeffs);

  /// zeta_N^k.
  static CyclotomicNumber zeta(std::int64_t conductor, std::int64_t k = 1);
  /// exp(2 pi i t) inside Q(zeta_N); N must be a multiple of t's order.
  static CyclotomicNumber root_of_unity(const UnitArg& t, std::int64_t conductor);
  static CyclotomicNumber root_of_unity(const UnitArg& t) { return root_of_unity(t, t.order()); }

  const CyclotomicField& field() const { return *field_; }
  std::int64_t conductor() const { return field_->conductor(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Only meaningful if is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  /// Same element viewed in Q(zeta_M); M must be a multiple of the conductor.
  CyclotomicNumber embed(std::int64_t conductor) const;
  /// Field automorphism zeta -> zeta^k, gcd(k, N) = 1.
  CyclotomicNumber galois(std::int64_t k) const;
  /// Complex conjugation (zeta -> zeta^-1).
  CyclotomicNumber conj() const { return galois(-1); }
  bool is_real() const { return *this == conj(); }
  CyclotomicNumber inverse() const;
  /// Field norm down to Q.
  Rational norm() const;

  /// Image under the embedding zeta -> exp(2 pi i k / N).
  std::complex<double> to_complex(std::int64_t k = 1) const;

  std::string str() const;
  std::size_t hash() const;

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const Rational& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a * b.inverse();
  }
  CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

 private:
  const CyclotomicField* field_;
  std::vector<Rational> coeffs_;
};

/// Exact product in the compositum field.
inline CyclotomicNumber cyclo_mul(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b; }

/// Sign (-1, 0, +1) of a real element of a cyclotomic field under the
/// embedding zeta -> exp(2 pi i / N).
///
/// Zero is decided exactly from the reduced coordinates. A nonzero element is
/// evaluated in ball arithmetic at increasing MPFR precision until the ball
/// excludes zero. Throws InvalidForm if x is not real.
int real_sign(const CyclotomicNumber& x);

}  // namespace cyclohodge
