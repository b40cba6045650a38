#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "cyclohodge/cyclotomic.hpp"

namespace cyclohodge {

/// 2x2 matrix over a cyclotomic field, row-major.
class Matrix2 {
 public:
  Matrix2() = default;
  Matrix2(CyclotomicNumber a, CyclotomicNumber b, CyclotomicNumber c, CyclotomicNumber d)
      : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Matrix2 identity(std::int64_t conductor);
  static Matrix2 scalar(const CyclotomicNumber& s);
  /// Companion matrix [[0, -c0], [1, -c1]] of t^2 + c1 t + c0.
  static Matrix2 companion(const CyclotomicNumber& c0, const CyclotomicNumber& c1);

  const CyclotomicNumber& operator()(std::size_t r, std::size_t c) const { return e_[2 * r + c]; }
  CyclotomicNumber& operator()(std::size_t r, std::size_t c) { return e_[2 * r + c]; }

  CyclotomicNumber det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  CyclotomicNumber trace() const { return e_[0] + e_[3]; }
  /// Throws InvalidArgument if singular.
  Matrix2 inverse() const;
  /// Conjugate transpose.
  Matrix2 adjoint() const;
  Matrix2 galois(std::int64_t k) const;
  Matrix2 embed(std::int64_t conductor) const;
  bool is_scalar() const;

  std::size_t hash() const;
  std::string str() const;

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
  friend Matrix2 operator+(const Matrix2& x, const Matrix2& y);
  friend Matrix2 operator-(const Matrix2& x, const Matrix2& y);
  friend bool operator==(const Matrix2& x, const Matrix2& y) { return x.e_ == y.e_; }

 private:
  std::array<CyclotomicNumber, 4> e_;
};

struct Matrix2Hash {
  std::size_t operator()(const Matrix2& m) const { return m.hash(); }
};

/// Signature of a Hermitian form: p positive, q negative, nullity zero directions.
struct Signature {
  int p = 0;
  int q = 0;
  int nullity = 0;

  bool definite() const { return nullity == 0 && (p == 0 || q == 0); }
  bool indefinite() const { return p > 0 && q > 0; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A 2x2 Hermitian form H = H^* over a cyclotomic field.
class HermitianForm2 {
 public:
  /// Throws InvalidForm unless m equals its conjugate transpose.
  explicit HermitianForm2(Matrix2 m);

  const Matrix2& matrix() const { return m_; }
  const CyclotomicNumber& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  /// Form under the field automorphism zeta -> zeta^k.
  HermitianForm2 galois(std::int64_t k) const { return HermitianForm2(m_.galois(k)); }
  /// G^* H G.
  HermitianForm2 congruence(const Matrix2& g) const { return HermitianForm2(g.adjoint() * m_ * g); }

 private:
  Matrix2 m_;
};

/// Exact signature via leading principal minors and exact real sign decisions.
Signature hermitian_signature(const HermitianForm2& h);
/// Same, for a raw matrix; throws InvalidForm if it is not Hermitian.
Signature hermitian_signature(const Matrix2& h);

}  // namespace cyclohodge
