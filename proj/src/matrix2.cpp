#include "cyclohodge/matrix2.hpp"

#include <numeric>

namespace cyclohodge {

Matrix2 Matrix2::identity(std::int64_t conductor) {
  return scalar(CyclotomicNumber(conductor, Rational(1)));
}

Matrix2 Matrix2::scalar(const CyclotomicNumber& s) {
  const CyclotomicNumber zero(s.conductor());
  return Matrix2(s, zero, zero, s);
}

Matrix2 Matrix2::companion(const CyclotomicNumber& c0, const CyclotomicNumber& c1) {
  const auto n = checked_lcm(c0.conductor(), c1.conductor());
  return Matrix2(CyclotomicNumber(n), -c0.embed(n), CyclotomicNumber(n, Rational(1)), -c1.embed(n));
}

Matrix2 Matrix2::inverse() const {
  const CyclotomicNumber d = det();
  if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "singular matrix");
  const CyclotomicNumber inv = d.inverse();
  return Matrix2(e_[3] * inv, -e_[1] * inv, -e_[2] * inv, e_[0] * inv);
}

Matrix2 Matrix2::adjoint() const { return Matrix2(e_[0].conj(), e_[2].conj(), e_[1].conj(), e_[3].conj()); }

Matrix2 Matrix2::galois(std::int64_t k) const {
  return Matrix2(e_[0].galois(k), e_[1].galois(k), e_[2].galois(k), e_[3].galois(k));
}

Matrix2 Matrix2::embed(std::int64_t conductor) const {
  return Matrix2(e_[0].embed(conductor), e_[1].embed(conductor), e_[2].embed(conductor), e_[3].embed(conductor));
}

bool Matrix2::is_scalar() const { return e_[1].is_zero() && e_[2].is_zero() && e_[0] == e_[3]; }

std::size_t Matrix2::hash() const {
  std::size_t h = 0;
  for (const auto& x : e_) h = h * 1000003ULL ^ x.hash();
  return h;
}

std::string Matrix2::str() const {
  return "[[" + e_[0].str() + ", " + e_[1].str() + "], [" + e_[2].str() + ", " + e_[3].str() + "]]";
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return Matrix2(x.e_[0] * y.e_[0] + x.e_[1] * y.e_[2], x.e_[0] * y.e_[1] + x.e_[1] * y.e_[3],
                 x.e_[2] * y.e_[0] + x.e_[3] * y.e_[2], x.e_[2] * y.e_[1] + x.e_[3] * y.e_[3]);
}

Matrix2 operator+(const Matrix2& x, const Matrix2& y) {
  return Matrix2(x.e_[0] + y.e_[0], x.e_[1] + y.e_[1], x.e_[2] + y.e_[2], x.e_[3] + y.e_[3]);
}

Matrix2 operator-(const Matrix2& x, const Matrix2& y) {
  return Matrix2(x.e_[0] - y.e_[0], x.e_[1] - y.e_[1], x.e_[2] - y.e_[2], x.e_[3] - y.e_[3]);
}

HermitianForm2::HermitianForm2(Matrix2 m) : m_(std::move(m)) {
  if (!(m_.adjoint() == m_)) throw Error(ErrorCode::InvalidForm, "matrix is not Hermitian");
}

Signature hermitian_signature(const HermitianForm2& h) {
  const int a = real_sign(h(0, 0));
  const int det = real_sign(h.matrix().det());
  if (det > 0) return a > 0 ? Signature{2, 0, 0} : Signature{0, 2, 0};
  if (det < 0) return Signature{1, 1, 0};
  // rank <= 1: the nonzero diagonal entry (if any) carries the sign
  const int s = a != 0 ? a : real_sign(h(1, 1));
  if (s > 0) return Signature{1, 0, 1};
  if (s < 0) return Signature{0, 1, 1};
  // a = d = 0 and ad - |b|^2 = 0 forces b = 0
  return Signature{0, 0, 2};
}

Signature hermitian_signature(const Matrix2& h) { return hermitian_signature(HermitianForm2(h)); }

}  // namespace cyclohodge
