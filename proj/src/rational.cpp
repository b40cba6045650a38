#include "cyclohodge/rational.hpp"

#include <charconv>

namespace cyclohodge {

namespace detail {

void throw_overflow(const char* op) {
  throw Error(ErrorCode::ResourceLimit, std::string("64-bit overflow in rational ") + op);
}

}  // namespace detail

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (d < 0) {
    n = checked_sub(0, n);
    d = checked_sub(0, d);
  }
  const std::int64_t g = std::gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::add_slow(const Rational& a, const Rational& b, bool subtract) {
  const std::int64_t g = std::gcd(a.den_, b.den_);
  const std::int64_t da = a.den_ / g;
  const std::int64_t db = b.den_ / g;
  const std::int64_t left = checked_mul(a.num_, db);
  const std::int64_t right = checked_mul(b.num_, da);
  const std::int64_t n = subtract ? checked_sub(left, right) : checked_add(left, right);
  return Rational(n, checked_mul(a.den_, db));
}

Rational Rational::mul_slow(const Rational& a, const Rational& b) {
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  Rational r;
  r.num_ = checked_mul(a.num_ / (g1 ? g1 : 1), b.num_ / (g2 ? g2 : 1));
  r.den_ = checked_mul(a.den_ / (g2 ? g2 : 1), b.den_ / (g1 ? g1 : 1));
  if (r.num_ == 0) r.den_ = 1;
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  Rational inv;
  inv.num_ = b.num_ < 0 ? checked_sub(0, b.den_) : b.den_;
  inv.den_ = b.num_ < 0 ? checked_sub(0, b.num_) : b.num_;
  return a * inv;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 l = static_cast<__int128>(a.num_) * b.den_;
  const __int128 r = static_cast<__int128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::int64_t g = std::gcd(a, b);
  return std::abs(checked_mul(a / g, b));
}

}  // namespace cyclohodge
