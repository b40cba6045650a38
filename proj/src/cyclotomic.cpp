#include "cyclohodge/cyclotomic.hpp"

#include <mpfr.h>

#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "cyclohodge/linalg.hpp"

namespace cyclohodge {

namespace {

std::atomic<std::int64_t> g_max_conductor{840};

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// Exact division of integer polynomials (lowest degree first), divisor monic.
std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    q[i - dn] = c;
    for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
  }
  return q;
}

}  // namespace

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_div_exact(p, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  cache.emplace(n, p);
  return p;
}

CyclotomicField::CyclotomicField(std::int64_t conductor)
    : conductor_(conductor),
      degree_(static_cast<std::size_t>(euler_phi(conductor))),
      modulus_(cyclotomic_polynomial(conductor)) {
  powers_.reserve(static_cast<std::size_t>(conductor));
  std::vector<std::int64_t> v(degree_, 0);
  v[0] = 1;
  for (std::int64_t k = 0; k < conductor; ++k) {
    powers_.push_back(v);
    // multiply by zeta and reduce with the monic modulus
    const std::int64_t top = v[degree_ - 1];
    for (std::size_t i = degree_ - 1; i > 0; --i) v[i] = v[i - 1];
    v[0] = 0;
    for (std::size_t i = 0; i < degree_; ++i) v[i] = detail::checked_sub(v[i], detail::checked_mul(top, modulus_[i]));
  }
}

const CyclotomicField& CyclotomicField::get(std::int64_t conductor) {
  if (conductor < 1) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
  if (conductor > max_conductor())
    throw Error(ErrorCode::ConductorOverflow,
                "conductor " + std::to_string(conductor) + " exceeds bound " + std::to_string(max_conductor()));
  static std::mutex mu;
  static std::map<std::int64_t, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard lock(mu);
  auto& slot = fields[conductor];
  if (!slot) slot.reset(new CyclotomicField(conductor));
  return *slot;
}

std::int64_t CyclotomicField::max_conductor() { return g_max_conductor.load(); }
void CyclotomicField::set_max_conductor(std::int64_t bound) { g_max_conductor.store(bound); }

const std::vector<std::int64_t>& CyclotomicField::power(std::int64_t k) const {
  return powers_[static_cast<std::size_t>(mod(k, conductor_))];
}

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(1) {}

CyclotomicNumber::CyclotomicNumber(std::int64_t conductor)
    : field_(&CyclotomicField::get(conductor)), coeffs_(field_->degree()) {}

CyclotomicNumber::CyclotomicNumber(std::int64_t conductor, const Rational& value) : CyclotomicNumber(conductor) {
  coeffs_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(std::int64_t conductor, std::vector<Rational> coeffs)
    : field_(&CyclotomicField::get(conductor)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_->degree())
    throw Error(ErrorCode::InvalidArgument, "coefficient vector length must equal phi(N)");
}

CyclotomicNumber CyclotomicNumber::zeta(std::int64_t conductor, std::int64_t k) {
  CyclotomicNumber z(conductor);
  const auto& p = z.field_->power(k);
  for (std::size_t i = 0; i < p.size(); ++i) z.coeffs_[i] = Rational(p[i]);
  return z;
}

CyclotomicNumber CyclotomicNumber::root_of_unity(const UnitArg& t, std::int64_t conductor) {
  const Rational scaled = t.value() * Rational(conductor);
  if (!scaled.is_integer())
    throw Error(ErrorCode::InvalidArgument, "root of unity of order " + std::to_string(t.order()) +
                                                " does not lie in Q(zeta_" + std::to_string(conductor) + ")");
  return zeta(conductor, scaled.num());
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

bool CyclotomicNumber::is_one() const { return is_rational() && coeffs_[0] == Rational(1); }

CyclotomicNumber CyclotomicNumber::embed(std::int64_t conductor) const {
  const std::int64_t n = this->conductor();
  if (conductor == n) return *this;
  if (conductor % n != 0) throw Error(ErrorCode::InvalidArgument, "embedding requires a multiple of the conductor");
  CyclotomicNumber out(conductor);
  const std::int64_t step = conductor / n;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto& p = out.field_->power(static_cast<std::int64_t>(i) * step);
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k] != 0) out.coeffs_[k] += coeffs_[i] * Rational(p[k]);
  }
  return out;
}

CyclotomicNumber CyclotomicNumber::galois(std::int64_t k) const {
  const std::int64_t n = conductor();
  if (std::gcd(mod(k, n), n) != 1 && n > 1)
    throw Error(ErrorCode::InvalidArgument, "Galois exponent must be coprime to the conductor");
  CyclotomicNumber out(n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto& p = field_->power(static_cast<std::int64_t>(i) * mod(k, n));
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p[j] != 0) out.coeffs_[j] += coeffs_[i] * Rational(p[j]);
  }
  return out;
}

namespace {

// Matrix of multiplication by x in the power basis (column i = x * zeta^i).
linalg::RationalMatrix multiplication_matrix(const CyclotomicNumber& x) {
  const std::size_t d = x.field().degree();
  linalg::RationalMatrix m(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) {
    const CyclotomicNumber col = x * CyclotomicNumber::zeta(x.conductor(), static_cast<std::int64_t>(i));
    for (std::size_t r = 0; r < d; ++r) m[r][i] = col.coeffs()[r];
  }
  return m;
}

}  // namespace

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  if (is_rational()) return CyclotomicNumber(conductor(), Rational(1) / coeffs_[0]);
  std::vector<Rational> e0(coeffs_.size());
  e0[0] = Rational(1);
  auto sol = linalg::solve(multiplication_matrix(*this), e0);
  if (!sol) throw Error(ErrorCode::InvalidArgument, "singular multiplication matrix");
  return CyclotomicNumber(conductor(), std::move(*sol));
}

Rational CyclotomicNumber::norm() const { return linalg::determinant(multiplication_matrix(*this)); }

std::complex<double> CyclotomicNumber::to_complex(std::int64_t k) const {
  const double n = static_cast<double>(conductor());
  std::complex<double> z = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(static_cast<std::int64_t>(i) * k, conductor())) / n;
    z += coeffs_[i].to_double() * std::polar(1.0, angle);
  }
  return z;
}

std::string CyclotomicNumber::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i];
    if (i > 0) os << "*z" << conductor() << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::size_t CyclotomicNumber::hash() const {
  std::size_t h = static_cast<std::size_t>(conductor()) * 0x9e3779b97f4a7c15ULL;
  for (const auto& c : coeffs_) {
    h ^= static_cast<std::size_t>(c.num()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(c.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

namespace {

std::int64_t common_conductor(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return checked_lcm(a.conductor(), b.conductor());
}

}  // namespace

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.field_ != b.field_) {
    const auto n = common_conductor(a, b);
    return a.embed(n) + b.embed(n);
  }
  CyclotomicNumber out(a);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
  return out;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.field_ != b.field_) {
    const auto n = common_conductor(a, b);
    return a.embed(n) - b.embed(n);
  }
  CyclotomicNumber out(a);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
  return out;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.field_ != b.field_) {
    const auto n = common_conductor(a, b);
    return a.embed(n) * b.embed(n);
  }
  const std::size_t d = a.coeffs_.size();
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  CyclotomicNumber out(a.conductor());
  for (std::size_t i = 0; i < d; ++i) out.coeffs_[i] = prod[i];
  for (std::size_t k = d; k < prod.size(); ++k) {
    if (prod[k].is_zero()) continue;
    const auto& p = a.field_->power(static_cast<std::int64_t>(k));
    for (std::size_t i = 0; i < d; ++i)
      if (p[i] != 0) out.coeffs_[i] += prod[k] * Rational(p[i]);
  }
  return out;
}

CyclotomicNumber operator*(const Rational& a, const CyclotomicNumber& b) {
  CyclotomicNumber out(b);
  for (auto& c : out.coeffs_) c *= a;
  return out;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.field_ != b.field_) {
    const auto n = common_conductor(a, b);
    return a.embed(n).coeffs_ == b.embed(n).coeffs_;
  }
  return a.coeffs_ == b.coeffs_;
}

namespace {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Returns the sign if the ball (value, error bound) excludes zero, else 0.
int sign_at_precision(const CyclotomicNumber& x, mpfr_prec_t prec) {
  MpfrValue sum(prec), term(prec), angle(prec), scratch(prec), abs_sum(prec);
  mpfr_set_zero(sum.get(), 1);
  mpfr_set_zero(abs_sum.get(), 1);
  const auto& coeffs = x.coeffs();
  const std::int64_t n = x.conductor();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    // cos(2 pi i / N), angle reduced into [0, 2 pi)
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    mpfr_mul_si(angle.get(), angle.get(), 2 * static_cast<long>(mod(static_cast<std::int64_t>(i), n)), MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), static_cast<long>(n), MPFR_RNDN);
    mpfr_cos(term.get(), angle.get(), MPFR_RNDN);
    mpfr_mul_si(term.get(), term.get(), static_cast<long>(coeffs[i].num()), MPFR_RNDN);
    mpfr_div_si(term.get(), term.get(), static_cast<long>(coeffs[i].den()), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    mpfr_set_si(scratch.get(), static_cast<long>(coeffs[i].num() < 0 ? -coeffs[i].num() : coeffs[i].num()), MPFR_RNDU);
    mpfr_div_si(scratch.get(), scratch.get(), static_cast<long>(coeffs[i].den()), MPFR_RNDU);
    mpfr_add(abs_sum.get(), abs_sum.get(), scratch.get(), MPFR_RNDU);
  }
  // Every term carries at most ~70 ulps of absolute error relative to |c_i|
  // (angle, cos, scaling); the summation adds one ulp of the running total.
  const long slack = 128 + static_cast<long>(coeffs.size());
  mpfr_mul_si(abs_sum.get(), abs_sum.get(), slack, MPFR_RNDU);
  mpfr_mul_2si(abs_sum.get(), abs_sum.get(), -static_cast<long>(prec), MPFR_RNDU);
  mpfr_abs(scratch.get(), sum.get(), MPFR_RNDN);
  if (mpfr_cmp(scratch.get(), abs_sum.get()) <= 0) return 0;
  return mpfr_sgn(sum.get()) > 0 ? 1 : -1;
}

}  // namespace

int real_sign(const CyclotomicNumber& x) {
  if (!x.is_real()) throw Error(ErrorCode::InvalidForm, "real_sign of a non-real cyclotomic number");
  if (x.is_zero()) return 0;
  if (x.is_rational()) return x.rational_part().sign();
  for (mpfr_prec_t prec = 64; prec <= (1 << 16); prec *= 2) {
    if (int s = sign_at_precision(x, prec); s != 0) return s;
  }
  throw Error(ErrorCode::ResourceLimit, "real sign undecided at maximum precision");
}

}  // namespace cyclohodge
