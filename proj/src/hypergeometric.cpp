#include "cyclohodge/hypergeometric.hpp"

#include <algorithm>
#include <string>

#include "cyclohodge/errors.hpp"

namespace cyclohodge {

namespace {

enum class Role { Zero, One, Moving, Infinity, None };

Role role_of(const std::string& tag) {
  if (tag == "0") return Role::Zero;
  if (tag == "1") return Role::One;
  if (tag == "x") return Role::Moving;
  if (tag == "inf" || tag == "infinity" || tag == "∞") return Role::Infinity;
  return Role::None;
}

LocalOrder order_of_difference(const Rational& d) {
  if (d.is_integer()) return LocalOrder{1, true};
  return LocalOrder{d.den(), false};
}

}  // namespace

PointRoles infer_roles(const BranchData& b) {
  if (b.size() != 4)
    throw Error(ErrorCode::NotFourPoints, "hypergeometric data needs exactly 4 branch points, got " +
                                              std::to_string(b.size()));
  std::array<int, 4> found{-1, -1, -1, -1};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& p = b.branch[i];
    const Role r = role_of(p.point.value_or(p.label));
    if (r == Role::None) return PointRoles{};
    auto& slot = found[static_cast<std::size_t>(r)];
    if (slot != -1) return PointRoles{};
    slot = static_cast<int>(i);
  }
  return PointRoles{static_cast<std::size_t>(found[0]), static_cast<std::size_t>(found[1]),
                    static_cast<std::size_t>(found[2]), static_cast<std::size_t>(found[3])};
}

HypergeometricParams character_to_hg(const BranchData& b, std::int64_t j, const std::optional<PointRoles>& roles) {
  const PointRoles r = roles.value_or(infer_roles(b));
  if (b.size() != 4) throw Error(ErrorCode::NotFourPoints, "hypergeometric data needs exactly 4 branch points");
  const auto mu = local_exponents(b, j);
  for (std::size_t s = 0; s < mu.size(); ++s) {
    if (mu[s].is_one())
      throw Error(ErrorCode::TrivialLocalMonodromy,
                  "character " + std::to_string(j) + " has trivial local monodromy at '" + b.branch[s].label + "'");
  }
  const Rational& m0 = mu[r.zero].value();
  const Rational& m1 = mu[r.one].value();
  const Rational& mx = mu[r.moving].value();
  // Euler integral  int_1^inf y^{a-c} (y-1)^{c-b-1} (y-x)^{-a} dy  ~  F(a, b; c; x)
  // matched against the eigenform y^{-mu_0} (y-1)^{-mu_1} (y-x)^{-mu_x} dy.
  const Rational a = mx;
  const Rational c = m0 + mx;
  const Rational bb = m0 + m1 + mx - Rational(1);
  HypergeometricParams p{std::max(a, bb), std::min(a, bb), c};
  return p;
}

RiemannScheme riemann_scheme(const HypergeometricParams& p) {
  return RiemannScheme{{Rational(0), Rational(1) - p.gamma},
                       {Rational(0), p.gamma - p.alpha - p.beta},
                       {p.alpha, p.beta}};
}

ExponentDifferences exponent_differences(const HypergeometricParams& p) {
  return ExponentDifferences{(Rational(1) - p.gamma).abs(), (p.gamma - p.alpha - p.beta).abs(),
                             (p.alpha - p.beta).abs()};
}

LocalOrders local_orders(const HypergeometricParams& p) {
  const auto d = exponent_differences(p);
  return LocalOrders{order_of_difference(d.lambda), order_of_difference(d.mu), order_of_difference(d.nu)};
}

bool is_irreducible(const HypergeometricParams& p) {
  return !p.alpha.is_integer() && !p.beta.is_integer() && !(p.gamma - p.alpha).is_integer() &&
         !(p.gamma - p.beta).is_integer();
}

bool pairwise_nonresonant(const HypergeometricParams& p) {
  return !(p.alpha - p.beta).is_integer() && !(p.alpha - p.gamma).is_integer() &&
         !(p.beta - p.gamma).is_integer();
}

std::int64_t common_denominator(const HypergeometricParams& p) {
  return checked_lcm(checked_lcm(p.alpha.den(), p.beta.den()), p.gamma.den());
}

}  // namespace cyclohodge
