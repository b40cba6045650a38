#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "cyclohodge/cyclic_cover.hpp"
#include "cyclohodge/rational.hpp"

namespace cyclohodge {

/// Parameters of the Gauss equation t(t-1)f'' + ((a+b+1)t - c)f' + ab f = 0.
/// Stored unreduced so that the Riemann scheme is faithful.
struct HypergeometricParams {
  Rational alpha;
  Rational beta;
  Rational gamma;

  friend bool operator==(const HypergeometricParams&, const HypergeometricParams&) = default;
};

/// Local exponents at 0, 1 and infinity.
struct RiemannScheme {
  std::pair<Rational, Rational> at0;
  std::pair<Rational, Rational> at1;
  std::pair<Rational, Rational> at_inf;

  Rational exponent_sum() const {
    return at0.first + at0.second + at1.first + at1.second + at_inf.first + at_inf.second;
  }
};

/// lambda = |1 - gamma|, mu = |gamma - alpha - beta|, nu = |alpha - beta|.
struct ExponentDifferences {
  Rational lambda;
  Rational mu;
  Rational nu;
};

struct LocalOrder {
  /// Order of the local monodromy in PGL(2); 1 for an integer exponent difference.
  std::int64_t order = 1;
  /// Integer exponent difference: the linear local monodromy may be a
  /// nontrivial unipotent even though its projective order is 1.
  bool possibly_unipotent = false;

  friend bool operator==(const LocalOrder&, const LocalOrder&) = default;
};

struct LocalOrders {
  LocalOrder at0;
  LocalOrder at1;
  LocalOrder at_inf;
};

/// Indices into BranchData::branch of the points placed at 0, 1, x, infinity.
struct PointRoles {
  std::size_t zero = 0;
  std::size_t one = 1;
  std::size_t moving = 2;
  std::size_t infinity = 3;
};

/// Reads roles from each point's `point` tag (else its label): "0", "1", "x",
/// "inf"/"infinity". Falls back to positional order (0, 1, x, inf) when the
/// tags do not name all four roles. Throws NotFourPoints.
PointRoles infer_roles(const BranchData& b);

/// Gauss parameters of the chi_j period family of a four-point cover with
/// moving point x. With eigenform exponents mu_s = frac(-j m_s / n):
///   alpha' = mu_x, gamma = mu_0 + mu_x, beta' = mu_0 + mu_1 + mu_x - 1,
/// reported with alpha >= beta.
HypergeometricParams character_to_hg(const BranchData& b, std::int64_t j,
                                     const std::optional<PointRoles>& roles = std::nullopt);

RiemannScheme riemann_scheme(const HypergeometricParams& p);
ExponentDifferences exponent_differences(const HypergeometricParams& p);
LocalOrders local_orders(const HypergeometricParams& p);

/// Non-resonance: none of alpha, beta, gamma - alpha, gamma - beta is an integer.
bool is_irreducible(const HypergeometricParams& p);
/// Alternative phrasing: no difference of two of alpha, beta, gamma is an integer.
bool pairwise_nonresonant(const HypergeometricParams& p);

/// Least common denominator of alpha, beta, gamma.
std::int64_t common_denominator(const HypergeometricParams& p);

}  // namespace cyclohodge
