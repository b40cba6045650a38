#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclohodge/cyclic_cover.hpp"
#include "cyclohodge/monodromy.hpp"

namespace cyclohodge {

/// Cyclic quotient singularity of type 1/n (1, q).
struct QuotientSingularity {
  std::int64_t n = 0;
  std::int64_t q = 0;
};

/// Hirzebruch-Jung string: c_i >= 2 are minus the self-intersections.
struct HJString {
  std::vector<std::int64_t> coefficients;

  /// c_1 - 1/(c_2 - 1/(...)).
  Rational value() const;
  friend bool operator==(const HJString&, const HJString&) = default;
};

/// Negative-regular continued fraction of n/q. Throws GcdNotOne, or
/// InvalidArgument unless 1 <= q < n.
HJString hj_resolve(const QuotientSingularity& s);

/// lcm of the fibre multiplicities. Throws InvalidArgument on an empty list or
/// a non-positive entry.
std::int64_t semistable_base_order(const std::vector<std::int64_t>& multiplicities);

struct KodairaCheck {
  bool consistent = false;
  std::int64_t e = 0;
  std::int64_t three_sigma = 0;
  bool degV_positive = false;
};

/// e = 4(b-1)(g-1); consistent iff 3 sigma = K2 - 2e.
KodairaCheck kodaira_degree_check(std::int64_t k2, std::int64_t b, std::int64_t g, std::int64_t sigma);

/// Ramification of the base curve over one point of the x-line.
struct BaseBranch {
  std::string over;  // "0", "1" or "inf"
  std::int64_t e = 1;
};

/// B -> P^1 of degree n, ramified to order e over each listed point.
struct BaseCover {
  std::int64_t n = 1;
  std::int64_t target_genus = 0;
  std::vector<BaseBranch> branch;
};

/// Local monodromy order of the character-j summand around one singular value.
struct SingularFiberOrders {
  std::string value;  // "0", "1" or "inf"
  std::map<std::int64_t, std::int64_t> orders;  // j -> order
};

struct FibrationSpec {
  /// Fibre family: four branch points, one of them the moving point x.
  /// Three-point data describe an isotrivial family.
  BranchData fiber_branch;
  std::int64_t base_genus = 0;
  std::optional<BaseCover> base_cover;
  /// Overrides of the orders derived from the hypergeometric parameters.
  std::vector<SingularFiberOrders> singular_fiber_local_orders;
};

enum class SummandKind { Ample, UnitaryFlat };
enum class Semiample { Yes, No, Undetermined };

std::string_view to_string(SummandKind k);
std::string_view to_string(Semiample s);

struct Summand {
  SummandKind kind = SummandKind::Ample;
  std::int64_t rank = 0;
  std::optional<std::int64_t> character;
  /// Unset for the Ample summand.
  std::optional<MonodromyVerdict> monodromy;
  std::optional<HypergeometricParams> params;
};

struct FujitaReport {
  std::int64_t total_rank = 0;
  std::vector<Summand> summands;
  Semiample semiample = Semiample::Undetermined;
  std::vector<std::string> rationale;
};

/// No if a flat summand has infinite monodromy, Undetermined if one is
/// undecided, Yes otherwise; always Yes over a base of genus <= 1.
Semiample semiample_verdict(const std::vector<Summand>& summands, std::int64_t base_genus);

/// Linear local monodromy orders of the character-j summand at x = 0, 1, inf:
/// the orders of e(gamma), e(gamma - alpha - beta) and lcm of those of e(alpha),
/// e(beta).
std::map<std::string, std::int64_t> default_local_orders(const HypergeometricParams& p);

/// Splits the Hodge bundle of the family over B into unitary flat summands
/// (characters of pure Hodge type whose local monodromy dies on B) and an
/// ample remainder, and decides semi-ampleness. Throws InconsistentSpec when
/// base_genus disagrees with base_cover, NotFourPoints for five or more
/// branch points, plus errors from the submodules.
FujitaReport fujita_decomposition(const FibrationSpec& spec, std::int64_t bound);

/// Human-readable table of the eigenspaces and summands.
std::string render_text(const FujitaReport& r, const EigenspaceTable& table);

}  // namespace cyclohodge
