#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclohodge/unit_arg.hpp"

namespace cyclohodge {

/// One branch point of a cyclic cover z^n = prod (y - s)^{m_s}.
struct BranchPoint {
  std::string label;
  /// Optional position: "0", "1", "x" (the moving point), "inf", or a rational.
  /// Only used to assign roles in the hypergeometric normalisation.
  std::optional<std::string> point;
  std::int64_t exponent = 0;

  friend bool operator==(const BranchPoint&, const BranchPoint&) = default;
};

/// A mu_n cover of the projective line given by its branch exponents. The
/// point at infinity is an ordinary entry: the exponents must sum to 0 mod n.
struct BranchData {
  std::int64_t order = 0;
  std::vector<BranchPoint> branch;

  std::size_t size() const { return branch.size(); }
  friend bool operator==(const BranchData&, const BranchData&) = default;
};

/// Reduces exponents mod n, drops exponent-0 entries and checks the
/// cover axioms. Throws SumNotZeroModN, FewerThanThreePoints or DuplicateLabel.
BranchData validate(BranchData b);

/// Genus of the normalised cover, 2g - 2 = -2n + sum_s (n - gcd(n, m_s)).
/// Accepts covers with fewer than three branch points; throws
/// DisconnectedCover when gcd(n, m_1, ..., m_r) > 1.
std::int64_t cover_genus(const BranchData& b);

/// Local exponents frac(-j m_s / n) of the rank-one local system whose
/// holomorphic sections are the chi_j-eigenforms, in branch order.
std::vector<UnitArg> local_exponents(const BranchData& b, std::int64_t j);

/// dim V_j = -1 + sum_s frac(-j m_s / n). Throws TrivialLocalMonodromy if some
/// j m_s = 0 mod n.
std::int64_t eigenspace_h10(const BranchData& b, std::int64_t j);

/// deg L_j = (1/n) sum_s ((j m_s) mod n).
std::int64_t eigensheaf_degree(const BranchData& b, std::int64_t j);

struct EigenspaceRow {
  std::int64_t j = 0;
  std::int64_t h10 = 0;
  std::int64_t h01 = 0;
  std::int64_t eigensheaf_degree = 0;
  std::vector<UnitArg> local_exponents;
  bool unitary_flat = false;
  std::int64_t rank = 0;
};

struct EigenspaceTable {
  std::int64_t order = 0;
  std::int64_t genus = 0;
  std::vector<EigenspaceRow> rows;  // j = 1 .. n-1

  const EigenspaceRow& row(std::int64_t j) const { return rows.at(static_cast<std::size_t>(j - 1)); }
};

EigenspaceTable eigenspace_table(const BranchData& b);

/// Genus g of an n-fold cover of a genus-g_base curve with the given
/// ramification orders: 2g - 2 = n (2 g_base - 2 + sum (1 - 1/e_i)).
/// Throws InvalidRamification (e_i < 2 or e_i not dividing n) or
/// NonIntegralGenus.
std::int64_t hurwitz_base_genus(std::int64_t n, std::int64_t g_base, const std::vector<std::int64_t>& ramification);

}  // namespace cyclohodge
