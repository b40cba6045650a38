#include "cyclohodge/cyclic_cover.hpp"

#include <numeric>
#include <set>

#include "cyclohodge/errors.hpp"

namespace cyclohodge {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

void check_order(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cover order must be positive");
}

void check_character(const BranchData& b, std::int64_t j) {
  if (j < 1 || j >= b.order)
    throw Error(ErrorCode::InvalidArgument,
                "character index " + std::to_string(j) + " outside 1.." + std::to_string(b.order - 1));
}

std::int64_t exponent_sum(const BranchData& b) {
  std::int64_t s = 0;
  for (const auto& p : b.branch) s = mod(s + mod(p.exponent, b.order), b.order);
  return s;
}

}  // namespace

BranchData validate(BranchData b) {
  check_order(b.order);
  std::vector<BranchPoint> kept;
  for (auto& p : b.branch) {
    p.exponent = mod(p.exponent, b.order);
    if (p.exponent != 0) kept.push_back(std::move(p));
  }
  b.branch = std::move(kept);
  if (exponent_sum(b) != 0)
    throw Error(ErrorCode::SumNotZeroModN, "branch exponents sum to " + std::to_string(exponent_sum(b)) +
                                               " mod " + std::to_string(b.order));
  if (b.branch.size() < 3)
    throw Error(ErrorCode::FewerThanThreePoints, "a cover needs at least 3 branch points with nonzero exponent");
  std::set<std::string> labels;
  for (const auto& p : b.branch) {
    if (!labels.insert(p.label).second) throw Error(ErrorCode::DuplicateLabel, "duplicate label '" + p.label + "'");
  }
  return b;
}

std::int64_t cover_genus(const BranchData& b) {
  check_order(b.order);
  if (exponent_sum(b) != 0) throw Error(ErrorCode::SumNotZeroModN, "branch exponents do not sum to 0 mod n");
  std::int64_t g = b.order;
  std::int64_t twice_genus_minus_two = -2 * b.order;
  for (const auto& p : b.branch) {
    const std::int64_t m = mod(p.exponent, b.order);
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "branch exponent 0 mod n in '" + p.label + "'");
    g = std::gcd(g, m);
    twice_genus_minus_two += b.order - std::gcd(b.order, m);
  }
  if (g != 1 && b.order > 1)
    throw Error(ErrorCode::DisconnectedCover, "gcd of n and all exponents is " + std::to_string(g));
  return twice_genus_minus_two / 2 + 1;
}

std::vector<UnitArg> local_exponents(const BranchData& b, std::int64_t j) {
  check_character(b, j);
  std::vector<UnitArg> out;
  out.reserve(b.size());
  for (const auto& p : b.branch) out.push_back(frac(Rational(-j * p.exponent, b.order)));
  return out;
}

std::int64_t eigenspace_h10(const BranchData& b, std::int64_t j) {
  Rational sum(-1);
  const auto exps = local_exponents(b, j);
  for (std::size_t s = 0; s < exps.size(); ++s) {
    if (exps[s].is_one())
      throw Error(ErrorCode::TrivialLocalMonodromy,
                  "character " + std::to_string(j) + " has trivial local monodromy at '" + b.branch[s].label + "'");
    sum += exps[s].value();
  }
  if (!sum.is_integer() || sum.sign() < 0)
    throw Error(ErrorCode::InvalidArgument, "branch exponents do not sum to 0 mod n");
  return sum.num();
}

std::int64_t eigensheaf_degree(const BranchData& b, std::int64_t j) {
  check_character(b, j);
  std::int64_t total = 0;
  for (const auto& p : b.branch) total += mod(j * p.exponent, b.order);
  if (total % b.order != 0) throw Error(ErrorCode::InvalidArgument, "branch exponents do not sum to 0 mod n");
  return total / b.order;
}

EigenspaceTable eigenspace_table(const BranchData& b) {
  EigenspaceTable t;
  t.order = b.order;
  t.genus = cover_genus(b);
  const auto r = static_cast<std::int64_t>(b.size());
  for (std::int64_t j = 1; j < b.order; ++j) {
    EigenspaceRow row;
    row.j = j;
    row.h10 = eigenspace_h10(b, j);
    row.h01 = eigenspace_h10(b, b.order - j);
    row.eigensheaf_degree = eigensheaf_degree(b, j);
    row.local_exponents = local_exponents(b, j);
    row.rank = r - 2;
    row.unitary_flat = row.h10 == 0 || row.h01 == 0;
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::int64_t hurwitz_base_genus(std::int64_t n, std::int64_t g_base, const std::vector<std::int64_t>& ramification) {
  if (n < 1 || g_base < 0) throw Error(ErrorCode::InvalidArgument, "cover degree and base genus must be valid");
  std::int64_t rhs = n * (2 * g_base - 2);
  for (auto e : ramification) {
    if (e < 2 || n % e != 0)
      throw Error(ErrorCode::InvalidRamification,
                  "ramification order " + std::to_string(e) + " must be >= 2 and divide " + std::to_string(n));
    rhs += n - n / e;
  }
  if (rhs % 2 != 0 || rhs < -2)
    throw Error(ErrorCode::NonIntegralGenus, "Riemann-Hurwitz gives 2g - 2 = " + std::to_string(rhs));
  return rhs / 2 + 1;
}

}  // namespace cyclohodge
