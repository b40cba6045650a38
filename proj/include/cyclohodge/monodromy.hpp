#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclohodge/hypergeometric.hpp"
#include "cyclohodge/matrix2.hpp"
#include "cyclohodge/schwarz.hpp"

namespace cyclohodge {

/// Rank-2 monodromy of a Gauss equation over Q(zeta_N), with g0 g1 gInf = I.
struct MonodromyRep {
  std::int64_t conductor = 1;
  Matrix2 g0;
  Matrix2 g1;
  Matrix2 gInf;
  std::optional<HypergeometricParams> source_params;

  /// Applies zeta -> zeta^k to every generator.
  MonodromyRep galois(std::int64_t k) const;
};

/// Levelt generators: gInf is the companion matrix of (t - e(alpha))(t - e(beta)),
/// g0^-1 the companion matrix of (t - 1)(t - e(gamma)), and g1 = (gInf g0)^-1.
/// The eigenvalue arguments are {alpha, beta} for gInf and {0, 1 - gamma} for
/// g0, mod 1. Throws ResonantInput for reducible parameters and
/// ConductorOverflow past the configured conductor bound.
MonodromyRep levelt_generators(const HypergeometricParams& p);

/// Nonzero Hermitian H with g^* H g = H for every generator, found by solving
/// the linear system over Q on the power-basis coordinates. Normalised by
/// dividing by h11 (else h22) so that the first nonzero diagonal entry is 1.
/// Over Q (conductor <= 2) the form is computed in Q(i). Returns nullopt when
/// only the zero form is invariant.
std::optional<HermitianForm2> invariant_form(const MonodromyRep& r);

struct ConjugateSignature {
  std::int64_t k = 1;
  Signature signature;
};

/// Signatures of sigma_k(H) for 1 <= k < N/2 coprime to the form's conductor
/// (sigma_{-k} H is the transpose, with the same signature). k = 1 first.
std::vector<ConjugateSignature> conjugate_signatures(const HermitianForm2& h);

enum class StopReason { Closed, BoundExceeded, InfiniteOrderElement };

std::string_view to_string(StopReason s);

struct BfsOptions {
  /// Stop as soon as an element of provably infinite order appears: a trace
  /// with |sigma_k(tr)| > 2 for some k, or a non-scalar g with tr^2 = 4 det.
  bool certify_infinite = true;
};

struct GroupClosureReport {
  bool finite_within_bound = false;
  std::optional<std::int64_t> order_if_found;
  /// Group order modulo scalar matrices, when closed.
  std::optional<std::int64_t> projective_order;
  std::int64_t elements_explored = 0;
  std::int64_t bound = 0;
  StopReason stop_reason = StopReason::BoundExceeded;
  /// Word in the generators (a = g0, b = g1, c = gInf, capitals for inverses)
  /// of the infinite-order element, with the reason.
  std::optional<std::string> witness;
};

/// Breadth-first closure of {g0, g1, gInf} and their inverses under
/// multiplication, with exact hashing of matrices. Stops when closed or once
/// more than `bound` distinct elements have been found. Throws
/// InvalidArgument for bound < 1 and ConductorOverflow when the entries
/// outgrow 64-bit rationals.
GroupClosureReport closure_bfs(const MonodromyRep& r, std::int64_t bound, const BfsOptions& options = {});

enum class MonodromyVerdict { Finite, Infinite, Unknown };

std::string_view to_string(MonodromyVerdict v);

struct FinitenessReport {
  HypergeometricParams params;
  MonodromyVerdict verdict = MonodromyVerdict::Unknown;
  FinitenessVerdict schwarz;
  FinitenessVerdict interlacing;
  std::optional<HermitianForm2> form;
  std::vector<ConjugateSignature> form_signatures;
  /// Infinite if some conjugate form is indefinite, Finite if all are definite.
  MonodromyVerdict form_verdict = MonodromyVerdict::Unknown;
  GroupClosureReport bfs;
  MonodromyVerdict bfs_verdict = MonodromyVerdict::Unknown;
  /// True when every conclusive method gives the same answer and the closed
  /// group's projective order fits the Schwarz type.
  bool methods_agree = true;
  std::vector<std::string> discrepancies;
};

/// Runs the Schwarz table, interlacing, conjugate form signatures and the
/// BFS closure on irreducible parameters. Throws ResonantInput if reducible.
FinitenessReport finiteness_report(const HypergeometricParams& p, std::int64_t bound,
                                   const BfsOptions& options = {});

}  // namespace cyclohodge
