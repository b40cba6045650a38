#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclohodge/hypergeometric.hpp"
#include "cyclohodge/rational.hpp"

namespace cyclohodge {

enum class SchwarzType { Dihedral, Tetrahedral, Octahedral, Icosahedral, Infinite, ReducibleNotApplicable };

std::string_view to_string(SchwarzType t);

/// Exponent differences in canonical form under the Schwarz moves.
///
/// Each entry is first brought to its distance r in [0, 1/2] from the nearest
/// integer; the parity of the integer shifts used is a class invariant unless
/// some r equals 1/2. Canonical form: r sorted ascending, and for odd parity
/// the largest entry replaced by 1 - r. Hence 0 <= lambda <= mu <= nu < 1,
/// except the odd-parity all-integer class, which is (0, 0, 1).
struct SchwarzTriple {
  Rational lambda;
  Rational mu;
  Rational nu;

  friend bool operator==(const SchwarzTriple&, const SchwarzTriple&) = default;
};

SchwarzTriple normalize_triple(const Rational& lambda, const Rational& mu, const Rational& nu);

struct FinitenessVerdict {
  bool finite = false;
  SchwarzType schwarz_type = SchwarzType::Infinite;
  /// Row number in the Schwarz table for finite verdicts, 0 otherwise.
  int case_number = 0;
  /// Smallest failing Galois exponent for an interlacing failure.
  std::optional<std::int64_t> failing_k;
  std::string witness;
};

/// The Schwarz table, parsed from its text format (see data/schwarz_table.txt).
class SchwarzTable {
 public:
  struct Row {
    int case_number = 0;
    SchwarzType type = SchwarzType::Infinite;
    /// Empty for the dihedral family row.
    std::optional<SchwarzTriple> canonical;
    std::string source;  // the row as written
  };

  /// Table compiled in from data/schwarz_table.txt.
  static const SchwarzTable& builtin();
  static SchwarzTable parse(std::string_view text);
  static SchwarzTable load(const std::string& path);

  int version() const { return version_; }
  const std::vector<Row>& rows() const { return rows_; }

  FinitenessVerdict lookup(const SchwarzTriple& t) const;

 private:
  int version_ = 0;
  std::vector<Row> rows_;
};

/// Matches a (normalised) triple against the table; Infinite if no row matches.
FinitenessVerdict schwarz_lookup(const SchwarzTriple& t, const SchwarzTable& table = SchwarzTable::builtin());

/// Irreducibility check, exponent differences, normalisation and lookup.
/// Reducible parameters give ReducibleNotApplicable.
FinitenessVerdict schwarz_classify(const HypergeometricParams& p, const SchwarzTable& table = SchwarzTable::builtin());

/// Interlacing test: finite iff for every k coprime to the common denominator
/// N the sets {frac(k alpha), frac(k beta)} and {0, frac(k gamma)} strictly
/// alternate around the circle. Throws ResonantInput when reducible.
FinitenessVerdict interlacing_finiteness(const HypergeometricParams& p);

/// Whether two 2-element subsets of [0,1) strictly alternate around the circle.
bool interlaces(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2);

}  // namespace cyclohodge
