#include "cyclohodge/schwarz.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <sstream>

#include "cyclohodge/errors.hpp"

namespace cyclohodge {

namespace {

#include "schwarz_table.inc"

const Rational kHalf(1, 2);

struct Reduced {
  Rational r;        // distance to the nearest integer, in [0, 1/2]
  std::int64_t shift;  // x = +-r + shift
};

Reduced reduce(const Rational& x) {
  const Rational f = x.frac();
  if (f > kHalf) return {Rational(1) - f, x.floor() + 1};
  return {f, x.floor()};
}

SchwarzType parse_type(const std::string& word) {
  if (word == "dihedral") return SchwarzType::Dihedral;
  if (word == "tetrahedral") return SchwarzType::Tetrahedral;
  if (word == "octahedral") return SchwarzType::Octahedral;
  if (word == "icosahedral") return SchwarzType::Icosahedral;
  throw Error(ErrorCode::TableFormat, "unknown group type '" + word + "'");
}

// The finite subgroups of PGL(2) generated by two elements are dihedral, A4,
// S4 or A5; a generating pair of involutions gives a dihedral group, and
// among the other three only S4 has elements of order 4, only A5 of order 5.
SchwarzType finite_group_type(const LocalOrders& o) {
  const std::array<std::int64_t, 3> ord{o.at0.order, o.at1.order, o.at_inf.order};
  if (std::count(ord.begin(), ord.end(), 2) >= 2) return SchwarzType::Dihedral;
  if (std::count(ord.begin(), ord.end(), 5) > 0) return SchwarzType::Icosahedral;
  if (std::count(ord.begin(), ord.end(), 4) > 0) return SchwarzType::Octahedral;
  return SchwarzType::Tetrahedral;
}

bool is_dihedral_form(const SchwarzTriple& t) {
  // canonical form (r, 1/2, 1/2) with r a non-integer
  return t.mu == kHalf && t.nu == kHalf && !t.lambda.is_zero();
}

}  // namespace

std::string_view to_string(SchwarzType t) {
  switch (t) {
    case SchwarzType::Dihedral: return "Dihedral";
    case SchwarzType::Tetrahedral: return "Tetrahedral";
    case SchwarzType::Octahedral: return "Octahedral";
    case SchwarzType::Icosahedral: return "Icosahedral";
    case SchwarzType::Infinite: return "Infinite";
    case SchwarzType::ReducibleNotApplicable: return "ReducibleNotApplicable";
  }
  return "Unknown";
}

SchwarzTriple normalize_triple(const Rational& lambda, const Rational& mu, const Rational& nu) {
  std::array<Reduced, 3> red{reduce(lambda), reduce(mu), reduce(nu)};
  std::int64_t parity = 0;
  bool has_half = false;
  for (const auto& e : red) {
    parity += e.shift;
    has_half = has_half || e.r == kHalf;
  }
  std::array<Rational, 3> r{red[0].r, red[1].r, red[2].r};
  std::sort(r.begin(), r.end());
  if (!has_half && (parity % 2 != 0)) r[2] = Rational(1) - r[2];
  return SchwarzTriple{r[0], r[1], r[2]};
}

SchwarzTable SchwarzTable::parse(std::string_view text) {
  SchwarzTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> words;
    for (std::string w; fields >> w;) words.push_back(w);
    if (words.empty()) continue;
    const auto where = " (line " + std::to_string(line_no) + ")";
    if (words[0] == "version") {
      if (words.size() != 2) throw Error(ErrorCode::TableFormat, "malformed version line" + where);
      table.version_ = std::stoi(words[1]);
      continue;
    }
    if (table.version_ == 0) throw Error(ErrorCode::TableFormat, "missing version line before rows" + where);
    if (words.size() != 5) throw Error(ErrorCode::TableFormat, "expected 'case lambda mu nu type'" + where);
    Row row;
    row.case_number = std::stoi(words[0]);
    row.type = parse_type(words[4]);
    row.source = words[1] + " " + words[2] + " " + words[3];
    if (row.type == SchwarzType::Dihedral) {
      if (words[1] != "1/2" || words[2] != "1/2" || words[3] != "*")
        throw Error(ErrorCode::TableFormat, "dihedral row must read '1/2 1/2 *'" + where);
    } else {
      try {
        row.canonical = normalize_triple(Rational::parse(words[1]), Rational::parse(words[2]), Rational::parse(words[3]));
      } catch (const Error& e) {
        throw Error(ErrorCode::TableFormat, std::string(e.what()) + where);
      }
    }
    table.rows_.push_back(std::move(row));
  }
  if (table.version_ == 0) throw Error(ErrorCode::TableFormat, "missing version line");
  return table;
}

SchwarzTable SchwarzTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::TableFormat, "cannot open Schwarz table '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const SchwarzTable& SchwarzTable::builtin() {
  static const SchwarzTable table = parse(kSchwarzTableText);
  return table;
}

FinitenessVerdict SchwarzTable::lookup(const SchwarzTriple& t) const {
  FinitenessVerdict v;
  const std::string triple = "(" + t.lambda.str() + ", " + t.mu.str() + ", " + t.nu.str() + ")";
  for (const auto& row : rows_) {
    const bool match = row.canonical ? *row.canonical == t : is_dihedral_form(t);
    if (!match) continue;
    v.finite = true;
    v.schwarz_type = row.type;
    v.case_number = row.case_number;
    v.witness = "canonical " + triple + " matches Schwarz row " + std::to_string(row.case_number) + " (" +
                row.source + ", " + std::string(to_string(row.type)) + ")";
    return v;
  }
  v.finite = false;
  v.schwarz_type = SchwarzType::Infinite;
  v.witness = "canonical " + triple + " matches no Schwarz row";
  return v;
}

FinitenessVerdict schwarz_lookup(const SchwarzTriple& t, const SchwarzTable& table) {
  return table.lookup(normalize_triple(t.lambda, t.mu, t.nu));
}

FinitenessVerdict schwarz_classify(const HypergeometricParams& p, const SchwarzTable& table) {
  if (!is_irreducible(p)) {
    FinitenessVerdict v;
    v.schwarz_type = SchwarzType::ReducibleNotApplicable;
    v.witness = "reducible parameters: one of alpha, beta, gamma-alpha, gamma-beta is an integer";
    return v;
  }
  const auto d = exponent_differences(p);
  return schwarz_lookup(SchwarzTriple{d.lambda, d.mu, d.nu}, table);
}

bool interlaces(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2) {
  if (a1 == a2 || b1 == b2 || a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  const Rational& lo = std::min(a1, a2);
  const Rational& hi = std::max(a1, a2);
  const int inside = (lo < b1 && b1 < hi) + (lo < b2 && b2 < hi);
  return inside == 1;
}

FinitenessVerdict interlacing_finiteness(const HypergeometricParams& p) {
  if (!is_irreducible(p)) throw Error(ErrorCode::ResonantInput, "interlacing test needs irreducible parameters");
  const std::int64_t n = common_denominator(p);
  FinitenessVerdict v;
  for (std::int64_t k = 1; k <= std::max<std::int64_t>(n - 1, 1); ++k) {
    if (std::gcd(k, n) != 1) continue;
    const Rational a1 = (Rational(k) * p.alpha).frac();
    const Rational a2 = (Rational(k) * p.beta).frac();
    const Rational b1(0);
    const Rational b2 = (Rational(k) * p.gamma).frac();
    if (interlaces(a1, a2, b1, b2)) continue;
    std::vector<std::pair<Rational, char>> circle{{a1, 'A'}, {a2, 'A'}, {b1, 'B'}, {b2, 'B'}};
    std::sort(circle.begin(), circle.end());
    std::string order;
    for (const auto& [x, tag] : circle) order += (order.empty() ? "" : ", ") + x.str() + "^" + tag;
    v.finite = false;
    v.schwarz_type = SchwarzType::Infinite;
    v.failing_k = k;
    v.witness = "k=" + std::to_string(k) + ": circle order " + order + " does not interlace";
    return v;
  }
  v.finite = true;
  v.schwarz_type = finite_group_type(local_orders(p));
  v.witness = "all k coprime to " + std::to_string(n) + " interlace";
  return v;
}

}  // namespace cyclohodge
