#include "cyclohodge/fibration.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "cyclohodge/errors.hpp"

namespace cyclohodge {

namespace {

std::string normalize_value(const std::string& v) {
  if (v == "infinity" || v == "∞") return "inf";
  return v;
}

std::string params_str(const HypergeometricParams& p) {
  return "(" + p.alpha.str() + ", " + p.beta.str() + ", " + p.gamma.str() + ")";
}

std::int64_t root_order(const Rational& x) { return x.frac().den(); }

}  // namespace

Rational HJString::value() const {
  if (coefficients.empty()) throw Error(ErrorCode::InvalidArgument, "empty Hirzebruch-Jung string");
  Rational v(coefficients.back());
  for (std::size_t i = coefficients.size() - 1; i-- > 0;) v = Rational(coefficients[i]) - Rational(1) / v;
  return v;
}

HJString hj_resolve(const QuotientSingularity& s) {
  if (s.n < 2 || s.q < 1 || s.q >= s.n)
    throw Error(ErrorCode::InvalidArgument, "quotient singularity needs 1 <= q < n");
  if (std::gcd(s.n, s.q) != 1)
    throw Error(ErrorCode::GcdNotOne, "gcd(" + std::to_string(s.n) + ", " + std::to_string(s.q) + ") != 1");
  HJString out;
  std::int64_t a = s.n;
  std::int64_t b = s.q;
  while (b != 0) {
    // a/b = c - 1/(b/r) with c = ceil(a/b), r = c b - a
    const std::int64_t c = (a + b - 1) / b;
    out.coefficients.push_back(c);
    const std::int64_t r = c * b - a;
    a = b;
    b = r;
  }
  return out;
}

std::int64_t semistable_base_order(const std::vector<std::int64_t>& multiplicities) {
  if (multiplicities.empty()) throw Error(ErrorCode::InvalidArgument, "no multiplicities given");
  std::int64_t l = 1;
  for (auto m : multiplicities) {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "multiplicities must be positive");
    l = checked_lcm(l, m);
  }
  return l;
}

KodairaCheck kodaira_degree_check(std::int64_t k2, std::int64_t b, std::int64_t g, std::int64_t sigma) {
  KodairaCheck c;
  c.e = detail::checked_mul(4, detail::checked_mul(b - 1, g - 1));
  c.three_sigma = detail::checked_mul(3, sigma);
  c.consistent = c.three_sigma == detail::checked_sub(k2, detail::checked_mul(2, c.e));
  c.degV_positive = sigma > 0;
  return c;
}

std::string_view to_string(SummandKind k) { return k == SummandKind::Ample ? "Ample" : "UnitaryFlat"; }

std::string_view to_string(Semiample s) {
  switch (s) {
    case Semiample::Yes: return "Yes";
    case Semiample::No: return "No";
    case Semiample::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

Semiample semiample_verdict(const std::vector<Summand>& summands, std::int64_t base_genus) {
  if (base_genus <= 1) return Semiample::Yes;
  bool any_unknown = false;
  for (const auto& s : summands) {
    if (s.kind != SummandKind::UnitaryFlat) continue;
    if (s.monodromy == MonodromyVerdict::Infinite) return Semiample::No;
    any_unknown = any_unknown || s.monodromy != MonodromyVerdict::Finite;
  }
  return any_unknown ? Semiample::Undetermined : Semiample::Yes;
}

std::map<std::string, std::int64_t> default_local_orders(const HypergeometricParams& p) {
  return {{"0", root_order(p.gamma)},
          {"1", root_order(p.gamma - p.alpha - p.beta)},
          {"inf", std::lcm(root_order(p.alpha), root_order(p.beta))}};
}

FujitaReport fujita_decomposition(const FibrationSpec& spec, std::int64_t bound) {
  const BranchData fiber = validate(spec.fiber_branch);
  if (fiber.size() > 4)
    throw Error(ErrorCode::NotFourPoints, "fibre families are analysed for four moving-point data (got " +
                                              std::to_string(fiber.size()) + " points)");
  if (spec.base_genus < 0) throw Error(ErrorCode::InvalidArgument, "base genus must be non-negative");
  const EigenspaceTable table = eigenspace_table(fiber);
  const bool isotrivial = fiber.size() == 3;

  FujitaReport rep;
  rep.total_rank = table.genus;

  std::map<std::string, std::int64_t> ramification{{"0", 1}, {"1", 1}, {"inf", 1}};
  if (spec.base_cover) {
    std::vector<std::int64_t> es;
    for (const auto& br : spec.base_cover->branch) {
      const std::string v = normalize_value(br.over);
      if (!ramification.count(v))
        throw Error(ErrorCode::InconsistentSpec, "base cover branches over '" + br.over +
                                                     "', which is not a singular value 0, 1, inf");
      ramification[v] = br.e;
      es.push_back(br.e);
    }
    const std::int64_t g = hurwitz_base_genus(spec.base_cover->n, spec.base_cover->target_genus, es);
    if (g != spec.base_genus)
      throw Error(ErrorCode::InconsistentSpec, "base_genus " + std::to_string(spec.base_genus) +
                                                   " but the base cover has genus " + std::to_string(g));
    rep.rationale.push_back("Hurwitz: the base cover has genus " + std::to_string(g));
  }

  std::int64_t flat_rank = 0;
  for (const auto& row : table.rows) {
    const std::string tag = "j=" + std::to_string(row.j) + ": ";
    if (row.h10 == 0) continue;
    if (!row.unitary_flat) {
      rep.rationale.push_back(tag + "Hodge type (" + std::to_string(row.h10) + "," + std::to_string(row.h01) +
                              ") is mixed; rank " + std::to_string(row.h10) +
                              " goes to the ample part (a rank-1 flat piece would be torsion)");
      continue;
    }
    Summand s;
    s.kind = SummandKind::UnitaryFlat;
    s.rank = row.h10;
    s.character = row.j;
    if (isotrivial) {
      s.monodromy = row.h10 == 1 ? MonodromyVerdict::Finite : MonodromyVerdict::Unknown;
      rep.rationale.push_back(tag + "isotrivial family, unitary flat of rank " + std::to_string(row.h10) +
                              (row.h10 == 1 ? ", torsion by the rank-1 rule" : ", monodromy not analysed"));
    } else {
      const HypergeometricParams p = character_to_hg(fiber, row.j);
      s.params = p;
      auto orders = default_local_orders(p);
      for (const auto& sf : spec.singular_fiber_local_orders) {
        const auto it = sf.orders.find(row.j);
        if (it != sf.orders.end()) orders[normalize_value(sf.value)] = it->second;
      }
      std::string failing;
      for (const auto& [value, order] : orders) {
        if (ramification.at(value) % order != 0)
          failing += (failing.empty() ? "" : ", ") + value + " (order " + std::to_string(order) +
                     ", ramification " + std::to_string(ramification.at(value)) + ")";
      }
      if (!failing.empty()) {
        rep.rationale.push_back(tag + "unitary flat on the x-line but local monodromy survives base change at " +
                                failing + "; kept in the ample part");
        continue;
      }
      if (!is_irreducible(p)) {
        s.monodromy = MonodromyVerdict::Unknown;
        rep.rationale.push_back(tag + "parameters " + params_str(p) + " are reducible; monodromy not decided");
      } else {
        const FinitenessReport f = finiteness_report(p, bound);
        s.monodromy = f.verdict;
        std::string why = tag + "unitary flat rank " + std::to_string(row.h10) + ", parameters " + params_str(p) +
                          ", local monodromy trivial on B, monodromy " + std::string(to_string(f.verdict));
        if (!f.methods_agree) why += " (finiteness methods disagree)";
        rep.rationale.push_back(why);
      }
    }
    flat_rank += s.rank;
    rep.summands.push_back(std::move(s));
  }
  if (rep.total_rank > flat_rank) {
    Summand a;
    a.kind = SummandKind::Ample;
    a.rank = rep.total_rank - flat_rank;
    rep.summands.insert(rep.summands.begin(), std::move(a));
  }

  const bool any_infinite = std::any_of(rep.summands.begin(), rep.summands.end(), [](const Summand& s) {
    return s.kind == SummandKind::UnitaryFlat && s.monodromy == MonodromyVerdict::Infinite;
  });
  if (spec.base_genus <= 1 && any_infinite)
    throw Error(ErrorCode::InconsistentSpec, "a flat summand with infinite monodromy over a base of genus " +
                                                 std::to_string(spec.base_genus));
  rep.semiample = semiample_verdict(rep.summands, spec.base_genus);
  switch (rep.semiample) {
    case Semiample::Yes:
      rep.rationale.push_back(spec.base_genus <= 1 ? "base genus <= 1: V is semi-ample"
                                                   : "every unitary flat summand has finite monodromy: V is semi-ample");
      break;
    case Semiample::No:
      rep.rationale.push_back("a unitary flat summand has infinite monodromy: V is not semi-ample");
      break;
    case Semiample::Undetermined:
      rep.rationale.push_back("some flat summand has undecided monodromy");
      break;
  }
  return rep;
}

std::string render_text(const FujitaReport& r, const EigenspaceTable& table) {
  std::ostringstream os;
  os << "genus " << table.genus << ", mu_" << table.order << " eigenspaces\n";
  os << std::setw(4) << "j" << std::setw(6) << "h10" << std::setw(6) << "h01" << std::setw(8) << "deg L_j"
     << "  flat\n";
  for (const auto& row : table.rows) {
    os << std::setw(4) << row.j << std::setw(6) << row.h10 << std::setw(6) << row.h01 << std::setw(8)
       << row.eigensheaf_degree << "  " << (row.unitary_flat ? "yes" : "no") << "\n";
  }
  os << "\nV = ";
  for (std::size_t i = 0; i < r.summands.size(); ++i) {
    const auto& s = r.summands[i];
    if (i) os << " + ";
    if (s.kind == SummandKind::Ample) {
      os << "A(" << s.rank << ")";
    } else {
      os << "Q_" << *s.character << "(" << s.rank << ", " << to_string(*s.monodromy) << ")";
    }
  }
  os << "\ntotal rank " << r.total_rank << ", semi-ample: " << to_string(r.semiample) << "\n";
  for (const auto& line : r.rationale) os << "  - " << line << "\n";
  return os.str();
}

}  // namespace cyclohodge
