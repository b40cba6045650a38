#include "cyclohodge/monodromy.hpp"

#include <array>
#include <cmath>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "cyclohodge/errors.hpp"

namespace cyclohodge {

namespace {

using Vec = std::vector<CyclotomicNumber>;

std::int64_t conductor_of(const Matrix2& m) {
  std::int64_t n = 1;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) n = std::lcm(n, m(r, c).conductor());
  return n;
}

// Nullspace over the cyclotomic field of a matrix given by rows.
std::vector<Vec> field_nullspace(std::vector<Vec> a, std::size_t columns, std::int64_t conductor) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const CyclotomicNumber inv = a[row][col].inverse();
    for (auto& x : a[row]) x = x * inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const CyclotomicNumber f = a[r][col];
      for (std::size_t c = 0; c < columns; ++c) a[r][c] = a[r][c] - f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    Vec v(columns, CyclotomicNumber(conductor));
    v[free] = CyclotomicNumber(conductor, Rational(1));
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_zero(const Matrix2& m) {
  return m(0, 0).is_zero() && m(0, 1).is_zero() && m(1, 0).is_zero() && m(1, 1).is_zero();
}

CyclotomicNumber power(CyclotomicNumber x, std::int64_t e) {
  CyclotomicNumber r(x.conductor(), Rational(1));
  while (e > 0) {
    if (e & 1) r = r * x;
    x = x * x;
    e >>= 1;
  }
  return r;
}

std::vector<std::int64_t> units_up_to_half(std::int64_t n) {
  std::vector<std::int64_t> ks{1};
  for (std::int64_t k = 2; 2 * k < n; ++k)
    if (std::gcd(k, n) == 1) ks.push_back(k);
  return ks;
}

// Exact test for |sigma_k(t)|^2 > 4 with a floating screen in front.
std::optional<std::int64_t> large_conjugate_trace(const CyclotomicNumber& t, std::int64_t n) {
  std::optional<CyclotomicNumber> excess;
  for (std::int64_t k : units_up_to_half(std::max<std::int64_t>(n, 3))) {
    if (std::gcd(k, t.conductor()) != 1) continue;
    if (std::norm(t.to_complex(k)) < 4.0 - 1e-6) continue;
    if (!excess) excess = t * t.conj() - CyclotomicNumber(t.conductor(), Rational(4));
    if (real_sign(excess->galois(k)) > 0) return k;
  }
  return std::nullopt;
}

constexpr std::array<char, 6> kLetters{'a', 'b', 'c', 'A', 'B', 'C'};

}  // namespace

MonodromyRep MonodromyRep::galois(std::int64_t k) const {
  MonodromyRep r = *this;
  r.g0 = g0.galois(k);
  r.g1 = g1.galois(k);
  r.gInf = gInf.galois(k);
  if (source_params) {
    const Rational kk(k);
    r.source_params = HypergeometricParams{kk * source_params->alpha, kk * source_params->beta,
                                           kk * source_params->gamma};
  }
  return r;
}

MonodromyRep levelt_generators(const HypergeometricParams& p) {
  if (!is_irreducible(p))
    throw Error(ErrorCode::ResonantInput, "parameters are resonant: the monodromy is reducible");
  const std::int64_t n = common_denominator(p);
  if (n > CyclotomicField::max_conductor())
    throw Error(ErrorCode::ConductorOverflow, "conductor " + std::to_string(n) + " exceeds bound " +
                                                  std::to_string(CyclotomicField::max_conductor()));
  const auto a = CyclotomicNumber::root_of_unity(frac(p.alpha), n);
  const auto b = CyclotomicNumber::root_of_unity(frac(p.beta), n);
  const auto c = CyclotomicNumber::root_of_unity(frac(p.gamma), n);
  const CyclotomicNumber one(n, Rational(1));
  const Matrix2 at_inf = Matrix2::companion(a * b, -(a + b));
  const Matrix2 at0_inv = Matrix2::companion(c, -(one + c));
  MonodromyRep r;
  r.conductor = n;
  r.gInf = at_inf;
  r.g0 = at0_inv.inverse();
  r.g1 = at0_inv * at_inf.inverse();
  r.source_params = p;
  return r;
}

std::optional<HermitianForm2> invariant_form(const MonodromyRep& r) {
  // Hermitian forms need a CM field; over Q work in Q(i).
  const std::int64_t n = r.conductor <= 2 ? 4 : r.conductor;
  const std::array<Matrix2, 2> gens{r.g0.embed(n), r.gInf.embed(n)};
  // unknowns h11, h12, h21, h22; rows (g^* H g - H)_{rc} = 0
  std::vector<Vec> rows;
  for (const auto& g : gens) {
    const Matrix2 ga = g.adjoint();
    for (std::size_t rr = 0; rr < 2; ++rr) {
      for (std::size_t cc = 0; cc < 2; ++cc) {
        Vec row;
        for (std::size_t i = 0; i < 2; ++i) {
          for (std::size_t j = 0; j < 2; ++j) {
            CyclotomicNumber coeff = ga(rr, i) * g(j, cc);
            if (i == rr && j == cc) coeff -= CyclotomicNumber(n, Rational(1));
            row.push_back(coeff);
          }
        }
        rows.push_back(std::move(row));
      }
    }
  }
  const auto basis = field_nullspace(std::move(rows), 4, n);
  if (basis.empty()) return std::nullopt;
  const Vec& v = basis.front();
  const Matrix2 h0(v[0], v[1], v[2], v[3]);
  Matrix2 h = h0 + h0.adjoint();
  if (is_zero(h)) {
    const CyclotomicNumber imag = CyclotomicNumber::zeta(n) - CyclotomicNumber::zeta(n, -1);
    h = Matrix2::scalar(imag) * (h0 - h0.adjoint());
  }
  CyclotomicNumber scale = h(0, 0);
  if (scale.is_zero()) scale = h(1, 1);
  if (scale.is_zero()) scale = h(0, 1) * h(0, 1).conj();
  return HermitianForm2(Matrix2::scalar(scale.inverse()) * h);
}

std::vector<ConjugateSignature> conjugate_signatures(const HermitianForm2& h) {
  const std::int64_t n = conductor_of(h.matrix());
  std::vector<ConjugateSignature> out;
  for (std::int64_t k : units_up_to_half(n)) out.push_back({k, hermitian_signature(h.galois(k))});
  return out;
}

std::string_view to_string(StopReason s) {
  switch (s) {
    case StopReason::Closed: return "Closed";
    case StopReason::BoundExceeded: return "BoundExceeded";
    case StopReason::InfiniteOrderElement: return "InfiniteOrderElement";
  }
  return "Unknown";
}

std::string_view to_string(MonodromyVerdict v) {
  switch (v) {
    case MonodromyVerdict::Finite: return "Finite";
    case MonodromyVerdict::Infinite: return "Infinite";
    case MonodromyVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

GroupClosureReport closure_bfs(const MonodromyRep& r, std::int64_t bound, const BfsOptions& options) {
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "BFS bound must be at least 1");
  GroupClosureReport report;
  report.bound = bound;
  try {
    const std::int64_t n = std::lcm(std::lcm(conductor_of(r.g0), conductor_of(r.g1)), conductor_of(r.gInf));
    const std::array<Matrix2, 3> base{r.g0.embed(n), r.g1.embed(n), r.gInf.embed(n)};
    std::vector<Matrix2> gens(base.begin(), base.end());
    for (const auto& g : base) gens.push_back(g.inverse());

    struct Node {
      std::int64_t parent;
      int letter;
    };
    std::vector<Matrix2> elements{Matrix2::identity(n)};
    std::vector<Node> nodes{{-1, -1}};
    std::unordered_map<Matrix2, std::int64_t, Matrix2Hash> index{{elements[0], 0}};
    const auto word = [&](std::int64_t i, int last) {
      std::string w(1, kLetters[static_cast<std::size_t>(last)]);
      for (; nodes[static_cast<std::size_t>(i)].parent >= 0; i = nodes[static_cast<std::size_t>(i)].parent)
        w.insert(w.begin(), kLetters[static_cast<std::size_t>(nodes[static_cast<std::size_t>(i)].letter)]);
      return w;
    };

    // A generator whose determinant is not a root of unity has infinite order.
    const std::int64_t root_order = std::lcm<std::int64_t>(2, n);
    const auto infinite_reason = [&](const Matrix2& g) -> std::optional<std::string> {
      if (!options.certify_infinite) return std::nullopt;
      const CyclotomicNumber t = g.trace();
      const CyclotomicNumber d = g.det();
      if (!power(d, root_order).is_one()) return "determinant is not a root of unity";
      if (auto k = large_conjugate_trace(t, n))
        return "trace " + t.str() + " has |sigma_" + std::to_string(*k) + "(tr)| > 2";
      if (t * t == CyclotomicNumber(n, Rational(4)) * d && !g.is_scalar())
        return "non-scalar element with a repeated eigenvalue (tr^2 = 4 det)";
      return std::nullopt;
    };

    for (std::size_t i = 0; i < 3; ++i) {
      if (auto why = infinite_reason(base[i])) {
        report.stop_reason = StopReason::InfiniteOrderElement;
        report.witness = std::string(1, kLetters[i]) + ": " + *why;
        report.elements_explored = 1;
        return report;
      }
    }

    for (std::size_t head = 0; head < elements.size(); ++head) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        Matrix2 next = elements[head] * gens[gi];
        if (index.count(next)) continue;
        const auto id = static_cast<std::int64_t>(elements.size());
        if (id >= bound) {
          report.stop_reason = StopReason::BoundExceeded;
          report.elements_explored = id + 1;
          return report;
        }
        if (auto why = infinite_reason(next)) {
          report.stop_reason = StopReason::InfiniteOrderElement;
          report.witness = word(static_cast<std::int64_t>(head), static_cast<int>(gi)) + ": " + *why;
          report.elements_explored = id + 1;
          return report;
        }
        index.emplace(next, id);
        elements.push_back(std::move(next));
        nodes.push_back({static_cast<std::int64_t>(head), static_cast<int>(gi)});
      }
    }
    const auto order = static_cast<std::int64_t>(elements.size());
    const auto scalars = std::count_if(elements.begin(), elements.end(), [](const Matrix2& m) { return m.is_scalar(); });
    report.finite_within_bound = true;
    report.stop_reason = StopReason::Closed;
    report.order_if_found = order;
    report.projective_order = order / scalars;
    report.elements_explored = order;
    return report;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ResourceLimit)
      throw Error(ErrorCode::ConductorOverflow, std::string("BFS entries outgrew exact arithmetic: ") + e.what());
    throw;
  }
}

FinitenessReport finiteness_report(const HypergeometricParams& p, std::int64_t bound, const BfsOptions& options) {
  if (!is_irreducible(p)) throw Error(ErrorCode::ResonantInput, "finiteness needs irreducible parameters");
  FinitenessReport rep;
  rep.params = p;
  rep.schwarz = schwarz_classify(p);
  rep.interlacing = interlacing_finiteness(p);

  const MonodromyRep gens = levelt_generators(p);
  rep.form = invariant_form(gens);
  if (rep.form) {
    rep.form_signatures = conjugate_signatures(*rep.form);
    bool all_definite = true;
    bool some_indefinite = false;
    for (const auto& s : rep.form_signatures) {
      all_definite = all_definite && s.signature.definite();
      some_indefinite = some_indefinite || s.signature.indefinite();
    }
    rep.form_verdict = some_indefinite ? MonodromyVerdict::Infinite
                       : all_definite  ? MonodromyVerdict::Finite
                                       : MonodromyVerdict::Unknown;
  }

  rep.bfs = closure_bfs(gens, bound, options);
  switch (rep.bfs.stop_reason) {
    case StopReason::Closed: rep.bfs_verdict = MonodromyVerdict::Finite; break;
    case StopReason::InfiniteOrderElement: rep.bfs_verdict = MonodromyVerdict::Infinite; break;
    case StopReason::BoundExceeded: rep.bfs_verdict = MonodromyVerdict::Unknown; break;
  }

  const auto as_verdict = [](const FinitenessVerdict& v) {
    return v.finite ? MonodromyVerdict::Finite : MonodromyVerdict::Infinite;
  };
  const std::array<std::pair<const char*, MonodromyVerdict>, 4> methods{{
      {"schwarz", as_verdict(rep.schwarz)},
      {"interlacing", as_verdict(rep.interlacing)},
      {"invariant_form", rep.form_verdict},
      {"closure_bfs", rep.bfs_verdict},
  }};
  const MonodromyVerdict reference = methods[0].second;
  for (const auto& [name, v] : methods) {
    if (v != MonodromyVerdict::Unknown && v != reference)
      rep.discrepancies.push_back(std::string(name) + " says " + std::string(to_string(v)) + ", schwarz says " +
                                  std::string(to_string(reference)));
  }
  if (rep.schwarz.finite && rep.interlacing.schwarz_type != rep.schwarz.schwarz_type)
    rep.discrepancies.push_back("interlacing group type " + std::string(to_string(rep.interlacing.schwarz_type)) +
                                " differs from table type " + std::string(to_string(rep.schwarz.schwarz_type)));
  if (rep.schwarz.finite && rep.bfs.projective_order) {
    const std::int64_t po = *rep.bfs.projective_order;
    bool fits = false;
    switch (rep.schwarz.schwarz_type) {
      case SchwarzType::Dihedral: fits = po >= 4 && po % 2 == 0; break;
      case SchwarzType::Tetrahedral: fits = po == 12; break;
      case SchwarzType::Octahedral: fits = po == 24; break;
      case SchwarzType::Icosahedral: fits = po == 60; break;
      default: break;
    }
    if (!fits)
      rep.discrepancies.push_back("projective order " + std::to_string(po) + " does not fit type " +
                                  std::string(to_string(rep.schwarz.schwarz_type)));
  }
  rep.methods_agree = rep.discrepancies.empty();
  rep.verdict = rep.methods_agree ? reference : MonodromyVerdict::Unknown;
  return rep;
}

}  // namespace cyclohodge
