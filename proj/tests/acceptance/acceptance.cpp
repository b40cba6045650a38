// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit 1 on any failure.
//
//   acceptance [--regenerate] [--pure-bfs]
//
// --regenerate rewrites the frozen finite group orders of the sweep.
// --pure-bfs also runs the sweep closure without infinite-order certificates.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "cyclohodge/errors.hpp"
#include "cyclohodge/fibration.hpp"
#include "cyclohodge/jobs.hpp"

using namespace cyclohodge;

namespace {

constexpr std::int64_t kBound = 20000;
const std::string kGolden = std::string(CYCLOHODGE_TEST_DATA) + "/sweep_finite_orders.txt";

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      out_.pass = false;
      if (!out_.detail.empty()) out_.detail += "; ";
      out_.detail += what;
    }
  }
  void note(const std::string& s) { note_ = s; }
  Outcome result() const {
    Outcome o = out_;
    if (o.pass) o.detail = note_;
    return o;
  }

 private:
  Outcome out_;
  std::string note_;
};

BranchData septic_cover() {
  return BranchData{7, {{"0", std::nullopt, 1}, {"1", std::nullopt, 1}, {"inf", std::nullopt, 1}, {"x", std::nullopt, 4}}};
}

const HypergeometricParams kSeptic{Rational(8, 7), Rational(3, 7), Rational(9, 7)};

FibrationSpec septic_spec() {
  FibrationSpec s;
  s.fiber_branch = septic_cover();
  s.base_genus = 3;
  s.base_cover = BaseCover{7, 0, {{"0", 7}, {"1", 7}, {"inf", 7}}};
  return s;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return "(" + os.str() + ")";
}

struct SweepCase {
  int n, a, b, c;
  HypergeometricParams p;
};

std::vector<SweepCase> sweep_cases() {
  std::vector<SweepCase> out;
  for (int n = 1; n <= 12; ++n)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b <= a; ++b)
        for (int c = 0; c < n; ++c) {
          HypergeometricParams p{Rational(a, n), Rational(b, n), Rational(c, n)};
          if (is_irreducible(p)) out.push_back({n, a, b, c, p});
        }
  return out;
}

// One line per finite case: "N a b c order projective_order".
using FrozenOrders = std::vector<std::string>;

struct SweepRun {
  std::size_t cases = 0;
  std::size_t finite = 0;
  std::size_t disagreements = 0;
  std::size_t incoherent = 0;
  std::string first_problem;
  FrozenOrders orders;
};

SweepRun run_sweep(const std::vector<SweepCase>& cases, bool with_bfs, const BfsOptions& opt) {
  SweepRun r;
  for (const auto& sc : cases) {
    ++r.cases;
    const auto s = schwarz_classify(sc.p);
    const auto i = interlacing_finiteness(sc.p);
    const std::string tag = "(" + sc.p.alpha.str() + "," + sc.p.beta.str() + "," + sc.p.gamma.str() + ")";
    if (s.finite != i.finite || (s.finite && s.schwarz_type != i.schwarz_type)) {
      ++r.disagreements;
      if (r.first_problem.empty()) r.first_problem = "schwarz/interlacing disagree at " + tag;
    }
    r.finite += s.finite;
    if (!with_bfs) continue;
    const auto g = closure_bfs(levelt_generators(sc.p), kBound, opt);
    const bool closed = g.stop_reason == StopReason::Closed;
    if (closed != s.finite) {
      ++r.incoherent;
      if (r.first_problem.empty()) r.first_problem = "closure " + std::string(to_string(g.stop_reason)) + " at " + tag;
    }
    if (closed) {
      std::ostringstream line;
      line << sc.n << " " << sc.a << " " << sc.b << " " << sc.c << " " << *g.order_if_found << " "
           << *g.projective_order;
      r.orders.push_back(line.str());
    }
  }
  return r;
}

FrozenOrders read_golden() {
  FrozenOrders out;
  std::ifstream in(kGolden);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line.front() != '#') out.push_back(line);
  return out;
}

void write_golden(const FrozenOrders& orders) {
  std::ofstream out(kGolden);
  out << "# N a b c order projective_order for (a/N, b/N, c/N) with finite monodromy\n";
  for (const auto& l : orders) out << l << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclohodge acceptance suite"};
  bool regenerate = false;
  bool pure_bfs = false;
  app.add_flag("--regenerate", regenerate, "Rewrite the frozen sweep group orders");
  app.add_flag("--pure-bfs", pure_bfs, "Also run the sweep closure without infinite-order certificates");
  CLI11_PARSE(app, argc, argv);

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

  const auto table = eigenspace_table(septic_cover());

  criteria.emplace_back("genus of the n=7, m=(1,1,1,4) curve is 6", [&] {
    Check c;
    const auto out = run_command("analyze-cover", to_json(septic_cover()), {}).json;
    c.expect(out["genus"] == 6, "genus " + out["genus"].dump());
    c.expect(cover_genus(septic_cover()) == 6, "cover_genus");
    c.note("genus 6");
    return c.result();
  });

  criteria.emplace_back("eigenspace dimensions (2,2,1,1,0,0)", [&] {
    Check c;
    std::vector<std::int64_t> dims;
    for (const auto& r : table.rows) dims.push_back(r.h10);
    c.expect(dims == std::vector<std::int64_t>{2, 2, 1, 1, 0, 0}, "got " + join(dims));
    c.note(join(dims));
    return c.result();
  });

  criteria.emplace_back("eigensheaf degrees (1,1,2,2,3,3)", [&] {
    Check c;
    std::vector<std::int64_t> deg;
    for (const auto& r : table.rows) deg.push_back(r.eigensheaf_degree);
    c.expect(deg == std::vector<std::int64_t>{1, 1, 2, 2, 3, 3}, "got " + join(deg));
    c.note(join(deg));
    return c.result();
  });

  criteria.emplace_back("j=1,2 unitary flat of rank 2; j=3,4 mixed (1,1)", [&] {
    Check c;
    for (int j : {1, 2}) {
      const auto& r = table.row(j);
      c.expect(r.unitary_flat && r.h10 == 2 && r.h01 == 0, "j=" + std::to_string(j));
    }
    for (int j : {3, 4}) {
      const auto& r = table.row(j);
      c.expect(!r.unitary_flat && r.h10 == 1 && r.h01 == 1, "j=" + std::to_string(j));
    }
    c.note("flat: 1,2; mixed: 3,4");
    return c.result();
  });

  criteria.emplace_back("j=1 hypergeometric parameters (8/7, 3/7, 9/7)", [&] {
    Check c;
    const auto p = character_to_hg(septic_cover(), 1);
    c.expect(p == kSeptic, "got (" + p.alpha.str() + "," + p.beta.str() + "," + p.gamma.str() + ")");
    c.note("(" + p.alpha.str() + ", " + p.beta.str() + ", " + p.gamma.str() + ")");
    return c.result();
  });

  criteria.emplace_back("local orders (7,7,7) and irreducible", [&] {
    Check c;
    const auto lo = local_orders(kSeptic);
    c.expect(lo.at0.order == 7 && lo.at1.order == 7 && lo.at_inf.order == 7,
             "got " + join(std::vector<std::int64_t>{lo.at0.order, lo.at1.order, lo.at_inf.order}));
    c.expect(is_irreducible(kSeptic), "reducible");
    c.note("(7,7,7), irreducible");
    return c.result();
  });

  criteria.emplace_back("four finiteness methods report infinite monodromy for (8/7,3/7,9/7)", [&] {
    Check c;
    const auto s = schwarz_classify(kSeptic);
    c.expect(!s.finite, "schwarz finite");
    const auto i = interlacing_finiteness(kSeptic);
    c.expect(!i.finite, "interlacing finite");
    const auto h = invariant_form(levelt_generators(kSeptic));
    bool indefinite = false;
    if (h)
      for (const auto& cs : conjugate_signatures(*h)) indefinite = indefinite || cs.signature.indefinite();
    c.expect(indefinite, "no indefinite conjugate form");
    BfsOptions pure;
    pure.certify_infinite = false;
    const auto g = closure_bfs(levelt_generators(kSeptic), kBound, pure);
    c.expect(!g.finite_within_bound && g.stop_reason == StopReason::BoundExceeded, "closure closed");
    c.note("closure open after " + std::to_string(g.elements_explored) + " elements; interlacing fails at k=" +
           (i.failing_k ? std::to_string(*i.failing_k) : std::string("?")));
    return c.result();
  });

  const auto cases = sweep_cases();
  SweepRun first;
  SweepRun second;
  bool sweep_done = false;
  const auto do_sweep = [&] {
    if (sweep_done) return;
    first = run_sweep(cases, true, {});
    second = run_sweep(cases, true, {});
    sweep_done = true;
  };

  criteria.emplace_back("Schwarz table and interlacing agree on the N <= 12 sweep", [&] {
    Check c;
    do_sweep();
    c.expect(first.disagreements == 0,
             std::to_string(first.disagreements) + " disagreements, first " + first.first_problem);
    c.note(std::to_string(first.cases) + " irreducible triples, " + std::to_string(first.finite) +
           " finite, 0 disagreements");
    return c.result();
  });

  criteria.emplace_back("closure terminates exactly on finite cases; frozen orders stable", [&] {
    Check c;
    do_sweep();
    c.expect(first.incoherent == 0, std::to_string(first.incoherent) + " incoherent, first " + first.first_problem);
    c.expect(first.orders == second.orders, "orders differ between runs");
    if (regenerate) write_golden(first.orders);
    const auto golden = read_golden();
    c.expect(!golden.empty(), "no frozen orders at " + kGolden);
    c.expect(golden == first.orders, "orders differ from " + kGolden);
    std::string note = std::to_string(first.orders.size()) + " closed groups match the frozen orders";
    if (pure_bfs) {
      BfsOptions pure;
      pure.certify_infinite = false;
      const auto p = run_sweep(cases, true, pure);
      c.expect(p.incoherent == 0, "pure closure: " + std::to_string(p.incoherent) + " incoherent, first " +
                                      p.first_problem);
      c.expect(p.orders == first.orders, "pure closure orders differ");
      note += "; pure closure agrees";
    }
    c.note(note);
    return c.result();
  });

  criteria.emplace_back("Hurwitz genus of the base cover is 3", [&] {
    Check c;
    const auto g = hurwitz_base_genus(7, 0, {7, 7, 7});
    c.expect(g == 3, "got " + std::to_string(g));
    c.note("genus " + std::to_string(g));
    return c.result();
  });

  criteria.emplace_back("Hirzebruch-Jung strings and round trip for n <= 50", [&] {
    Check c;
    c.expect(hj_resolve({7, 3}).coefficients == std::vector<std::int64_t>{3, 2, 2}, "(7,3)");
    c.expect(hj_resolve({7, 6}).coefficients == std::vector<std::int64_t>(6, 2), "(7,6)");
    int count = 0;
    for (std::int64_t n = 2; n <= 50; ++n)
      for (std::int64_t q = 1; q < n; ++q) {
        if (std::gcd(n, q) != 1) continue;
        const auto s = hj_resolve({n, q});
        const bool ok = s.value() == Rational(n, q) &&
                        std::all_of(s.coefficients.begin(), s.coefficients.end(), [](auto x) { return x >= 2; });
        c.expect(ok, "round trip (" + std::to_string(n) + "," + std::to_string(q) + ")");
        ++count;
      }
    c.note("(7,3) -> [3,2,2], (7,6) -> [2^6], " + std::to_string(count) + " round trips");
    return c.result();
  });

  criteria.emplace_back("semistable base orders 28 and 42", [&] {
    Check c;
    const auto a = semistable_base_order({7, 4, 2, 1, 1});
    const auto b = semistable_base_order({1, 2, 3, 7, 3, 2, 1});
    c.expect(a == 28, "got " + std::to_string(a));
    c.expect(b == 42, "got " + std::to_string(b));
    c.note(std::to_string(a) + ", " + std::to_string(b));
    return c.result();
  });

  criteria.emplace_back("Fujita report A(2) + Q1(2, Infinite) + Q2(2, Infinite), not semi-ample", [&] {
    Check c;
    const auto r = fujita_decomposition(septic_spec(), kBound);
    c.expect(r.total_rank == 6, "total rank " + std::to_string(r.total_rank));
    const bool shape = r.summands.size() == 3 && r.summands[0].kind == SummandKind::Ample &&
                       r.summands[0].rank == 2 && r.summands[1].character == 1 && r.summands[1].rank == 2 &&
                       r.summands[1].monodromy == MonodromyVerdict::Infinite && r.summands[2].character == 2 &&
                       r.summands[2].rank == 2 && r.summands[2].monodromy == MonodromyVerdict::Infinite;
    c.expect(shape, "unexpected summands");
    c.expect(r.semiample == Semiample::No, "semiample " + std::string(to_string(r.semiample)));
    // base of genus <= 1
    FibrationSpec low;
    low.fiber_branch = septic_cover();
    low.base_genus = 1;
    c.expect(fujita_decomposition(low, kBound).semiample == Semiample::Yes, "base genus 1");
    c.expect(semiample_verdict(r.summands, 1) == Semiample::Yes, "base genus rule");
    // every flat summand of rank 1
    FibrationSpec iso;
    iso.fiber_branch = BranchData{7, {{"a", std::nullopt, 1}, {"b", std::nullopt, 2}, {"c", std::nullopt, 4}}};
    iso.base_genus = 3;
    const auto ri = fujita_decomposition(iso, kBound);
    bool all_rank1 = !ri.summands.empty();
    for (const auto& s : ri.summands) all_rank1 = all_rank1 && s.kind == SummandKind::UnitaryFlat && s.rank == 1;
    c.expect(all_rank1 && ri.semiample == Semiample::Yes, "rank-1 flat rule");
    c.note("total rank 6 = A(2) + Q_1(2, Infinite) + Q_2(2, Infinite), semi-ample No; both Yes rules hold");
    return c.result();
  });

  criteria.emplace_back("Kodaira signature identity on a grid", [&] {
    Check c;
    int count = 0;
    for (std::int64_t b = 2; b <= 8; ++b)
      for (std::int64_t g = 2; g <= 8; ++g)
        for (std::int64_t sigma = -4; sigma <= 12; ++sigma) {
          const std::int64_t e = 4 * (b - 1) * (g - 1);
          const auto k = kodaira_degree_check(2 * e + 3 * sigma, b, g, sigma);
          c.expect(k.consistent && k.e == e && k.degV_positive == (sigma > 0), "grid point");
          c.expect(!kodaira_degree_check(2 * e + 3 * sigma + 1, b, g, sigma).consistent, "perturbed point");
          ++count;
        }
    c.note(std::to_string(count) + " grid points");
    return c.result();
  });

  criteria.emplace_back("sum of h10 equals the genus on 200 random covers", [&] {
    Check c;
    std::mt19937 rng(20240607);
    std::uniform_int_distribution<std::int64_t> order(2, 12);
    std::uniform_int_distribution<int> count(3, 7);
    int done = 0;
    while (done < 200) {
      const std::int64_t n = order(rng);
      const int r = count(rng);
      // exponents are units mod n, so every character has nontrivial local monodromy
      std::vector<std::int64_t> units;
      for (std::int64_t u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1) units.push_back(u);
      std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
      BranchData b;
      b.order = n;
      std::int64_t sum = 0;
      for (int i = 0; i + 1 < r; ++i) {
        b.branch.push_back({"p" + std::to_string(i), std::nullopt, units[pick(rng)]});
        sum += b.branch.back().exponent;
      }
      const std::int64_t last = ((-sum) % n + n) % n;
      if (std::gcd(last, n) != 1) continue;
      b.branch.push_back({"p" + std::to_string(r - 1), std::nullopt, last});
      const std::int64_t g = cover_genus(b);
      const auto t = eigenspace_table(b);
      std::int64_t s = 0;
      for (const auto& row : t.rows) s += row.h10;
      c.expect(s == g, "n=" + std::to_string(n));
      ++done;
    }
    c.note("200 covers");
    return c.result();
  });

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "AC" << (i + 1) << " " << criteria[i].first;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << " (" << std::fixed << std::setprecision(2) << secs << " s)\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
