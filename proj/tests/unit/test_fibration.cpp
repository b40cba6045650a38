#include <functional>
#include <numeric>

#include "doctest.h"

#include "cyclohodge/errors.hpp"
#include "cyclohodge/fibration.hpp"

using namespace cyclohodge;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

BranchData four_point(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return BranchData{n, {{"0", std::nullopt, a}, {"1", std::nullopt, b}, {"x", std::nullopt, c}, {"inf", std::nullopt, d}}};
}

FibrationSpec septic_spec() {
  FibrationSpec s;
  s.fiber_branch = four_point(7, 1, 1, 4, 1);
  s.base_genus = 3;
  s.base_cover = BaseCover{7, 0, {{"0", 7}, {"1", 7}, {"inf", 7}}};
  return s;
}

std::int64_t flat_rank(const FujitaReport& r) {
  std::int64_t s = 0;
  for (const auto& x : r.summands)
    if (x.kind == SummandKind::UnitaryFlat) s += x.rank;
  return s;
}

}  // namespace

TEST_CASE("Hirzebruch-Jung strings") {
  CHECK(hj_resolve({5, 2}).coefficients == std::vector<std::int64_t>{3, 2});
  CHECK(hj_resolve({7, 3}).coefficients == std::vector<std::int64_t>{3, 2, 2});
  CHECK(hj_resolve({7, 1}).coefficients == std::vector<std::int64_t>{7});
  CHECK(hj_resolve({7, 6}).coefficients == std::vector<std::int64_t>(6, 2));
  CHECK(code_of([] { hj_resolve({6, 4}); }) == ErrorCode::GcdNotOne);
  CHECK(code_of([] { hj_resolve({6, 6}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { hj_resolve({6, 0}); }) == ErrorCode::InvalidArgument);
  for (std::int64_t n = 2; n <= 50; ++n) {
    for (std::int64_t q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const auto s = hj_resolve({n, q});
      for (auto c : s.coefficients) CHECK(c >= 2);
      CHECK(s.value() == Rational(n, q));
    }
  }
}

TEST_CASE("semistable base order") {
  CHECK(semistable_base_order({2, 3}) == 6);
  CHECK(semistable_base_order({4, 6, 1}) == 12);
  CHECK(semistable_base_order({7}) == 7);
  CHECK(code_of([] { semistable_base_order({}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { semistable_base_order({2, 0}); }) == ErrorCode::InvalidArgument);
  // minimality against a brute-force search
  for (std::int64_t a = 1; a <= 12; ++a) {
    for (std::int64_t b = 1; b <= 12; ++b) {
      std::int64_t m = 1;
      while (m % a != 0 || m % b != 0) ++m;
      CHECK(semistable_base_order({a, b}) == m);
    }
  }
}

TEST_CASE("Kodaira signature identity") {
  const auto c = kodaira_degree_check(56, 3, 3, 8);
  CHECK(c.e == 16);
  CHECK(c.three_sigma == 24);
  CHECK(c.consistent);
  CHECK(c.degV_positive);
  for (std::int64_t b = 2; b <= 5; ++b) {
    for (std::int64_t g = 2; g <= 5; ++g) {
      for (std::int64_t sigma = 0; sigma <= 8; sigma += 4) {
        const std::int64_t e = 4 * (b - 1) * (g - 1);
        CHECK(kodaira_degree_check(2 * e + 3 * sigma, b, g, sigma).consistent);
        CHECK_FALSE(kodaira_degree_check(2 * e + 3 * sigma + 1, b, g, sigma).consistent);
        CHECK(kodaira_degree_check(2 * e + 3 * sigma, b, g, sigma).degV_positive == (sigma > 0));
      }
    }
  }
}

TEST_CASE("Fujita decomposition of the septic family") {
  const auto r = fujita_decomposition(septic_spec(), 20000);
  CHECK(r.total_rank == 6);
  REQUIRE(r.summands.size() == 3);
  CHECK(r.summands[0].kind == SummandKind::Ample);
  CHECK(r.summands[0].rank == 2);
  CHECK_FALSE(r.summands[0].monodromy);
  for (std::size_t i = 1; i < 3; ++i) {
    CHECK(r.summands[i].kind == SummandKind::UnitaryFlat);
    CHECK(r.summands[i].rank == 2);
    CHECK(*r.summands[i].monodromy == MonodromyVerdict::Infinite);
  }
  CHECK(*r.summands[1].character == 1);
  CHECK(*r.summands[2].character == 2);
  CHECK(r.semiample == Semiample::No);
  CHECK_FALSE(r.rationale.empty());
  const auto text = render_text(r, eigenspace_table(septic_spec().fiber_branch));
  CHECK(text.find("semi-ample: No") != std::string::npos);
}

TEST_CASE("Fujita decomposition without a base cover") {
  FibrationSpec s;
  s.fiber_branch = four_point(7, 1, 1, 4, 1);
  s.base_genus = 0;
  const auto r = fujita_decomposition(s, 20000);
  CHECK(r.semiample == Semiample::Yes);
  // local monodromy of order 7 survives: nothing is flat
  CHECK(flat_rank(r) == 0);
  CHECK(r.summands.size() == 1);
}

TEST_CASE("isotrivial family") {
  FibrationSpec s;
  s.fiber_branch = BranchData{7, {{"a", std::nullopt, 1}, {"b", std::nullopt, 2}, {"c", std::nullopt, 4}}};
  s.base_genus = 2;
  const auto r = fujita_decomposition(s, 20000);
  CHECK(r.total_rank == 3);
  CHECK(r.semiample == Semiample::Yes);
  CHECK(flat_rank(r) == 3);
  for (const auto& x : r.summands) CHECK(*x.monodromy == MonodromyVerdict::Finite);
}

TEST_CASE("semi-ampleness is monotone in the flat summands") {
  Summand ample;
  Summand fin{SummandKind::UnitaryFlat, 1, 1, MonodromyVerdict::Finite, std::nullopt};
  Summand inf{SummandKind::UnitaryFlat, 2, 2, MonodromyVerdict::Infinite, std::nullopt};
  Summand unk{SummandKind::UnitaryFlat, 2, 3, MonodromyVerdict::Unknown, std::nullopt};
  CHECK(semiample_verdict({ample, fin}, 2) == Semiample::Yes);
  CHECK(semiample_verdict({ample, fin, unk}, 2) == Semiample::Undetermined);
  CHECK(semiample_verdict({ample, fin, inf}, 2) == Semiample::No);
  CHECK(semiample_verdict({ample, fin, unk, inf}, 2) == Semiample::No);
  CHECK(semiample_verdict({inf}, 1) == Semiample::Yes);
  CHECK(semiample_verdict({}, 5) == Semiample::Yes);
}

TEST_CASE("Fujita decomposition errors") {
  auto s = septic_spec();
  s.base_genus = 2;
  CHECK(code_of([&] { fujita_decomposition(s, 20000); }) == ErrorCode::InconsistentSpec);

  s = septic_spec();
  s.base_cover->branch[0].over = "x";
  CHECK(code_of([&] { fujita_decomposition(s, 20000); }) == ErrorCode::InconsistentSpec);

  // infinite flat monodromy over an elliptic base
  s = FibrationSpec{};
  s.fiber_branch = four_point(7, 1, 1, 4, 1);
  s.base_genus = 1;
  for (const char* v : {"0", "1", "inf"}) s.singular_fiber_local_orders.push_back({v, {{1, 1}}});
  CHECK(code_of([&] { fujita_decomposition(s, 20000); }) == ErrorCode::InconsistentSpec);

  s.fiber_branch = BranchData{7, {{"a", std::nullopt, 1}, {"b", std::nullopt, 1}, {"c", std::nullopt, 1},
                                  {"d", std::nullopt, 1}, {"e", std::nullopt, 3}}};
  CHECK(code_of([&] { fujita_decomposition(s, 20000); }) == ErrorCode::NotFourPoints);
}

TEST_CASE("singular fibre overrides") {
  auto s = septic_spec();
  s.singular_fiber_local_orders.push_back({"0", {{1, 14}}});
  const auto r = fujita_decomposition(s, 20000);
  // character 1 now keeps local monodromy of order 14 at 0
  CHECK(flat_rank(r) == 2);
  CHECK(r.total_rank == 6);
}

TEST_CASE("rank accounting over four-point covers") {
  for (std::int64_t n : {5, 6, 7, 8}) {
    for (std::int64_t b = 1; b < n; ++b) {
      for (std::int64_t c = 1; c < n; ++c) {
        const std::int64_t d = ((-(1 + b + c)) % n + n) % n;
        if (d == 0) continue;
        FibrationSpec s;
        s.fiber_branch = four_point(n, 1, b, c, d);
        s.base_genus = 0;
        FujitaReport r;
        try {
          r = fujita_decomposition(s, 2000);
        } catch (const Error&) {
          continue;
        }
        std::int64_t total = 0;
        for (const auto& x : r.summands) total += x.rank;
        CHECK(total == r.total_rank);
        CHECK(r.total_rank == cover_genus(s.fiber_branch));
      }
    }
  }
}
