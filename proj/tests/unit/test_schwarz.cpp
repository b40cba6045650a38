#include <array>
#include <random>

#include "doctest.h"

#include "cyclohodge/errors.hpp"
#include "cyclohodge/schwarz.hpp"

using namespace cyclohodge;

namespace {

using Triple = std::array<Rational, 3>;

Triple sorted(Triple t) {
  std::sort(t.begin(), t.end());
  return t;
}

// Lexicographically least sorted non-negative image under sign changes and
// integer shifts of even total, with |shift| <= 2.
Triple bounded_search_canonical(const Triple& t) {
  std::optional<Triple> best;
  for (int signs = 0; signs < 8; ++signs) {
    for (int a = -2; a <= 2; ++a) {
      for (int b = -2; b <= 2; ++b) {
        for (int c = -2; c <= 2; ++c) {
          if ((a + b + c) % 2 != 0) continue;
          const std::array<int, 3> shift{a, b, c};
          Triple img;
          bool ok = true;
          for (std::size_t i = 0; i < 3; ++i) {
            img[i] = ((signs >> i) & 1 ? -t[i] : t[i]) + Rational(shift[i]);
            ok = ok && img[i] >= Rational(0);
          }
          if (!ok) continue;
          img = sorted(img);
          if (!best || img < *best) best = img;
        }
      }
    }
  }
  return *best;
}

Triple as_triple(const SchwarzTriple& s) { return {s.lambda, s.mu, s.nu}; }

}  // namespace

TEST_CASE("builtin table") {
  const auto& t = SchwarzTable::builtin();
  CHECK(t.version() == 1);
  REQUIRE(t.rows().size() == 15);
  CHECK(t.rows()[0].type == SchwarzType::Dihedral);
  CHECK_FALSE(t.rows()[0].canonical);
  int icosahedral = 0;
  for (const auto& r : t.rows()) icosahedral += r.type == SchwarzType::Icosahedral;
  CHECK(icosahedral == 10);
}

TEST_CASE("table parsing errors") {
  CHECK_THROWS_AS(SchwarzTable::parse("2 1/2 1/3 1/3 tetrahedral\n"), Error);
  CHECK_THROWS_AS(SchwarzTable::parse("version 1\n2 1/2 1/3 tetrahedral\n"), Error);
  CHECK_THROWS_AS(SchwarzTable::parse("version 1\n2 1/2 1/3 1/3 cubic\n"), Error);
  CHECK_THROWS_AS(SchwarzTable::parse("version 1\n1 1/2 1/3 * dihedral\n"), Error);
  try {
    SchwarzTable::parse("version 1\n2 1/2 x 1/3 tetrahedral\n");
    FAIL("expected TableFormat");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TableFormat);
  }
  const auto t = SchwarzTable::parse("# only one row\nversion 3\n1 1/2 1/3 1/5 icosahedral\n");
  CHECK(t.version() == 3);
  CHECK(t.rows().size() == 1);
}

TEST_CASE("schwarz lookup examples") {
  const auto tet = schwarz_lookup({Rational(1, 2), Rational(1, 3), Rational(1, 3)});
  CHECK(tet.finite);
  CHECK(tet.schwarz_type == SchwarzType::Tetrahedral);
  CHECK(tet.case_number == 2);
  const auto septic = schwarz_lookup({Rational(2, 7), Rational(2, 7), Rational(5, 7)});
  CHECK_FALSE(septic.finite);
  CHECK(septic.schwarz_type == SchwarzType::Infinite);
  const auto dih = schwarz_lookup({Rational(1, 2), Rational(7, 2), Rational(4, 5)});
  CHECK(dih.schwarz_type == SchwarzType::Dihedral);
  // shifted and negated icosahedral row
  const auto ico = schwarz_lookup({Rational(-1, 2), Rational(4, 3), Rational(1, 5)});
  CHECK(ico.schwarz_type == SchwarzType::Icosahedral);
  // the parity of the integer shifts matters when no entry is 1/2
  CHECK(schwarz_lookup({Rational(4, 3), Rational(1, 3), Rational(1, 3)}).schwarz_type == SchwarzType::Tetrahedral);
  CHECK_FALSE(schwarz_lookup({Rational(1, 3), Rational(1, 3), Rational(1, 3)}).finite);
}

TEST_CASE("reducible parameters are not classified") {
  const auto v = schwarz_classify({Rational(1), Rational(1, 3), Rational(1, 2)});
  CHECK(v.schwarz_type == SchwarzType::ReducibleNotApplicable);
  CHECK_FALSE(v.finite);
  try {
    interlacing_finiteness({Rational(1), Rational(1, 3), Rational(1, 2)});
    FAIL("expected ResonantInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ResonantInput);
  }
}

TEST_CASE("normalisation matches a bounded move search") {
  for (int n = 1; n <= 12; ++n) {
    for (int a = -n; a <= 2 * n; ++a) {
      for (int b = 0; b <= n; b += 1) {
        for (int c = 0; c <= n; c += 2) {
          const Triple t{Rational(a, n), Rational(b, n), Rational(c, n)};
          CHECK(as_triple(normalize_triple(t[0], t[1], t[2])) == bounded_search_canonical(t));
        }
      }
    }
  }
}

TEST_CASE("normalisation is invariant under random moves") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-60, 60);
  std::uniform_int_distribution<int> den(1, 12);
  std::uniform_int_distribution<int> shift(-9, 9);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < 3000; ++i) {
    Triple t{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    const auto canon = normalize_triple(t[0], t[1], t[2]);
    Triple moved = t;
    int total = 0;
    for (auto& x : moved) {
      const int s = shift(rng);
      total += s;
      x = (coin(rng) ? -x : x) + Rational(s);
    }
    if (total % 2 != 0) moved[0] += Rational(1);
    std::shuffle(moved.begin(), moved.end(), rng);
    CHECK(normalize_triple(moved[0], moved[1], moved[2]) == canon);
  }
}

TEST_CASE("interlacing examples") {
  const auto septic = interlacing_finiteness({Rational(8, 7), Rational(3, 7), Rational(9, 7)});
  CHECK_FALSE(septic.finite);
  REQUIRE(septic.failing_k);
  CHECK(*septic.failing_k == 3);
  const auto klein = interlacing_finiteness({Rational(1, 4), Rational(-1, 4), Rational(1, 2)});
  CHECK(klein.finite);
  CHECK(klein.schwarz_type == SchwarzType::Dihedral);
  const auto tet = interlacing_finiteness({Rational(1, 4), Rational(-1, 12), Rational(1, 2)});
  CHECK(tet.finite);
  CHECK(tet.schwarz_type == SchwarzType::Tetrahedral);
  CHECK(interlaces(Rational(1, 4), Rational(3, 4), Rational(0), Rational(1, 2)));
  CHECK_FALSE(interlaces(Rational(1, 4), Rational(1, 3), Rational(0), Rational(1, 2)));
  CHECK_FALSE(interlaces(Rational(0), Rational(1, 3), Rational(0), Rational(1, 2)));
}

TEST_CASE("schwarz table and interlacing agree on the denominator <= 12 sweep") {
  int count = 0;
  int finite = 0;
  for (int n = 1; n <= 12; ++n) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b <= a; ++b) {
        for (int c = 0; c < n; ++c) {
          const HypergeometricParams p{Rational(a, n), Rational(b, n), Rational(c, n)};
          if (!is_irreducible(p)) continue;
          const auto s = schwarz_classify(p);
          const auto i = interlacing_finiteness(p);
          CHECK(s.finite == i.finite);
          if (s.finite) CHECK(s.schwarz_type == i.schwarz_type);
          ++count;
          finite += s.finite;
        }
      }
    }
  }
  CHECK(count > 0);
  CHECK(finite > 0);
}
