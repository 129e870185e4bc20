#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace cusp;

TEST_SUITE("semigroup") {
  TEST_CASE("membership examples") {
    const CuspSemigroup g(PuiseuxPair(5, 11));
    CHECK(g.contains(16));
    CHECK(g.contains(0));
    CHECK_FALSE(g.contains(39));
    CHECK(g.contains(39) == oracle::in_gamma(5, 11, 39));
    CHECK_FALSE(g.contains(-5));
  }

  TEST_CASE("representation examples") {
    const CuspSemigroup g(PuiseuxPair(5, 11));
    CHECK(g.represent(16) == GammaRepresentation{1, 1});
    CHECK_THROWS_WITH_AS(g.represent(55), doctest::Contains("NotUniqueRange"), Error);
    CHECK_THROWS_WITH_AS(g.represent(39), doctest::Contains("NotInSemigroup"), Error);
    const CuspSemigroup h(PuiseuxPair(7, 17));
    // brute force over a <= 7, b <= 3
    std::vector<GammaRepresentation> reps;
    for (Int a = 0; a <= 7; ++a)
      for (Int b = 0; b <= 3; ++b)
        if (7 * a + 17 * b == 51) reps.push_back({a, b});
    REQUIRE(reps.size() == 1);
    CHECK(h.represent(51) == reps[0]);
  }

  TEST_CASE("co-pair examples") {
    CHECK(copair(PuiseuxPair(4, 9)) == CoPair{3, 7});
    CHECK(copair(PuiseuxPair(1, 1)) == CoPair{0, 1});
    Int d = 1;
    while ((d * 5) % 11 != 1) ++d;
    CHECK(copair(PuiseuxPair(5, 11)) == CoPair{(d * 5 - 1) / 11, d});
    CHECK(copair(PuiseuxPair(5, 11)) == CoPair{4, 9});
  }

  TEST_CASE("pair validation") {
    CHECK_THROWS_AS(PuiseuxPair(4, 6), Error);
    CHECK_THROWS_AS(PuiseuxPair(9, 4), Error);
    CHECK_THROWS_AS(PuiseuxPair(0, 3), Error);
    CHECK_NOTHROW(PuiseuxPair(1, 7));
    CHECK(CuspSemigroup(PuiseuxPair(1, 7)).conductor() == 0);
    CHECK_THROWS_AS(require_singular(PuiseuxPair(1, 7)), Error);
  }

  TEST_CASE("membership agrees with brute force") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const PuiseuxPair pair = fixtures::random_pair(rng, 12, 15);
      const CuspSemigroup g(pair);
      for (Int p = 0; p < 200; ++p) REQUIRE(g.contains(p) == oracle::in_gamma(pair.n(), pair.m(), p));
      for (Int p = 0; p < pair.product(); ++p) {
        if (!g.contains(p)) continue;
        const auto r = g.represent(p);
        REQUIRE(r.a * pair.n() + r.b * pair.m() == p);
      }
      for (Int k = 0; k < 3 * pair.product(); ++k) REQUIRE(g.contains(g.conductor() + k));
      CHECK_FALSE(g.contains(g.conductor() - 1));
      CHECK(g.conductor() == (pair.n() - 1) * (pair.m() - 1));
    }
  }

  TEST_CASE("co-pair identity and slopes") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
      const PuiseuxPair pair = fixtures::random_pair(rng, 15, 30);
      const CoPair c = copair(pair);
      const Int n = pair.n(), m = pair.m();
      REQUIRE(c.d * n - c.b * m == 1);
      CHECK(0 <= c.b);
      CHECK(c.b < n);
      CHECK(0 < c.d);
      CHECK(c.d <= m);
      if (m - c.d > 0 && c.d > 0) {
        // -(n-b)/(m-d) < -n/m < -b/d
        CHECK((n - c.b) * m > n * (m - c.d));
        CHECK(n * c.d > c.b * m);
      }
    }
  }
}
