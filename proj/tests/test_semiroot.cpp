#include <doctest.h>

#include "helpers.hpp"

using namespace cusp;

namespace {

const ExtendedStandardBasis& basis_5_11() {
  static const ExtendedStandardBasis b = compute_extended_standard_basis(fixtures::curve_5_11());
  return b;
}

}  // namespace

TEST_SUITE("semiroot") {
  TEST_CASE("semiroots of the (5,11) curve") {
    const auto& b = basis_5_11();
    const PuiseuxPair& pair = b.curve.pair();
    for (long a : {1L, 2L, -3L}) {
      const Rational q(a);
      const PuiseuxCurve r1 = solve_invariant_branch(b.form(1), q, pair, 60);
      REQUIRE(r1.y_terms().size() == 1);
      CHECK(r1.y_terms()[0] == std::pair<Int, Rational>{11, q});
      const PuiseuxCurve r2 = solve_invariant_branch(b.form(2), q, pair, 60);
      CHECK(r2.y()[11] == q);
      CHECK(r2.y()[12] == q * q);
      CHECK(r2.y()[13] == Rational(23, 22) * q * q * q);
      CHECK(r2.y()[14] == Rational(136, 121) * q * q * q * q);
      // c_{m+j} scales like a^{j+1}
      const PuiseuxCurve unit = solve_invariant_branch(b.form(2), 1, pair, 60);
      Rational power = q;
      for (Int j = 0; j < 20; ++j, power *= q) CHECK(r2.y()[11 + j] == unit.y()[11 + j] * power);
      CHECK_FALSE(oracle::order(fixtures::naive_pullback(r2, b.form(2), 60)).has_value());
    }
  }

  TEST_CASE("semiroots of the (7,17) curve") {
    const auto b = compute_extended_standard_basis(fixtures::curve_7_17());
    for (long a : {1L, 2L, 3L}) {
      const PuiseuxCurve r = solve_invariant_branch(b.form(2), a, b.curve.pair(), semiroot_truncation(b.curve.pair()));
      CHECK(r.y()[17] == a);
      for (Int k = 18; k < 30; ++k) CHECK(r.y()[k] == 0);
      CHECK(r.y()[30] == a * a * a);
      CHECK(r.y()[33] == a * a * a * a);
      const auto rep = verify_main_theorem(b, 2, a);
      CHECK(rep.pass());
      CHECK(*rep.computed == std::vector<Int>{7, 17, 37});
      // the semiroot semimodule is strictly smaller than the source one
      const GammaSemimodule mine(b.semimodule.semigroup(), *rep.computed);
      for (Int p = 0; p < b.semimodule.semigroup().conductor(); ++p)
        if (mine.contains(p)) CHECK(b.semimodule.contains(p));
      CHECK_FALSE(mine.contains(57));
    }
  }

  TEST_CASE("errors") {
    const PuiseuxPair pair(5, 11);
    CHECK_THROWS_WITH_AS(solve_invariant_branch(OneForm::dy(), 1, pair, 60), doctest::Contains("NotDicritical"), Error);
    CHECK_THROWS_AS(solve_invariant_branch(basis_5_11().form(1), 0, pair, 60), Error);
    CHECK_THROWS_AS(verify_main_theorem(basis_5_11(), 0, 1), Error);
    CHECK_THROWS_AS(verify_main_theorem(basis_5_11(), 5, 1), Error);
  }

  TEST_CASE("main theorem reports") {
    const auto& b = basis_5_11();
    const auto rep = verify_main_theorem(b, 2, 1);
    CHECK(rep.pass());
    CHECK(*rep.computed == std::vector<Int>{5, 11, 17});
    CHECK(*rep.oracle == std::vector<Int>{5, 11, 17});
    CHECK_NOTHROW(enforce(rep));
    SemirootReport broken = rep;
    broken.checks.push_back({"forced", false, "x"});
    CHECK_THROWS_WITH_AS(enforce(broken), doctest::Contains("VerificationFailure"), Error);

    // i = s + 1 at the source's leading coefficient gives back the source curve.
    const auto top = verify_main_theorem(b, b.s() + 1, b.curve.leading_coefficient());
    CHECK(top.pass());
    CHECK(*top.computed == b.lambda());
    const TruncatedSeries& y = top.curve.y();
    for (Int k = 0; k < y.truncation(); ++k) CHECK(y[k] == (k >= 11 && k <= 13 ? Rational(1) : Rational(0)));
  }

  TEST_CASE("Zariski invariants") {
    CHECK_FALSE(zariski_invariant(fixtures::monomial_5_11()).has_value());
    CHECK(zariski_invariant(fixtures::curve_5_11()) == 12);
    const PuiseuxPair pair(4, 9);
    CHECK(zariski_invariant(fixtures::family_4_9(1, default_truncation(pair))) == 19);
    CHECK(zariski_invariant(fixtures::family_4_9(2, default_truncation(pair))) == 10);
    CHECK(zariski_invariant(fixtures::family_4_9(3, default_truncation(pair))) == 10);
  }
}
