#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace cusp;

namespace {

const CuspSemigroup G511{PuiseuxPair(5, 11)};
const CuspSemigroup G717{PuiseuxPair(7, 17)};

std::vector<long> to_long(const std::vector<Int>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("semimodule") {
  TEST_CASE("minimal basis examples") {
    CHECK(minimal_basis(G511, {5, 11, 16, 17}) == std::vector<Int>{5, 11, 17});
    CHECK(oracle::members(5, 11, {5, 11}, 60).count(16));
    CHECK(minimal_basis(G511, {5}) == std::vector<Int>{5});
    CHECK(minimal_basis(G511, {5, 11, 17, 23, 29}) == std::vector<Int>{5, 11, 17, 23, 29});
  }

  TEST_CASE("axes") {
    const GammaSemimodule sm(G511, {5, 11, 17, 23, 29});
    CHECK(sm.axes() == std::vector<Int>{5, 16, 22, 28, 34});
    const GammaSemimodule s0(G511, {5, 11});
    CHECK(s0.axes() == std::vector<Int>{5, 16});
    CHECK(to_long(s0.axes()) == oracle::axes(5, 11, {5, 11}, 200));
    const GammaSemimodule s7(G717, {7, 17, 37, 57});
    CHECK(to_long(s7.axes()) == oracle::axes(7, 17, {7, 17, 37, 57}, 300));
  }

  TEST_CASE("limits") {
    const GammaSemimodule sm(G511, {5, 11, 17, 23, 29});
    CHECK(sm.limits(0) == Limits{1, 4});
    CHECK(sm.limits(1) == Limits{1, 3});
    const GammaSemimodule s7(G717, {7, 17, 37, 57});
    const auto [l1, l2] = oracle::limits(7, 17, {7, 17, 37, 57}, 2, 400);
    CHECK(s7.limits(2) == Limits{l1, l2});
    for (int i = 0; i <= s7.s(); ++i) {
      const Limits l = s7.limits(i);
      CHECK(s7.axis(i + 1) == std::min(s7.lambda(i) + 7 * l.ell1, s7.lambda(i) + 17 * l.ell2));
    }
    CHECK_THROWS_WITH_AS(s7.limits(3), doctest::Contains("IndexOutOfRange"), Error);
    CHECK_THROWS_AS(s7.limits(-1), Error);
  }

  TEST_CASE("critical orders") {
    CHECK(GammaSemimodule(G511, {5, 11, 17, 23, 29}).critical_orders() == std::vector<Int>{5, 11, 16, 21, 26, 31});
    CHECK(GammaSemimodule(G511, {5, 11}).critical_orders() == std::vector<Int>{5, 11, 16});
    const GammaSemimodule s7(G717, {7, 17, 37, 57});
    const auto u = oracle::axes(7, 17, {7, 17, 37, 57}, 300);
    std::vector<Int> t{7, 17};
    for (std::size_t i = 1; i < u.size(); ++i) t.push_back(t.back() + u[i] - s7.basis()[i]);
    CHECK(s7.critical_orders() == t);
    for (Int ti : t) CHECK(ti < 7 * 17);
  }

  TEST_CASE("increasing and validation") {
    CHECK(GammaSemimodule(G511, {5, 11, 17, 23, 29}).is_increasing());
    CHECK(GammaSemimodule(G511, {5, 11}).is_increasing());
    CHECK_THROWS_WITH_AS(GammaSemimodule(G511, {5, 11, 16}), doctest::Contains("NonMinimalBasis"), Error);
    CHECK_THROWS_AS(GammaSemimodule(G511, {11, 5}), Error);
  }

  TEST_CASE("level sets") {
    const GammaSemimodule gamma(G511, {0});
    CHECK(gamma.level_set(0).members == std::vector<Int>{0});
    CHECK(gamma.level_set(40 / 5 + 1).members == std::vector<Int>{0, 1, 2, 3, 4});
    const GammaSemimodule sm(G511, {5, 11, 17});
    CHECK(to_long(sm.level_set(3).members) == oracle::level_set(5, 11, oracle::members(5, 11, {5, 11, 17}, 100), 3));
  }

  TEST_CASE("conductor") {
    CHECK(GammaSemimodule(G511, {0}).conductor() == 40);
    const GammaSemimodule sm(G511, {5, 11, 17, 23, 29});
    CHECK(sm.conductor() == oracle::conductor(oracle::members(5, 11, {5, 11, 17, 23, 29}, 200), 200));
    const GammaSemimodule shifted(G511, {0, 6, 12, 18, 24});
    CHECK(shifted.conductor() == sm.conductor() - 5);
  }

  TEST_CASE("random semimodules against brute force") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
      const PuiseuxPair pair = fixtures::random_pair(rng, 9, 6);
      const CuspSemigroup g(pair);
      const GammaSemimodule sm = fixtures::random_increasing(rng, g);
      const long n = pair.n(), m = pair.m();
      const long bound = g.conductor() + 3 * n * m;
      const auto basis = to_long(sm.basis());
      REQUIRE(sm.is_increasing());
      CHECK(to_long(sm.axes()) == oracle::axes(n, m, basis, bound));
      const auto mem = oracle::members(n, m, basis, bound);
      CHECK(sm.conductor() == oracle::conductor(mem, bound));
      for (int i = 0; i <= sm.s(); ++i) {
        const auto [l1, l2] = oracle::limits(n, m, basis, i, bound);
        CHECK(sm.limits(i) == Limits{l1, l2});
      }
      for (Int q = 0; q * n < bound - n; ++q) {
        CHECK(to_long(sm.level_set(q).members) == oracle::level_set(n, m, mem, q));
      }
      // uniqueness of the minimal basis
      std::vector<Int> gens = sm.basis();
      gens.push_back(sm.lambda(sm.s()) + n);
      gens.push_back(sm.lambda(0) + m);
      CHECK(minimal_basis(g, gens) == sm.basis());
      CHECK(minimal_basis(g, minimal_basis(g, gens)) == sm.basis());
    }
  }

  TEST_CASE("two representations of the last axis") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
      const PuiseuxPair pair = fixtures::random_pair(rng, 9, 6);
      const CuspSemigroup g(pair);
      const GammaSemimodule sm = fixtures::random_increasing(rng, g);
      const int s = sm.s();
      const Int n = pair.n(), m = pair.m();
      const Int u = sm.axis(s + 1);
      const Int lam = sm.lambda(s);
      // u = lambda_s + n a + m b = lambda_k + n c + m d
      std::vector<std::tuple<Int, Int>> first;
      for (Int a = 0; n * a <= u - lam; ++a)
        for (Int b = 0; n * a + m * b <= u - lam; ++b)
          if (lam + n * a + m * b == u) first.emplace_back(a, b);
      std::vector<std::tuple<int, Int, Int>> second;
      for (int k = -1; k < s; ++k)
        for (Int c = 0; sm.lambda(k) + n * c <= u; ++c)
          for (Int d = 0; sm.lambda(k) + n * c + m * d <= u; ++d)
            if (sm.lambda(k) + n * c + m * d == u) second.emplace_back(k, c, d);
      REQUIRE(first.size() == 1);
      REQUIRE(second.size() == 1);
      const auto [a, b] = first[0];
      const auto [k, c, d] = second[0];
      CHECK(a * c == 0);
      CHECK(b * d == 0);
      CHECK(a * b == 0);
      CHECK(c * d == 0);
      CHECK((a != 0 || b != 0));
      CHECK((c != 0 || d != 0));
      // either a >= l1 or b >= l2 whenever lambda_s + an + bm lies in Lambda_{s-1}
      const Limits l = sm.limits(s);
      for (Int x = 0; x * n < 2 * n * m; ++x)
        for (Int y = 0; x * n + y * m < 2 * n * m; ++y)
          if (sm.contains(lam + x * n + y * m, s - 1)) CHECK((x >= l.ell1 || y >= l.ell2));
    }
  }

  TEST_CASE("increasing semimodule inequalities") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      const CuspSemigroup g(fixtures::random_pair(rng, 9, 6));
      const GammaSemimodule sm = fixtures::random_increasing(rng, g);
      const auto t = sm.critical_orders();
      // lambda and t agree at -1 and 0, so the strict inequality starts at j = 1
      CHECK(t[1] - t[0] == sm.lambda(0) - sm.lambda(-1));
      for (int j = 1; j <= sm.s(); ++j)
        for (int k = -1; k < j; ++k)
          CHECK(sm.lambda(j) - sm.lambda(k) > t[static_cast<std::size_t>(j + 1)] - t[static_cast<std::size_t>(k + 1)]);
      for (Int u : sm.axes()) CHECK(u < g.n() * g.m());
      CHECK(sm.conductor() <= g.conductor() + sm.lambda(-1));
    }
  }

  TEST_CASE("circular intervals") {
    CHECK(is_circular_interval({0, 1, 2}, 5));
    CHECK(is_circular_interval({0, 3, 4}, 5));
    CHECK(is_circular_interval({0, 1, 2, 3, 4}, 5));
    CHECK_FALSE(is_circular_interval({0, 2}, 5));
    CHECK_FALSE(is_circular_interval({}, 5));
  }
}
