#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace cusp;
using fixtures::plain;

namespace {

const ExtendedStandardBasis& basis_5_11() {
  static const ExtendedStandardBasis b = compute_extended_standard_basis(fixtures::curve_5_11());
  return b;
}

const ExtendedStandardBasis& basis_7_17() {
  static const ExtendedStandardBasis b = compute_extended_standard_basis(fixtures::curve_7_17());
  return b;
}

std::optional<long> naive_value(const PuiseuxCurve& c, const OneForm& w, long bound) {
  return oracle::order(fixtures::naive_pullback(c, w, bound));
}

}  // namespace

TEST_SUITE("stdbasis") {
  TEST_CASE("(5,11) example") {
    const auto& b = basis_5_11();
    CHECK(b.lambda() == std::vector<Int>{5, 11, 17, 23, 29});
    CHECK(b.critical_orders() == std::vector<Int>{5, 11, 16, 21, 26, 31});
    CHECK(b.form(-1) == OneForm::dx());
    CHECK(b.form(0) == OneForm::dy());
    const OneForm w1 = plain({{0, 1, -11}}, {{1, 0, 5}});
    const OneForm w2 = w1.shifted(1, 0).scaled(11) - OneForm::dy().shifted(0, 1).scaled(5);
    const OneForm w3 = w2.shifted(1, 0) + w1.shifted(0, 1);
    CHECK(b.form(1) == w1);
    CHECK(b.form(2) == w2);
    CHECK(b.form(3) == w3);
    for (int i = -1; i <= b.s() + 1; ++i) CHECK(nu_E_form(b.form(i), b.curve.pair()) == b.critical_orders()[static_cast<std::size_t>(i + 1)]);
    for (int i = -1; i <= b.s(); ++i) {
      CHECK(nu_C_form(b.curve, b.form(i)) == OrderResult::Finite(b.semimodule.lambda(i)));
      CHECK(naive_value(b.curve, b.form(i), 60) == b.semimodule.lambda(i));
    }
  }

  TEST_CASE("(7,17) and monomial examples") {
    CHECK(basis_7_17().lambda() == std::vector<Int>{7, 17, 37, 57});
    const auto mono = compute_standard_basis(fixtures::monomial_5_11());
    CHECK(mono.s() == 0);
    CHECK(mono.lambda() == std::vector<Int>{5, 11});
  }

  TEST_CASE("dicritical adjustment") {
    const auto& b = basis_5_11();
    REQUIRE(b.is_adjusted());
    const OneForm& w4 = b.form(4);
    CHECK(nu_E_form(w4, b.curve.pair()) == 31);
    CHECK(*b.adjusted_value == OrderResult::AtLeast(b.curve.truncation()));
    CHECK_FALSE(naive_value(b.curve, w4, b.curve.truncation()).has_value());
    CHECK(is_totally_dicritical(w4, b.curve.pair()).dicritical);

    const auto mono = compute_extended_standard_basis(fixtures::monomial_5_11());
    CHECK(mono.form(1) == plain({{0, 1, -11}}, {{1, 0, 5}}));
    CHECK(nu_E_form(mono.form(1), PuiseuxPair(5, 11)) == 16);

    std::mt19937_64 rng(61);
    int seen = 0;
    while (seen < 5) {
      const PuiseuxCurve c = fixtures::random_curve(rng);
      const auto rb = compute_standard_basis(c);
      if (rb.s() != 1) continue;
      const AdjustedForm adj = dicritically_adjust(rb);
      CHECK(adj.value == OrderResult::AtLeast(c.truncation()));
      CHECK(nu_E_form(adj.form, c.pair()) == rb.critical_orders()[3]);
      ++seen;
    }
  }

  TEST_CASE("basis forms are basic, resonant and nested") {
    for (const auto* b : {&basis_5_11(), &basis_7_17()}) {
      const PuiseuxPair& pair = b->curve.pair();
      Monomial prev{0, 0};
      for (int i = 1; i <= b->s() + 1; ++i) {
        const OneForm& w = b->form(i);
        CHECK(is_basic(w, pair));
        CHECK(is_resonant(w, pair));
        const Monomial v = *is_prebasic(w, pair);
        CHECK(v.weight(pair) == b->critical_orders()[static_cast<std::size_t>(i + 1)]);
        if (i <= b->s()) {
          CHECK(v.a >= prev.a);
          CHECK(v.b >= prev.b);
          prev = v;
        }
      }
      CHECK(is_prebasic(b->form(1), pair)->a == 1);
    }
  }

  TEST_CASE("values of forms with a critical divisorial order") {
    std::mt19937_64 rng(62);
    const auto& b = basis_5_11();
    const PuiseuxPair& pair = b.curve.pair();
    for (int trial = 0; trial < 100; ++trial) {
      const int i = static_cast<int>(fixtures::uniform(rng, 1, b.s()));
      const Int t = b.critical_orders()[static_cast<std::size_t>(i + 1)];
      OneForm w;
      for (Int a = 0; a * 5 <= t + 10; ++a)
        for (Int c = 0; a * 5 + c * 11 <= t + 10; ++c)
          if (a * 5 + c * 11 >= t && (a + c) > 0) w.add_log(a, c, a ? fixtures::pick(rng, {-2, -1, 0, 1, 2}) : Rational(0), c ? fixtures::pick(rng, {-2, -1, 0, 1, 2}) : Rational(0));
      if (w.is_zero() || nu_E_form(w, pair) != t) continue;
      const OrderResult v = nu_C_form(b.curve, w);
      REQUIRE(v.finite);
      CHECK(v.value <= b.semimodule.lambda(i));
    }
  }

  TEST_CASE("oracle") {
    CHECK(semimodule_oracle(fixtures::curve_5_11()).basis() == std::vector<Int>{5, 11, 17, 23, 29});
    CHECK(semimodule_oracle(fixtures::monomial_5_11()).basis() == std::vector<Int>{5, 11});
    CHECK(semimodule_oracle(fixtures::curve_7_17()).basis() == std::vector<Int>{7, 17, 37, 57});
  }

  TEST_CASE("Delorme decompositions") {
    const auto& b = basis_5_11();
    const auto d00 = delorme_decompose(b, 0, 0);
    CHECK(d00.vij == 16);
    CHECK(d00.k == -1);
    CHECK(d00.values[0] == OrderResult::Finite(16));
    CHECK(d00.values[1] == OrderResult::Finite(16));
    const auto d11 = delorme_decompose(b, 1, 1);
    CHECK(d11.vij == 22);
    CHECK(d11.vij == b.semimodule.axis(2));
    CHECK(d11.k == 0);
    CHECK(d11.coefficients[1] == Polynomial::monomial(0, 1, -5));
    const auto ds0 = delorme_decompose(b, b.s(), 0);
    for (int l = -1; l <= 0; ++l) {
      const OneForm term = b.form(l).multiplied(ds0.coefficients[static_cast<std::size_t>(l + 1)]);
      const auto v = naive_value(b.curve, term, ds0.vij + 1);
      CHECK(v == ds0.vij);
    }
    CHECK_THROWS_AS(delorme_decompose(b, 1, 2), Error);
    CHECK_THROWS_AS(delorme_decompose(compute_standard_basis(fixtures::curve_5_11()), 3, 0), Error);
  }
}
