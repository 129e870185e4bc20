#pragma once

#include <random>

#include "cusp/blowup.hpp"
#include "cusp/semiroot.hpp"
#include "oracles.hpp"

namespace fixtures {

using namespace cusp;

inline PuiseuxCurve curve_5_11() { return PuiseuxCurve(5, {{11, 1}, {12, 1}, {13, 1}}); }
inline PuiseuxCurve curve_7_17() { return PuiseuxCurve(7, {{17, 1}, {30, 1}, {33, 1}, {36, 1}}); }
inline PuiseuxCurve monomial_5_11() { return PuiseuxCurve(5, {{11, 1}}); }

inline OneForm plain(std::initializer_list<std::tuple<Int, Int, long>> dx, std::initializer_list<std::tuple<Int, Int, long>> dy) {
  Polynomial A, B;
  for (auto [a, b, c] : dx) A.add_term(a, b, c);
  for (auto [a, b, c] : dy) B.add_term(a, b, c);
  return OneForm::from_plain(A, B);
}

// The (4,9) form with nu_E = 48.
inline OneForm form_4_9() {
  return plain({{0, 5, 7}, {9, 1, 2}, {9, 2, -2}, {2, 4, -9}}, {{3, 3, 4}, {10, 0, -1}, {10, 1, 2}, {1, 4, -3}, {8, 2, -1}});
}

inline oracle::Poly to_poly(const Polynomial& p) {
  oracle::Poly out;
  for (const auto& [mono, c] : p.terms()) out[{mono.a, mono.b}] = c;
  return out;
}

inline oracle::Series y_series(const PuiseuxCurve& c) {
  oracle::Series out;
  for (const auto& [k, q] : c.y_terms()) out[k] = q;
  return out;
}

inline oracle::Series naive_pullback(const PuiseuxCurve& c, const OneForm& w, long bound) {
  return oracle::pullback(c.pair().n(), y_series(c), to_poly(w.plain_dx()), to_poly(w.plain_dy()), bound);
}

// y^4 - a x^9 + (a-1) x^7 y + x^7 y^2 = 0 after x = a^3 X, y = a^7 Y:
// X = t^4, Y = t^9 W with W^4 = 1 - (a-1) t W - a^7 t^10 W^2.
inline PuiseuxCurve family_4_9(long a, Int truncation) {
  const Int len = truncation + 9 - 4;
  std::vector<Rational> W(static_cast<std::size_t>(len - 9));
  const Int K = static_cast<Int>(W.size());
  W[0] = 1;
  auto series_of = [&](Int upto) {
    oracle::Series s;
    for (Int k = 0; k < upto; ++k) {
      if (W[static_cast<std::size_t>(k)] != 0) s[k] = W[static_cast<std::size_t>(k)];
    }
    return s;
  };
  Rational a7 = 1;
  for (int k = 0; k < 7; ++k) a7 *= a;
  for (Int k = 1; k < K; ++k) {
    const oracle::Series w = series_of(k);
    const oracle::Series w2 = oracle::mul(w, w, k + 1);
    const oracle::Series w4 = oracle::mul(w2, w2, k + 1);
    Rational r = w4.count(k) ? w4.at(k) : Rational(0);
    if (w.count(k - 1)) r += (a - 1) * w.at(k - 1);
    if (k >= 10 && w2.count(k - 10)) r += a7 * w2.at(k - 10);
    W[static_cast<std::size_t>(k)] = -r / 4;
  }
  TruncatedSeries y(len);
  for (Int k = 0; k < K; ++k) y.set(9 + k, W[static_cast<std::size_t>(k)]);
  return PuiseuxCurve::from_series(4, y, truncation);
}

inline Rational pick(std::mt19937_64& rng, std::initializer_list<long> values) {
  std::vector<long> v(values);
  return Rational(v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]);
}

inline Int uniform(std::mt19937_64& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

inline PuiseuxPair random_pair(std::mt19937_64& rng, Int nmax, Int spread) {
  for (;;) {
    const Int n = uniform(rng, 2, nmax);
    const Int m = uniform(rng, n + 1, n + spread);
    if (gcd(n, m) == 1) return PuiseuxPair(n, m);
  }
}

// Random curve with the shape used by the property suites.
inline PuiseuxCurve random_curve(std::mt19937_64& rng) {
  for (;;) {
    const Int n = uniform(rng, 3, 9);
    const Int m = uniform(rng, n + 1, n + 4);
    if (gcd(n, m) != 1) continue;
    std::map<Int, Rational> terms{{m, pick(rng, {-2, -1, 1, 2})}};
    const Int extra = uniform(rng, 1, 4);
    for (Int k = 0; k < extra; ++k) terms[uniform(rng, m + 1, m + 2 * n + 4)] = pick(rng, {-2, -1, 1, 2});
    return PuiseuxCurve(n, PuiseuxCurve::Terms(terms.begin(), terms.end()));
  }
}

// Pre-basic form: vertex v with coefficients k plus points of the region of
// strictly larger weight.
inline OneForm random_prebasic(std::mt19937_64& rng, const PuiseuxPair& pair, bool resonant) {
  const Monomial v{uniform(rng, 0, 4), uniform(rng, 0, 4)};
  OneForm w;
  const Rational c = pick(rng, {-3, -2, -1, 1, 2, 3});
  if (resonant) {
    w.add_log(v.a, v.b, -c * pair.m(), c * pair.n());
  } else {
    w.add_log(v.a, v.b, c, pick(rng, {-2, 1, 2, 3}) + c);
  }
  const Region region(pair, v);
  const int extra = static_cast<int>(uniform(rng, 0, 6));
  for (int k = 0; k < extra; ++k) {
    const Monomial p{v.a + uniform(rng, -2, 6), v.b + uniform(rng, -2, 6)};
    if (p.a < 0 || p.b < 0 || p == v || !region.contains(p)) continue;
    w.add_log(p.a, p.b, pick(rng, {-2, -1, 0, 1, 2}), pick(rng, {-2, -1, 0, 1, 2}));
  }
  return w;
}

// Arbitrary small form (log view), possibly not pre-basic.
inline OneForm random_form(std::mt19937_64& rng) {
  OneForm w;
  const int terms = static_cast<int>(uniform(rng, 1, 5));
  for (int k = 0; k < terms; ++k) {
    w.add_log(uniform(rng, 0, 6), uniform(rng, 0, 6), pick(rng, {-2, -1, 0, 1, 2}), pick(rng, {-2, -1, 0, 1, 2}));
  }
  if (w.is_zero()) w.add_log(1, 1, 1, 0);
  return w;
}

// Random increasing curve-shaped semimodule: each new element is a gap of the
// previous semimodule above the current axis.
inline GammaSemimodule random_increasing(std::mt19937_64& rng, const CuspSemigroup& g) {
  GammaSemimodule sm(g, {g.n(), g.m()});
  for (;;) {
    if (uniform(rng, 0, 3) == 0) break;
    const Int u = sm.axis(sm.s() + 1);
    std::vector<Int> gaps;
    for (Int p = u + 1; p < sm.conductor(); ++p) {
      if (!sm.contains(p)) gaps.push_back(p);
    }
    if (gaps.empty()) break;
    std::vector<Int> b = sm.basis();
    b.push_back(gaps[static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(gaps.size()) - 1))]);
    if (b.back() <= b[b.size() - 2]) break;
    sm = GammaSemimodule(g, b);
  }
  return sm;
}

}  // namespace fixtures
