#include "cusp/corpus.hpp"

#include <map>

namespace cusp {

std::vector<NamedCurve> reference_curves() {
  return {
      {"cusp_5_11", PuiseuxCurve(5, {{11, 1}, {12, 1}, {13, 1}})},
      {"cusp_7_17", PuiseuxCurve(7, {{17, 1}, {30, 1}, {33, 1}, {36, 1}})},
      {"monomial_5_11", PuiseuxCurve(5, {{11, 1}})},
  };
}

PuiseuxCurve random_curve(std::mt19937_64& rng) {
  auto uniform = [&](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };
  auto nonzero = [&]() {
    Int c = uniform(-2, 1);
    return c >= 0 ? c + 1 : c;
  };
  const Int n = uniform(3, 9);
  Int m;
  do {
    m = uniform(n + 1, n + 4);
  } while (gcd(n, m) != 1);
  std::map<Int, Rational> terms{{m, Rational(nonzero())}};
  const Int extra = uniform(0, 4);
  for (Int k = 0; k < extra; ++k) terms[uniform(m + 1, m + 3 * n)] = nonzero();
  return PuiseuxCurve(n, PuiseuxCurve::Terms(terms.begin(), terms.end()));
}

std::vector<NamedCurve> seed_corpus(int random_count, std::uint64_t seed) {
  std::vector<NamedCurve> out = reference_curves();
  std::mt19937_64 rng(seed);
  for (int k = 0; k < random_count; ++k) out.push_back({"random_" + std::to_string(k), random_curve(rng)});
  return out;
}

}  // namespace cusp
