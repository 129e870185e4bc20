#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cusp/series.hpp"

namespace cusp {

struct NamedCurve {
  std::string name;
  PuiseuxCurve curve;
};

// The (5,11) and (7,17) example curves and the monomial cusp (t^5, t^11).
std::vector<NamedCurve> reference_curves();

// n in [3, 9], m in [n+1, n+4] coprime to n, leading coefficient in {-2..2}\{0}
// and up to four further terms with coefficients in {-2..2}\{0}.
PuiseuxCurve random_curve(std::mt19937_64& rng);

std::vector<NamedCurve> seed_corpus(int random_count, std::uint64_t seed);

}  // namespace cusp
