#pragma once

#include <vector>

#include "cusp/core.hpp"

namespace cusp {

// Coprime (n, m) with 1 <= n <= m.
class PuiseuxPair {
 public:
  PuiseuxPair(Int n, Int m);

  Int n() const { return n_; }
  Int m() const { return m_; }
  Int product() const { return n_ * m_; }

  bool operator==(const PuiseuxPair&) const = default;

 private:
  Int n_;
  Int m_;
};

// Throws InvalidPair unless n >= 2.
void require_singular(const PuiseuxPair& pair);

struct GammaRepresentation {
  Int a;  // coefficient of n
  Int b;  // coefficient of m
  bool operator==(const GammaRepresentation&) const = default;
};

// d*n - b*m = 1 with 0 <= b < n, 0 < d <= m.
struct CoPair {
  Int b;
  Int d;
  bool operator==(const CoPair&) const = default;
};

class CuspSemigroup {
 public:
  explicit CuspSemigroup(const PuiseuxPair& pair);

  const PuiseuxPair& pair() const { return pair_; }
  Int n() const { return pair_.n(); }
  Int m() const { return pair_.m(); }
  Int conductor() const { return conductor_; }

  bool contains(Int p) const;
  // Unique (a, b) for members p < nm.
  GammaRepresentation represent(Int p) const;

  // The b in [0, n) with b*m = r (mod n); the least member congruent to r is b*m.
  Int residue_multiplier(Int r) const { return apery_b_[static_cast<std::size_t>(floor_mod(r, n()))]; }
  // Least member of Gamma congruent to r mod n.
  Int apery(Int r) const { return residue_multiplier(r) * m(); }

  bool operator==(const CuspSemigroup& o) const { return pair_ == o.pair_; }

 private:
  PuiseuxPair pair_;
  Int conductor_;
  std::vector<Int> apery_b_;
};

CoPair copair(const PuiseuxPair& pair);

// xi: residue r mod n -> position k in [0, n) with k*m = r (mod n).
Int xi(const PuiseuxPair& pair, Int r);

}  // namespace cusp
