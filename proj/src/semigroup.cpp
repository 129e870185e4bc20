#include "cusp/semigroup.hpp"

#include <string>

namespace cusp {

namespace {
constexpr Int kMaxProduct = Int(1) << 40;
}

PuiseuxPair::PuiseuxPair(Int n, Int m) : n_(n), m_(m) {
  if (n < 1 || m < 1) {
    fail(ErrorCode::InvalidPair, "pair entries must be positive, got (" + std::to_string(n) + "," + std::to_string(m) + ")");
  }
  if (n > m) {
    fail(ErrorCode::InvalidPair, "pair must satisfy n <= m, got (" + std::to_string(n) + "," + std::to_string(m) + ")");
  }
  if (gcd(n, m) != 1) {
    fail(ErrorCode::InvalidPair, "pair must be coprime, got (" + std::to_string(n) + "," + std::to_string(m) + ")");
  }
  if (m > kMaxProduct / n) fail(ErrorCode::InvalidPair, "pair too large");
}

void require_singular(const PuiseuxPair& pair) {
  if (pair.n() < 2) fail(ErrorCode::InvalidPair, "multiplicity n >= 2 required");
}

CuspSemigroup::CuspSemigroup(const PuiseuxPair& pair)
    : pair_(pair), conductor_((pair.n() - 1) * (pair.m() - 1)), apery_b_(static_cast<std::size_t>(pair.n()), 0) {
  const Int n = pair.n();
  const Int m = pair.m();
  for (Int b = 0; b < n; ++b) apery_b_[static_cast<std::size_t>((b * m) % n)] = b;
}

bool CuspSemigroup::contains(Int p) const {
  if (p < 0) return false;
  return p >= apery(p);
}

GammaRepresentation CuspSemigroup::represent(Int p) const {
  if (!contains(p)) fail(ErrorCode::NotInSemigroup, std::to_string(p) + " is not in the semigroup");
  if (p >= pair_.product()) {
    fail(ErrorCode::NotUniqueRange, std::to_string(p) + " >= nm has no unique representation");
  }
  Int b = residue_multiplier(p);
  return {(p - b * m()) / n(), b};
}

CoPair copair(const PuiseuxPair& pair) {
  const Int n = pair.n();
  const Int m = pair.m();
  // b*m = -1 (mod n)
  Int b = n == 1 ? 0 : floor_mod(-mod_inverse(m, n), n);
  return {b, (1 + b * m) / n};
}

Int xi(const PuiseuxPair& pair, Int r) {
  if (pair.n() == 1) return 0;
  return floor_mod(floor_mod(r, pair.n()) * mod_inverse(pair.m(), pair.n()), pair.n());
}

}  // namespace cusp
