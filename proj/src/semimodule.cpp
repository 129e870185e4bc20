#include "cusp/semimodule.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cusp {

namespace {

// Least element of lambda + Gamma in each residue class mod n.
std::vector<Int> translate_minima(const CuspSemigroup& g, Int lambda) {
  std::vector<Int> out(static_cast<std::size_t>(g.n()));
  for (Int r = 0; r < g.n(); ++r) out[static_cast<std::size_t>(r)] = lambda + g.apery(r - lambda);
  return out;
}

}  // namespace

GammaSemimodule::GammaSemimodule(const CuspSemigroup& semigroup, std::vector<Int> basis)
    : semigroup_(semigroup), basis_(std::move(basis)) {
  if (basis_.empty()) fail(ErrorCode::InvalidSemimodule, "basis must be nonempty");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i] < 0) fail(ErrorCode::InvalidSemimodule, "basis elements must be nonnegative");
    if (i > 0 && basis_[i] <= basis_[i - 1]) {
      fail(ErrorCode::InvalidSemimodule, "basis must be strictly increasing");
    }
  }
  const std::size_t n = static_cast<std::size_t>(semigroup_.n());
  class_min_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::vector<Int> mins = translate_minima(semigroup_, basis_[i]);
    if (i > 0) {
      const auto& prev = class_min_.back();
      Int lam = basis_[i];
      if (lam >= prev[static_cast<std::size_t>(floor_mod(lam, semigroup_.n()))]) {
        fail(ErrorCode::NonMinimalBasis,
             std::to_string(lam) + " already lies in the semimodule generated by the smaller basis elements");
      }
      for (std::size_t r = 0; r < n; ++r) mins[r] = std::min(mins[r], prev[r]);
    }
    class_min_.push_back(std::move(mins));
  }

  const Int cap = search_cap();
  axes_.push_back(basis_[0]);
  for (int i = 1; i <= s() + 1; ++i) {
    const Int lam = lambda(i - 1);
    const auto& target = class_minima(i - 2);
    Int best = -1;
    for (Int r = 0; r < semigroup_.n(); ++r) {
      Int e = lam + semigroup_.apery(r - lam);
      Int lo = target[static_cast<std::size_t>(floor_mod(e, semigroup_.n()))];
      if (e < lo) e += ceil_div(lo - e, semigroup_.n()) * semigroup_.n();
      if (best < 0 || e < best) best = e;
    }
    if (best > cap) fail(ErrorCode::Internal, "axis search exceeded the enumeration cap");
    axes_.push_back(best);
  }
}

Int GammaSemimodule::lambda(int i) const {
  if (i < -1 || i > s()) fail(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(i));
  return basis_[static_cast<std::size_t>(i + 1)];
}

void GammaSemimodule::check_level(int level) const {
  if (level < -1 || level > s()) fail(ErrorCode::IndexOutOfRange, "level " + std::to_string(level));
}

bool GammaSemimodule::contains(Int p, int level) const {
  check_level(level);
  if (p < 0) return false;
  return p >= class_minima(level)[static_cast<std::size_t>(floor_mod(p, semigroup_.n()))];
}

Int GammaSemimodule::conductor(int level) const {
  check_level(level);
  const auto& mins = class_minima(level);
  Int top = *std::max_element(mins.begin(), mins.end());
  return std::max<Int>(0, top - semigroup_.n() + 1);
}

Int GammaSemimodule::axis(int i) const {
  if (i < 0 || i > s() + 1) fail(ErrorCode::IndexOutOfRange, "axis index " + std::to_string(i));
  return axes_[static_cast<std::size_t>(i)];
}

bool GammaSemimodule::is_curve_shaped() const {
  return basis_.size() >= 2 && basis_[0] == semigroup_.n() && basis_[1] == semigroup_.m();
}

std::vector<Int> GammaSemimodule::critical_orders() const {
  if (!is_curve_shaped()) {
    fail(ErrorCode::InvalidSemimodule, "critical orders need lambda_{-1} = n and lambda_0 = m");
  }
  std::vector<Int> t{semigroup_.n(), semigroup_.m()};
  for (int i = 1; i <= s() + 1; ++i) t.push_back(t.back() + axis(i) - lambda(i - 1));
  return t;
}

Int GammaSemimodule::critical_order(int i) const {
  if (i < -1 || i > s() + 1) fail(ErrorCode::IndexOutOfRange, "critical order index " + std::to_string(i));
  return critical_orders()[static_cast<std::size_t>(i + 1)];
}

Limits GammaSemimodule::limits(int i) const {
  if (i < 0 || i > s()) fail(ErrorCode::IndexOutOfRange, "limits need 0 <= i <= s, got " + std::to_string(i));
  const Int n = semigroup_.n();
  const Int m = semigroup_.m();
  const Int lam = lambda(i);
  const Int lo = class_minima(i - 1)[static_cast<std::size_t>(floor_mod(lam, n))];
  const Int ell1 = ceil_div(lo - lam, n);
  const Int cap = search_cap();
  for (Int q = 1; lam + q * m <= cap; ++q) {
    if (contains(lam + q * m, i - 1)) return {ell1, q};
  }
  fail(ErrorCode::Internal, "limit search exceeded the enumeration cap");
}

Tops GammaSemimodule::tops(int i) const {
  Limits l = limits(i);
  const Int n = semigroup_.n();
  const Int lam = lambda(i);
  Int q1 = floor_div(lam + n * l.ell1, n);
  Int q2 = floor_div(lam + semigroup_.m() * l.ell2, n);
  return {q1, q2, std::max(q1, q2)};
}

bool GammaSemimodule::is_increasing() const {
  for (int i = 0; i <= s(); ++i) {
    if (lambda(i) <= axis(i)) return false;
  }
  return true;
}

LevelSet GammaSemimodule::level_set(Int q, int level) const {
  if (q < 0) fail(ErrorCode::InvalidInput, "level index q must be nonnegative");
  check_level(level);
  const PuiseuxPair& pair = semigroup_.pair();
  LevelSet out{q, {}};
  for (Int p = q * pair.n(); p < (q + 1) * pair.n(); ++p) {
    if (contains(p, level)) out.members.push_back(xi(pair, p));
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

GammaSemimodule GammaSemimodule::truncated(int level) const {
  check_level(level);
  return GammaSemimodule(semigroup_, std::vector<Int>(basis_.begin(), basis_.begin() + level + 2));
}

Int GammaSemimodule::search_cap() const {
  return semigroup_.conductor() + basis_.back() + semigroup_.pair().product();
}

std::vector<Int> minimal_basis(const CuspSemigroup& semigroup, std::vector<Int> generators) {
  if (generators.empty()) fail(ErrorCode::InvalidSemimodule, "generators must be nonempty");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  if (generators.front() < 0) fail(ErrorCode::InvalidSemimodule, "generators must be nonnegative");
  const Int n = semigroup.n();
  std::vector<Int> basis{generators.front()};
  std::vector<Int> mins = translate_minima(semigroup, generators.front());
  for (std::size_t i = 1; i < generators.size(); ++i) {
    Int g = generators[i];
    if (g >= mins[static_cast<std::size_t>(floor_mod(g, n))]) continue;
    basis.push_back(g);
    std::vector<Int> add = translate_minima(semigroup, g);
    for (std::size_t r = 0; r < mins.size(); ++r) mins[r] = std::min(mins[r], add[r]);
  }
  return basis;
}

bool is_circular_interval(const std::vector<Int>& members, Int n) {
  if (members.empty()) return false;
  std::set<Int> set(members.begin(), members.end());
  for (Int x : set) {
    if (x < 0 || x >= n) return false;
  }
  int starts = 0;
  for (Int x : set) {
    if (!set.count(floor_mod(x - 1, n))) ++starts;
  }
  return starts <= 1;
}

}  // namespace cusp
