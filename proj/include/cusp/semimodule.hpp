#pragma once

#include <vector>

#include "cusp/semigroup.hpp"

namespace cusp {

struct Limits {
  Int ell1;
  Int ell2;
  bool operator==(const Limits&) const = default;
};

struct Tops {
  Int q1;
  Int q2;
  Int main_top;
  bool operator==(const Tops&) const = default;
};

struct LevelSet {
  Int q;
  std::vector<Int> members;  // sorted subset of {0, ..., n-1}
};

// A Gamma-semimodule given by its minimal basis lambda_{-1} < ... < lambda_s.
// Levels are indexed like the basis: level i means Lambda_i, generated by
// lambda_{-1}, ..., lambda_i.
class GammaSemimodule {
 public:
  // Rejects bases that are not strictly increasing or not minimal.
  GammaSemimodule(const CuspSemigroup& semigroup, std::vector<Int> basis);

  const CuspSemigroup& semigroup() const { return semigroup_; }
  const std::vector<Int>& basis() const { return basis_; }
  int s() const { return static_cast<int>(basis_.size()) - 2; }
  Int lambda(int i) const;

  bool contains(Int p) const { return contains(p, s()); }
  bool contains(Int p, int level) const;
  Int conductor() const { return conductor(s()); }
  Int conductor(int level) const;

  // u_0, ..., u_{s+1}
  const std::vector<Int>& axes() const { return axes_; }
  Int axis(int i) const;

  // lambda_{-1} = n and lambda_0 = m.
  bool is_curve_shaped() const;
  // t_{-1}, ..., t_{s+1}; requires a curve-shaped basis.
  std::vector<Int> critical_orders() const;
  Int critical_order(int i) const;

  Limits limits(int i) const;
  Tops tops(int i) const;
  bool is_increasing() const;

  LevelSet level_set(Int q) const { return level_set(q, s()); }
  LevelSet level_set(Int q, int level) const;

  GammaSemimodule truncated(int level) const;

  // Upper bound for every internal search: c_Gamma + lambda_s + nm.
  Int search_cap() const;

  bool operator==(const GammaSemimodule& o) const { return semigroup_ == o.semigroup_ && basis_ == o.basis_; }

 private:
  void check_level(int level) const;
  const std::vector<Int>& class_minima(int level) const {
    return class_min_[static_cast<std::size_t>(level + 1)];
  }

  CuspSemigroup semigroup_;
  std::vector<Int> basis_;
  std::vector<std::vector<Int>> class_min_;  // per level, least member in each class mod n
  std::vector<Int> axes_;
};

// lambda_j = min(Lambda \ Lambda_{j-1}) over the semimodule generated by `generators`.
std::vector<Int> minimal_basis(const CuspSemigroup& semigroup, std::vector<Int> generators);

// Nonempty arc of the cyclically ordered set {0, ..., n-1}.
bool is_circular_interval(const std::vector<Int>& members, Int n);

}  // namespace cusp
