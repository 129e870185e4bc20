#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cusp/polynomial.hpp"

namespace cusp {

struct LogCoefficients {
  Rational mu;    // coefficient of dx/x
  Rational zeta;  // coefficient of dy/y
  bool operator==(const LogCoefficients&) const = default;
};

// 1-form sum x^a y^b (mu dx/x + zeta dy/y), stored by its logarithmic cloud.
// A plain form A dx + B dy has mu_{a,b} = A_{a-1,b} and zeta_{a,b} = B_{a,b-1};
// it is holomorphic exactly when mu vanishes on a = 0 and zeta on b = 0.
class OneForm {
 public:
  using Cloud = std::map<Monomial, LogCoefficients>;

  OneForm() = default;
  static OneForm from_plain(const Polynomial& A, const Polynomial& B);
  static OneForm dx();
  static OneForm dy();
  static OneForm differential(const Polynomial& h);
  static OneForm log_term(Int a, Int b, const Rational& mu, const Rational& zeta);

  const Cloud& log_cloud() const { return cloud_; }
  std::vector<Monomial> cloud() const;
  bool is_zero() const { return cloud_.empty(); }
  bool is_holomorphic() const;

  // Plain view; InvalidInput when the form has a pole along x = 0 or y = 0.
  Polynomial plain_dx() const;
  Polynomial plain_dy() const;

  void add_log(Int a, Int b, const Rational& mu, const Rational& zeta);
  // this += c * x^a y^b * other
  void add_scaled(const Rational& c, Int a, Int b, const OneForm& other);

  OneForm operator+(const OneForm& o) const;
  OneForm operator-(const OneForm& o) const;
  OneForm scaled(const Rational& c) const;
  OneForm shifted(Int a, Int b) const;
  OneForm multiplied(const Polynomial& f) const;
  // Divides by x^a y^b; every cloud point must dominate (a, b).
  OneForm divided_by_monomial(Int a, Int b) const;

  // Least common multiple of all coefficient denominators.
  mpz_class denominator_lcm() const;

  bool operator==(const OneForm& o) const { return cloud_ == o.cloud_; }

 private:
  Cloud cloud_;
};

struct InitialPart {
  Monomial vertex;
  LogCoefficients coefficients;
};

// (n - b)(alpha - a0) + (m - d)(beta - b0) >= 0 and b(alpha - a0) + d(beta - b0) >= 0.
struct Region {
  PuiseuxPair pair;
  CoPair copair;
  Monomial base;
  Region(const PuiseuxPair& pair, const Monomial& base);
  bool contains(const Monomial& p) const;
};

Int nu_E_form(const OneForm& w, const PuiseuxPair& pair);
OneForm initial_part(const OneForm& w, const PuiseuxPair& pair, Int q);
// Componentwise minimum of the cloud (the maximal monomial factor).
Monomial monomial_factor(const OneForm& w);
// Largest x^a y^b dividing both plain coefficients (exponents clamped at 0).
Monomial holomorphic_factor(const OneForm& w);
// nu_E of w stripped of its holomorphic factor.
Int rdo(const OneForm& w, const PuiseuxPair& pair);
bool is_basic(const OneForm& w, const PuiseuxPair& pair);
std::optional<Monomial> is_prebasic(const OneForm& w, const PuiseuxPair& pair);
// Vertex and its coefficients; NotPreBasic when w is not pre-basic.
InitialPart prebasic_initial_part(const OneForm& w, const PuiseuxPair& pair);
bool is_resonant(const OneForm& w, const PuiseuxPair& pair);

struct Reduction {
  Rational mu;
  Int a;
  Int b;
  OneForm result;  // w - mu x^a y^b by
};
// Cancels the initial part of w against a monomial multiple of `by` when the
// vertex of `by` is componentwise below that of w.
std::optional<Reduction> reduce_step(const OneForm& w, const OneForm& by, const PuiseuxPair& pair);

}  // namespace cusp
