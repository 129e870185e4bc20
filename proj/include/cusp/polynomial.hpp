#pragma once

#include <map>
#include <utility>

#include "cusp/semigroup.hpp"

namespace cusp {

// Exponent pair (alpha, beta) of x^alpha y^beta.
struct Monomial {
  Int a;
  Int b;
  auto operator<=>(const Monomial&) const = default;
  Int weight(const PuiseuxPair& p) const { return p.n() * a + p.m() * b; }
};

// Sparse bivariate polynomial over the rationals; zero terms are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  static Polynomial monomial(Int a, Int b, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Int a, Int b) const;

  void add_term(Int a, Int b, const Rational& c);
  // this += c * x^a y^b * other
  void add_scaled(const Rational& c, Int a, Int b, const Polynomial& other);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial shifted(Int a, Int b) const;

  Polynomial derivative_x() const;
  Polynomial derivative_y() const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

// min{n a + m b : coefficient nonzero}; ZeroPolynomial for h = 0.
Int nu_E_function(const Polynomial& h, const PuiseuxPair& pair);

}  // namespace cusp
