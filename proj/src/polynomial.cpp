#include "cusp/polynomial.hpp"

#include <limits>

namespace cusp {

Polynomial Polynomial::monomial(Int a, Int b, const Rational& c) {
  Polynomial p;
  p.add_term(a, b, c);
  return p;
}

Rational Polynomial::coefficient(Int a, Int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(Int a, Int b, const Rational& c) {
  if (c == 0) return;
  if (a < 0 || b < 0) fail(ErrorCode::InvalidInput, "negative exponent in polynomial");
  auto [it, inserted] = terms_.try_emplace(Monomial{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::add_scaled(const Rational& c, Int a, Int b, const Polynomial& other) {
  if (c == 0) return;
  for (const auto& [mono, coef] : other.terms_) add_term(mono.a + a, mono.b + b, c * coef);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r.add_scaled(1, 0, 0, o);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r.add_scaled(-1, 0, 0, o);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [mono, coef] : terms_) r.add_scaled(coef, mono.a, mono.b, o);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r;
  if (c == 0) return r;
  for (const auto& [mono, coef] : terms_) r.terms_.emplace(mono, coef * c);
  return r;
}

Polynomial Polynomial::shifted(Int a, Int b) const {
  Polynomial r;
  for (const auto& [mono, coef] : terms_) r.terms_.emplace(Monomial{mono.a + a, mono.b + b}, coef);
  return r;
}

Polynomial Polynomial::derivative_x() const {
  Polynomial r;
  for (const auto& [mono, coef] : terms_) {
    if (mono.a > 0) r.add_term(mono.a - 1, mono.b, coef * mono.a);
  }
  return r;
}

Polynomial Polynomial::derivative_y() const {
  Polynomial r;
  for (const auto& [mono, coef] : terms_) {
    if (mono.b > 0) r.add_term(mono.a, mono.b - 1, coef * mono.b);
  }
  return r;
}

Int nu_E_function(const Polynomial& h, const PuiseuxPair& pair) {
  if (h.is_zero()) fail(ErrorCode::ZeroPolynomial, "divisorial order of the zero polynomial");
  Int best = std::numeric_limits<Int>::max();
  for (const auto& [mono, coef] : h.terms()) best = std::min(best, mono.weight(pair));
  return best;
}

}  // namespace cusp
