#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cusp/forms.hpp"
#include "cusp/polynomial.hpp"
#include "cusp/semigroup.hpp"

namespace cusp {

// Finite(v), or AtLeast(T) when the series vanished below its truncation T.
struct OrderResult {
  bool finite = false;
  Int value = 0;

  static OrderResult Finite(Int v) { return {true, v}; }
  static OrderResult AtLeast(Int t) { return {false, t}; }
  bool operator==(const OrderResult&) const = default;
};

std::string to_string(const OrderResult& r);

// Power series in t known modulo t^T. Stored densely: pullbacks fill in
// almost every coefficient once powers of y are multiplied out.
class TruncatedSeries {
 public:
  using Terms = std::vector<std::pair<Int, Rational>>;

  explicit TruncatedSeries(Int truncation = 0);
  // Terms at exponents >= truncation are dropped.
  static TruncatedSeries from_terms(const Terms& terms, Int truncation);
  static TruncatedSeries monomial(Int k, const Rational& c, Int truncation);

  Int truncation() const { return static_cast<Int>(coeffs_.size()); }
  const Rational& operator[](Int k) const;
  Rational coefficient(Int k) const;
  void set(Int k, const Rational& c);
  void add(Int k, const Rational& c);

  OrderResult order() const;
  bool is_zero() const { return !order().finite; }
  Terms terms() const;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries scaled(const Rational& c) const;
  // Multiplication by t^k; for k < 0 the low coefficients must vanish.
  TruncatedSeries shifted(Int k) const;
  TruncatedSeries truncated(Int truncation) const;
  TruncatedSeries derivative() const;
  // Antiderivative with zero constant term.
  TruncatedSeries integral() const;
  // f(g(t)) for g of positive order.
  TruncatedSeries compose(const TruncatedSeries& g) const;

  // this -= c * t^shift * o, restricted to exponents below this->truncation().
  void subtract_scaled(const Rational& c, Int shift, const TruncatedSeries& o);

  bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

Int default_truncation(const PuiseuxPair& pair);  // c_Gamma + 2nm
Int minimum_truncation(const PuiseuxPair& pair);  // c_Gamma + n + m

// t -> (t^n, y(t)) with y = alpha t^m + higher terms, alpha != 0, n >= 2.
// Differential values are computed modulo t^T.
class PuiseuxCurve {
 public:
  using Terms = TruncatedSeries::Terms;

  // Exact polynomial y(t). Default truncation is default_truncation(pair).
  PuiseuxCurve(Int n, const Terms& y_terms, std::optional<Int> truncation = std::nullopt);
  // y known modulo t^{y.truncation()}, which must be at least T + m - n.
  static PuiseuxCurve from_series(Int n, const TruncatedSeries& y, Int truncation);

  const PuiseuxPair& pair() const { return pair_; }
  const CuspSemigroup& semigroup() const { return semigroup_; }
  Int truncation() const { return truncation_; }
  const Rational& leading_coefficient() const { return y_[pair_.m()]; }
  const TruncatedSeries& y() const { return y_; }
  bool is_exact() const { return exact_; }
  // Nonzero coefficients of y that are known.
  Terms y_terms() const;

  PuiseuxCurve with_truncation(Int truncation) const;

  // y^beta modulo t^T (cached, thread-safe).
  const TruncatedSeries& y_power(Int beta) const;

 private:
  PuiseuxCurve(const PuiseuxPair& pair, TruncatedSeries y, Int truncation, bool exact, Terms exact_terms);

  struct PowerCache {
    std::mutex mutex;
    std::vector<std::unique_ptr<TruncatedSeries>> powers;
  };

  PuiseuxPair pair_;
  CuspSemigroup semigroup_;
  TruncatedSeries y_;
  Int truncation_;
  bool exact_;
  Terms exact_terms_;
  std::shared_ptr<PowerCache> cache_;
};

// h(t^n, y(t)) modulo t^bound (bound defaults to T).
TruncatedSeries pullback(const PuiseuxCurve& curve, const Polynomial& h, std::optional<Int> bound = std::nullopt);
// a(t) with phi^*(x^sa y^sb w) = a(t) dt/t, modulo t^bound.
TruncatedSeries pullback(const PuiseuxCurve& curve, const OneForm& w, std::optional<Int> bound = std::nullopt,
                         Int sa = 0, Int sb = 0);

OrderResult nu_C_function(const PuiseuxCurve& curve, const Polynomial& h, std::optional<Int> bound = std::nullopt);
OrderResult nu_C_form(const PuiseuxCurve& curve, const OneForm& w, std::optional<Int> bound = std::nullopt);

// h with h(phi(t)) = integral of xi, for xi of order >= c_Gamma.
Polynomial integrate_against_conductor(const PuiseuxCurve& curve, const TruncatedSeries& xi);

}  // namespace cusp
