#include "cusp/series.hpp"

#include <algorithm>
#include <string>

namespace cusp {

std::string to_string(const OrderResult& r) {
  return r.finite ? std::to_string(r.value) : ">=" + std::to_string(r.value);
}

// ---------------------------------------------------------------- TruncatedSeries

TruncatedSeries::TruncatedSeries(Int truncation) {
  if (truncation < 0) fail(ErrorCode::InvalidInput, "negative truncation");
  coeffs_.resize(static_cast<std::size_t>(truncation));
}

TruncatedSeries TruncatedSeries::from_terms(const Terms& terms, Int truncation) {
  TruncatedSeries s(truncation);
  for (const auto& [k, c] : terms) {
    if (k < 0) fail(ErrorCode::InvalidInput, "negative exponent in series");
    if (k < truncation) s.coeffs_[static_cast<std::size_t>(k)] += c;
  }
  return s;
}

TruncatedSeries TruncatedSeries::monomial(Int k, const Rational& c, Int truncation) {
  return from_terms({{k, c}}, truncation);
}

const Rational& TruncatedSeries::operator[](Int k) const {
  if (k < 0 || k >= truncation()) {
    fail(ErrorCode::IndexOutOfRange, "coefficient " + std::to_string(k) + " beyond truncation " + std::to_string(truncation()));
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational TruncatedSeries::coefficient(Int k) const { return (*this)[k]; }

void TruncatedSeries::set(Int k, const Rational& c) {
  (void)(*this)[k];
  coeffs_[static_cast<std::size_t>(k)] = c;
}

void TruncatedSeries::add(Int k, const Rational& c) {
  (void)(*this)[k];
  coeffs_[static_cast<std::size_t>(k)] += c;
}

OrderResult TruncatedSeries::order() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return OrderResult::Finite(static_cast<Int>(k));
  }
  return OrderResult::AtLeast(truncation());
}

TruncatedSeries::Terms TruncatedSeries::terms() const {
  Terms out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) out.emplace_back(static_cast<Int>(k), coeffs_[k]);
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  TruncatedSeries r(std::min(truncation(), o.truncation()));
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  TruncatedSeries r(std::min(truncation(), o.truncation()));
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
  return r;
}

namespace {

std::vector<std::size_t> support(const std::vector<Rational>& c) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) idx.push_back(k);
  }
  return idx;
}

}  // namespace

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  const Int of = order().value;
  const Int og = o.order().value;
  TruncatedSeries r(std::min(truncation() + og, o.truncation() + of));
  const auto sf = support(coeffs_);
  const auto sg = support(o.coeffs_);
  const std::size_t T = r.coeffs_.size();
  Rational tmp;
  for (std::size_t i : sf) {
    for (std::size_t j : sg) {
      if (i + j >= T) break;
      tmp = coeffs_[i] * o.coeffs_[j];
      r.coeffs_[i + j] += tmp;
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
  TruncatedSeries r(truncation());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) r.coeffs_[k] = coeffs_[k] * c;
  }
  return r;
}

TruncatedSeries TruncatedSeries::shifted(Int k) const {
  TruncatedSeries r(std::max<Int>(0, truncation() + k));
  for (Int i = 0; i < truncation(); ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] == 0) continue;
    if (i + k < 0) fail(ErrorCode::Internal, "negative shift of a series with low-order terms");
    r.coeffs_[static_cast<std::size_t>(i + k)] = coeffs_[static_cast<std::size_t>(i)];
  }
  return r;
}

TruncatedSeries TruncatedSeries::truncated(Int t) const {
  if (t > truncation()) fail(ErrorCode::Internal, "cannot raise the truncation of a series");
  TruncatedSeries r(t);
  std::copy(coeffs_.begin(), coeffs_.begin() + t, r.coeffs_.begin());
  return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
  TruncatedSeries r(std::max<Int>(0, truncation() - 1));
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k + 1] * static_cast<long>(k + 1);
  return r;
}

TruncatedSeries TruncatedSeries::integral() const {
  TruncatedSeries r(truncation() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) r.coeffs_[k + 1] = coeffs_[k] / Rational(static_cast<long>(k + 1));
  }
  return r;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& g) const {
  OrderResult og = g.order();
  if (og.finite && og.value == 0) fail(ErrorCode::InvalidInput, "composition needs g of positive order");
  const Int step = og.value;
  const Int t = std::min(g.truncation(), truncation() * step);
  // Horner: f_{T-1}; acc = acc * g + f_k
  TruncatedSeries acc(t);
  for (Int k = truncation() - 1; k >= 0; --k) {
    TruncatedSeries prod = acc * g;
    TruncatedSeries next(t);
    for (Int i = 0; i < std::min(t, prod.truncation()); ++i) next.coeffs_[static_cast<std::size_t>(i)] = prod.coeffs_[static_cast<std::size_t>(i)];
    if (t > 0) next.coeffs_[0] += coeffs_[static_cast<std::size_t>(k)];
    acc = std::move(next);
  }
  return acc;
}

void TruncatedSeries::subtract_scaled(const Rational& c, Int shift, const TruncatedSeries& o) {
  if (c == 0) return;
  const Int T = truncation();
  const Int limit = std::min(T - shift, o.truncation());
  Rational tmp;
  for (Int j = std::max<Int>(0, -shift); j < limit; ++j) {
    const Rational& v = o.coeffs_[static_cast<std::size_t>(j)];
    if (v == 0) continue;
    tmp = c * v;
    coeffs_[static_cast<std::size_t>(j + shift)] -= tmp;
  }
  if (o.truncation() + shift < T) {
    // The unknown tail of o would leak into known coefficients.
    coeffs_.resize(static_cast<std::size_t>(std::max<Int>(0, o.truncation() + shift)));
  }
}

// ---------------------------------------------------------------- PuiseuxCurve

Int default_truncation(const PuiseuxPair& pair) {
  return (pair.n() - 1) * (pair.m() - 1) + 2 * pair.product();
}

Int minimum_truncation(const PuiseuxPair& pair) {
  return (pair.n() - 1) * (pair.m() - 1) + pair.n() + pair.m();
}

namespace {

PuiseuxPair pair_from_terms(Int n, const TruncatedSeries::Terms& terms) {
  std::optional<Int> m;
  for (const auto& [k, c] : terms) {
    if (k < 0) fail(ErrorCode::NotACusp, "negative exponent in y-series");
    if (c != 0 && (!m || k < *m)) m = k;
  }
  if (!m) fail(ErrorCode::NotACusp, "y-series is zero");
  if (n < 2) fail(ErrorCode::NotACusp, "multiplicity n >= 2 required");
  if (*m <= n) fail(ErrorCode::NotACusp, "leading exponent of y must exceed n");
  return PuiseuxPair(n, *m);
}

}  // namespace

PuiseuxCurve::PuiseuxCurve(Int n, const Terms& y_terms, std::optional<Int> truncation)
    : PuiseuxCurve(pair_from_terms(n, y_terms), TruncatedSeries(0), 0, true, {}) {
  truncation_ = truncation ? *truncation : default_truncation(pair_);
  if (truncation_ < minimum_truncation(pair_)) {
    fail(ErrorCode::InvalidInput, "truncation below c_Gamma + n + m");
  }
  y_ = TruncatedSeries::from_terms(y_terms, truncation_ + pair_.m());
  std::map<Int, Rational> merged;
  for (const auto& [k, c] : y_terms) merged[k] += c;
  for (const auto& [k, c] : merged) {
    if (c != 0) exact_terms_.emplace_back(k, c);
  }
}

PuiseuxCurve::PuiseuxCurve(const PuiseuxPair& pair, TruncatedSeries y, Int truncation, bool exact, Terms exact_terms)
    : pair_(pair),
      semigroup_(pair),
      y_(std::move(y)),
      truncation_(truncation),
      exact_(exact),
      exact_terms_(std::move(exact_terms)),
      cache_(std::make_shared<PowerCache>()) {}

PuiseuxCurve PuiseuxCurve::from_series(Int n, const TruncatedSeries& y, Int truncation) {
  PuiseuxPair pair = pair_from_terms(n, y.terms());
  if (truncation < minimum_truncation(pair)) fail(ErrorCode::InvalidInput, "truncation below c_Gamma + n + m");
  if (y.truncation() < truncation + pair.m() - pair.n()) {
    fail(ErrorCode::InvalidInput, "y-series precision too low for the requested truncation");
  }
  return PuiseuxCurve(pair, y, truncation, false, {});
}

PuiseuxCurve::Terms PuiseuxCurve::y_terms() const { return exact_ ? exact_terms_ : y_.terms(); }

PuiseuxCurve PuiseuxCurve::with_truncation(Int truncation) const {
  if (exact_) return PuiseuxCurve(pair_.n(), exact_terms_, truncation);
  return from_series(pair_.n(), y_, truncation);
}

const TruncatedSeries& PuiseuxCurve::y_power(Int beta) const {
  if (beta < 0) fail(ErrorCode::Internal, "negative power of y");
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& powers = cache_->powers;
  if (powers.empty()) {
    auto one = std::make_unique<TruncatedSeries>(truncation_);
    if (truncation_ > 0) one->set(0, 1);
    powers.push_back(std::move(one));
  }
  if (static_cast<Int>(powers.size()) <= beta) {
    const TruncatedSeries ybase = y_.truncated(std::min(y_.truncation(), truncation_));
    const auto ysupport = ybase.terms();
    while (static_cast<Int>(powers.size()) <= beta) {
      const TruncatedSeries& prev = *powers.back();
      auto next = std::make_unique<TruncatedSeries>(truncation_);
      Rational tmp;
      for (Int i = 0; i < truncation_; ++i) {
        const Rational& p = prev[i];
        if (p == 0) continue;
        for (const auto& [k, c] : ysupport) {
          if (i + k >= truncation_) break;
          tmp = p * c;
          next->add(i + k, tmp);
        }
      }
      powers.push_back(std::move(next));
    }
  }
  return *powers[static_cast<std::size_t>(beta)];
}

// ---------------------------------------------------------------- pullbacks

namespace {

Int resolve_bound(const PuiseuxCurve& curve, std::optional<Int> bound) {
  Int b = bound ? *bound : curve.truncation();
  if (b < 0 || b > curve.truncation()) fail(ErrorCode::Internal, "pullback bound beyond the curve truncation");
  return b;
}

}  // namespace

TruncatedSeries pullback(const PuiseuxCurve& curve, const Polynomial& h, std::optional<Int> bound) {
  const Int B = resolve_bound(curve, bound);
  const Int n = curve.pair().n();
  const Int m = curve.pair().m();
  TruncatedSeries out(B);
  Rational tmp;
  for (const auto& [mono, c] : h.terms()) {
    const Int base = n * mono.a;
    if (base + m * mono.b >= B) continue;
    const TruncatedSeries& P = curve.y_power(mono.b);
    for (Int j = m * mono.b; j + base < B; ++j) {
      const Rational& v = P[j];
      if (v == 0) continue;
      tmp = c * v;
      out.add(base + j, tmp);
    }
  }
  return out;
}

TruncatedSeries pullback(const PuiseuxCurve& curve, const OneForm& w, std::optional<Int> bound, Int sa, Int sb) {
  const Int B = resolve_bound(curve, bound);
  const Int n = curve.pair().n();
  const Int m = curve.pair().m();
  TruncatedSeries out(B);
  Rational nmu, zb, tmp;
  for (const auto& [mono, k] : w.log_cloud()) {
    const Int alpha = mono.a + sa;
    const Int beta = mono.b + sb;
    if (beta == 0) {
      if (k.zeta != 0) fail(ErrorCode::InvalidInput, "form has a pole along y = 0");
      if (n * alpha < B) out.add(n * alpha, n * k.mu);
      continue;
    }
    const Int base = n * alpha;
    if (base + m * beta >= B) continue;
    const TruncatedSeries& P = curve.y_power(beta);
    nmu = n * k.mu;
    zb = k.zeta / Rational(static_cast<long>(beta));
    // y^{beta-1} t y' = (t / beta) d(y^beta)/dt
    for (Int j = m * beta; j + base < B; ++j) {
      const Rational& v = P[j];
      if (v == 0) continue;
      tmp = zb * j;
      tmp += nmu;
      tmp *= v;
      out.add(base + j, tmp);
    }
  }
  return out;
}

OrderResult nu_C_function(const PuiseuxCurve& curve, const Polynomial& h, std::optional<Int> bound) {
  return pullback(curve, h, bound).order();
}

OrderResult nu_C_form(const PuiseuxCurve& curve, const OneForm& w, std::optional<Int> bound) {
  return pullback(curve, w, bound).order();
}

Polynomial integrate_against_conductor(const PuiseuxCurve& curve, const TruncatedSeries& xi) {
  const CuspSemigroup& g = curve.semigroup();
  OrderResult o = xi.order();
  if (o.finite && o.value < g.conductor()) {
    fail(ErrorCode::OrderTooLow, "order " + std::to_string(o.value) + " is below the conductor " + std::to_string(g.conductor()));
  }
  const Int B = std::min(curve.truncation(), xi.truncation() + 1);
  TruncatedSeries residual = xi.integral().truncated(B);
  Polynomial h;
  const Int n = g.n();
  const Int m = g.m();
  for (;;) {
    OrderResult r = residual.order();
    if (!r.finite) break;
    const Int k = r.value;
    const Int b = g.residue_multiplier(k);
    const Int a = (k - b * m) / n;
    if (k - b * m < 0) fail(ErrorCode::Internal, "greedy integration left the conductor");
    const TruncatedSeries& P = curve.y_power(b);
    Rational c = residual[k] / P[b * m];
    h.add_term(a, b, c);
    residual.subtract_scaled(c, n * a, P);
  }
  return h;
}

}  // namespace cusp
