#include "cusp/forms.hpp"

#include <algorithm>
#include <limits>

namespace cusp {

OneForm OneForm::from_plain(const Polynomial& A, const Polynomial& B) {
  OneForm w;
  for (const auto& [mono, c] : A.terms()) w.add_log(mono.a + 1, mono.b, c, 0);
  for (const auto& [mono, c] : B.terms()) w.add_log(mono.a, mono.b + 1, 0, c);
  return w;
}

OneForm OneForm::dx() { return log_term(1, 0, 1, 0); }
OneForm OneForm::dy() { return log_term(0, 1, 0, 1); }

OneForm OneForm::differential(const Polynomial& h) {
  OneForm w;
  for (const auto& [mono, c] : h.terms()) w.add_log(mono.a, mono.b, c * mono.a, c * mono.b);
  return w;
}

OneForm OneForm::log_term(Int a, Int b, const Rational& mu, const Rational& zeta) {
  OneForm w;
  w.add_log(a, b, mu, zeta);
  return w;
}

std::vector<Monomial> OneForm::cloud() const {
  std::vector<Monomial> out;
  out.reserve(cloud_.size());
  for (const auto& [mono, c] : cloud_) out.push_back(mono);
  return out;
}

bool OneForm::is_holomorphic() const {
  for (const auto& [mono, c] : cloud_) {
    if ((mono.a == 0 && c.mu != 0) || (mono.b == 0 && c.zeta != 0)) return false;
  }
  return true;
}

Polynomial OneForm::plain_dx() const {
  Polynomial A;
  for (const auto& [mono, c] : cloud_) {
    if (c.mu == 0) continue;
    if (mono.a == 0) fail(ErrorCode::InvalidInput, "form has a pole along x = 0");
    A.add_term(mono.a - 1, mono.b, c.mu);
  }
  return A;
}

Polynomial OneForm::plain_dy() const {
  Polynomial B;
  for (const auto& [mono, c] : cloud_) {
    if (c.zeta == 0) continue;
    if (mono.b == 0) fail(ErrorCode::InvalidInput, "form has a pole along y = 0");
    B.add_term(mono.a, mono.b - 1, c.zeta);
  }
  return B;
}

void OneForm::add_log(Int a, Int b, const Rational& mu, const Rational& zeta) {
  if (mu == 0 && zeta == 0) return;
  if (a < 0 || b < 0) fail(ErrorCode::InvalidInput, "negative exponent in form");
  auto [it, inserted] = cloud_.try_emplace(Monomial{a, b}, LogCoefficients{mu, zeta});
  if (!inserted) {
    it->second.mu += mu;
    it->second.zeta += zeta;
    if (it->second.mu == 0 && it->second.zeta == 0) cloud_.erase(it);
  }
}

void OneForm::add_scaled(const Rational& c, Int a, Int b, const OneForm& other) {
  if (c == 0) return;
  for (const auto& [mono, k] : other.cloud_) add_log(mono.a + a, mono.b + b, c * k.mu, c * k.zeta);
}

OneForm OneForm::operator+(const OneForm& o) const {
  OneForm r = *this;
  r.add_scaled(1, 0, 0, o);
  return r;
}

OneForm OneForm::operator-(const OneForm& o) const {
  OneForm r = *this;
  r.add_scaled(-1, 0, 0, o);
  return r;
}

OneForm OneForm::scaled(const Rational& c) const {
  OneForm r;
  r.add_scaled(c, 0, 0, *this);
  return r;
}

OneForm OneForm::shifted(Int a, Int b) const {
  OneForm r;
  for (const auto& [mono, k] : cloud_) r.cloud_.emplace(Monomial{mono.a + a, mono.b + b}, k);
  return r;
}

OneForm OneForm::multiplied(const Polynomial& f) const {
  OneForm r;
  for (const auto& [mono, c] : f.terms()) r.add_scaled(c, mono.a, mono.b, *this);
  return r;
}

OneForm OneForm::divided_by_monomial(Int a, Int b) const {
  OneForm r;
  for (const auto& [mono, k] : cloud_) {
    if (mono.a < a || mono.b < b) fail(ErrorCode::Internal, "monomial does not divide the form");
    r.cloud_.emplace(Monomial{mono.a - a, mono.b - b}, k);
  }
  return r;
}

mpz_class OneForm::denominator_lcm() const {
  mpz_class l = 1;
  for (const auto& [mono, k] : cloud_) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), k.mu.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), k.zeta.get_den_mpz_t());
  }
  return l;
}

Region::Region(const PuiseuxPair& p, const Monomial& b) : pair(p), copair(cusp::copair(p)), base(b) {}

bool Region::contains(const Monomial& p) const {
  const Int da = p.a - base.a;
  const Int db = p.b - base.b;
  return (pair.n() - copair.b) * da + (pair.m() - copair.d) * db >= 0 && copair.b * da + copair.d * db >= 0;
}

namespace {

void require_nonzero(const OneForm& w) {
  if (w.is_zero()) fail(ErrorCode::ZeroForm, "operation needs a nonzero form");
}

}  // namespace

Int nu_E_form(const OneForm& w, const PuiseuxPair& pair) {
  require_nonzero(w);
  Int best = std::numeric_limits<Int>::max();
  for (const auto& [mono, k] : w.log_cloud()) best = std::min(best, mono.weight(pair));
  return best;
}

OneForm initial_part(const OneForm& w, const PuiseuxPair& pair, Int q) {
  Int order = nu_E_form(w, pair);
  if (q > order) fail(ErrorCode::QAboveOrder, "q exceeds the divisorial order");
  OneForm r;
  if (q < order) return r;
  for (const auto& [mono, k] : w.log_cloud()) {
    if (mono.weight(pair) == q) r.add_log(mono.a, mono.b, k.mu, k.zeta);
  }
  return r;
}

Monomial monomial_factor(const OneForm& w) {
  require_nonzero(w);
  Monomial f{std::numeric_limits<Int>::max(), std::numeric_limits<Int>::max()};
  for (const auto& [mono, k] : w.log_cloud()) {
    f.a = std::min(f.a, mono.a);
    f.b = std::min(f.b, mono.b);
  }
  return f;
}

Monomial holomorphic_factor(const OneForm& w) {
  require_nonzero(w);
  Monomial f{std::numeric_limits<Int>::max(), std::numeric_limits<Int>::max()};
  for (const auto& [mono, k] : w.log_cloud()) {
    f.a = std::min(f.a, mono.a - (k.mu != 0 ? 1 : 0));
    f.b = std::min(f.b, mono.b - (k.zeta != 0 ? 1 : 0));
  }
  return {std::max<Int>(f.a, 0), std::max<Int>(f.b, 0)};
}

Int rdo(const OneForm& w, const PuiseuxPair& pair) {
  return nu_E_form(w, pair) - holomorphic_factor(w).weight(pair);
}

bool is_basic(const OneForm& w, const PuiseuxPair& pair) { return rdo(w, pair) < pair.product(); }

std::optional<Monomial> is_prebasic(const OneForm& w, const PuiseuxPair& pair) {
  const Int order = nu_E_form(w, pair);
  std::optional<Monomial> vertex;
  for (const auto& [mono, k] : w.log_cloud()) {
    if (mono.weight(pair) != order) continue;
    if (vertex) return std::nullopt;  // the region touches its weight line only at the vertex
    vertex = mono;
  }
  Region region(pair, *vertex);
  for (const auto& [mono, k] : w.log_cloud()) {
    if (!region.contains(mono)) return std::nullopt;
  }
  return vertex;
}

InitialPart prebasic_initial_part(const OneForm& w, const PuiseuxPair& pair) {
  auto v = is_prebasic(w, pair);
  if (!v) fail(ErrorCode::NotPreBasic, "form is not pre-basic");
  return {*v, w.log_cloud().at(*v)};
}

bool is_resonant(const OneForm& w, const PuiseuxPair& pair) {
  InitialPart in = prebasic_initial_part(w, pair);
  return pair.n() * in.coefficients.mu + pair.m() * in.coefficients.zeta == 0;
}

std::optional<Reduction> reduce_step(const OneForm& w, const OneForm& by, const PuiseuxPair& pair) {
  InitialPart iw = prebasic_initial_part(w, pair);
  InitialPart ib = prebasic_initial_part(by, pair);
  if (ib.vertex.a > iw.vertex.a || ib.vertex.b > iw.vertex.b) return std::nullopt;
  const LogCoefficients& cw = iw.coefficients;
  const LogCoefficients& cb = ib.coefficients;
  if (cw.mu * cb.zeta != cw.zeta * cb.mu) return std::nullopt;
  Rational mu = cb.mu != 0 ? Rational(cw.mu / cb.mu) : Rational(cw.zeta / cb.zeta);
  Int a = iw.vertex.a - ib.vertex.a;
  Int b = iw.vertex.b - ib.vertex.b;
  OneForm result = w;
  result.add_scaled(-mu, a, b, by);
  if (!result.is_zero() && nu_E_form(result, pair) <= nu_E_form(w, pair)) {
    fail(ErrorCode::Internal, "reduction did not raise the divisorial order");
  }
  return Reduction{mu, a, b, std::move(result)};
}

}  // namespace cusp
