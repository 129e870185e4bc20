#include "cusp/blowup.hpp"

#include <algorithm>
#include <limits>

namespace cusp {

const char* step_name(StepKind kind) { return kind == StepKind::Free ? "free" : "corner"; }

StepKind step_kind(const PuiseuxPair& pair) {
  return pair.m() >= 2 * pair.n() ? StepKind::Free : StepKind::Corner;
}

PuiseuxPair next_pair(const PuiseuxPair& pair) {
  if (pair.n() == 1 && pair.m() == 1) fail(ErrorCode::Internal, "(1,1) has no successor");
  if (step_kind(pair) == StepKind::Free) return PuiseuxPair(pair.n(), pair.m() - pair.n());
  return PuiseuxPair(pair.m() - pair.n(), pair.n());
}

CoPair copair_recursion(const PuiseuxPair& pair, const CoPair& c) {
  if (step_kind(pair) == StepKind::Free) return {c.b, c.d - c.b};
  return {pair.m() - pair.n() - c.d + c.b, pair.n() - c.b};
}

CuspidalSequence::CuspidalSequence(const PuiseuxPair& pair) : pair_(pair), freeness_(0) {
  PuiseuxPair p = pair;
  while (!(p.n() == 1 && p.m() == 1)) {
    steps_.push_back({p, step_kind(p)});
    p = next_pair(p);
  }
  const int N = length();
  if (N > 1) {
    int leading_free = 0;
    while (leading_free < static_cast<int>(steps_.size()) && steps_[static_cast<std::size_t>(leading_free)].kind == StepKind::Free) {
      ++leading_free;
    }
    freeness_ = std::min(leading_free + 1, N - 1);
  }
}

std::vector<PuiseuxPair> CuspidalSequence::pairs() const {
  std::vector<PuiseuxPair> out;
  for (const auto& s : steps_) out.push_back(s.pair);
  out.emplace_back(1, 1);
  return out;
}

CuspidalSequence build_sequence(const PuiseuxPair& pair) { return CuspidalSequence(pair); }

Monomial psi(StepKind kind, const Monomial& p) {
  return kind == StepKind::Free ? Monomial{p.a + p.b, p.b} : Monomial{p.b, p.a + p.b};
}

LogCoefficients transform_coefficients(StepKind kind, const LogCoefficients& c) {
  if (kind == StepKind::Free) return {c.mu + c.zeta, c.zeta};
  return {c.zeta, c.mu + c.zeta};
}

TransformedForm transform_form(StepKind kind, const OneForm& w) {
  TransformedForm out{OneForm(), 0, OneForm()};
  if (w.is_zero()) return out;
  Int r = std::numeric_limits<Int>::max();
  for (const auto& [mono, c] : w.log_cloud()) {
    const Monomial q = psi(kind, mono);
    const LogCoefficients k = transform_coefficients(kind, c);
    out.pulled_back.add_log(q.a, q.b, k.mu, k.zeta);
    r = std::min(r, mono.a + mono.b);
  }
  out.exceptional_order = r;
  // Free: E = {x1 = 0}; corner: E = {y1 = 0}.
  out.factored = kind == StepKind::Free ? out.pulled_back.divided_by_monomial(r, 0)
                                        : out.pulled_back.divided_by_monomial(0, r);
  return out;
}

TransformedForm transform_form(const CuspidalSequence& seq, const OneForm& w, int step) {
  if (step < 0 || step >= static_cast<int>(seq.steps().size())) {
    fail(ErrorCode::IndexOutOfRange, "blow-up step " + std::to_string(step) + " outside the sequence");
  }
  return transform_form(seq.steps()[static_cast<std::size_t>(step)].kind, w);
}

DicriticalVerdict is_totally_dicritical(const OneForm& w, const PuiseuxPair& pair) {
  if (w.is_zero()) fail(ErrorCode::ZeroForm, "dicriticalness of the zero form");
  DicriticalCertificate cert{false, false, is_prebasic(w, pair), false, {0, 0}, std::nullopt};
  if (cert.vertex) {
    cert.resonant = is_resonant(w, pair);
    cert.combinatorial = cert.resonant;
  }

  OneForm current = w;
  for (const auto& step : build_sequence(pair).steps()) current = transform_form(step.kind, current).factored;
  cert.terminal_factor = monomial_factor(current);
  OneForm unit = current.divided_by_monomial(cert.terminal_factor.a, cert.terminal_factor.b);
  auto it = unit.log_cloud().find(Monomial{0, 0});
  if (it != unit.log_cloud().end()) {
    cert.terminal_unit = it->second;
    cert.geometric = it->second.mu != 0 && it->second.mu + it->second.zeta == 0;
  }

  if (cert.combinatorial != cert.geometric) {
    fail(ErrorCode::InternalDisagreement, "combinatorial and geometric dicriticalness tests disagree");
  }
  return {cert.combinatorial, cert};
}

}  // namespace cusp
