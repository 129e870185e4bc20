#include "cusp/semiroot.hpp"

#include <map>
#include <set>

#include "cusp/blowup.hpp"

namespace cusp {

PuiseuxCurve solve_invariant_branch(const OneForm& w, const Rational& a, const PuiseuxPair& pair, Int truncation) {
  require_singular(pair);
  if (a == 0) fail(ErrorCode::InvalidInput, "free point parameter must be nonzero");
  if (w.is_zero()) fail(ErrorCode::ZeroForm, "semiroot of the zero form");
  if (!is_totally_dicritical(w, pair).dicritical) fail(ErrorCode::NotDicritical, "form is not pre-basic and resonant");
  if (truncation < minimum_truncation(pair)) fail(ErrorCode::InvalidInput, "truncation below c_Gamma + n + m");

  const Int n = pair.n();
  const Int m = pair.m();
  const InitialPart vertex = prebasic_initial_part(w, pair);
  const Int order = vertex.vertex.weight(pair);
  if (vertex.vertex.b == 0 || vertex.coefficients.zeta == 0) fail(ErrorCode::ZeroPivot, "vertex does not involve y");

  // y = t^m Y, Y_0 = a; Z[beta] holds the coefficients of Y^beta.
  const Int steps = truncation - n;
  std::vector<Rational> Y(static_cast<std::size_t>(steps));
  Y[0] = a;
  std::set<Int> betas;
  for (const auto& [mono, k] : w.log_cloud()) {
    if (mono.b > 0) betas.insert(mono.b);
  }
  std::map<Int, std::vector<Rational>> Z;
  std::map<Int, Rational> a_pow;  // a^(beta - 1)
  for (Int beta : betas) {
    auto& z = Z[beta];
    z.resize(static_cast<std::size_t>(steps));
    Rational p = 1;
    for (Int e = 0; e < beta - 1; ++e) p *= a;
    a_pow[beta] = p;
    z[0] = p * a;
  }

  const Rational pivot_base = vertex.coefficients.zeta * a_pow[vertex.vertex.b];
  Rational acc, tmp;
  for (Int d = 1; d < steps; ++d) {
    // Z_beta[d] with Y_d taken as zero (Miller's recurrence for powers).
    for (Int beta : betas) {
      auto& z = Z[beta];
      acc = 0;
      for (Int i = 1; i < d; ++i) {
        const Rational& yi = Y[static_cast<std::size_t>(i)];
        if (yi == 0) continue;
        const Rational& zi = z[static_cast<std::size_t>(d - i)];
        if (zi == 0) continue;
        tmp = yi * zi;
        tmp *= (beta + 1) * i - d;
        acc += tmp;
      }
      z[static_cast<std::size_t>(d)] = acc / (Rational(d) * a);
    }
    // Coefficient of t^N in the pullback, N = order + d.
    const Int N = order + d;
    acc = 0;
    for (const auto& [mono, k] : w.log_cloud()) {
      const Int rest = N - n * mono.a;
      if (mono.b == 0) {
        if (rest == 0) acc += n * k.mu;
        continue;
      }
      const Int idx = rest - m * mono.b;
      if (idx < 0 || idx > d) continue;
      const Rational& z = Z[mono.b][static_cast<std::size_t>(idx)];
      if (z == 0) continue;
      tmp = k.zeta * rest;
      tmp /= mono.b;
      tmp += n * k.mu;
      acc += tmp * z;
    }
    const Rational pivot = pivot_base * d;
    const Rational yd = -acc / pivot;
    Y[static_cast<std::size_t>(d)] = yd;
    if (yd != 0) {
      for (Int beta : betas) Z[beta][static_cast<std::size_t>(d)] += beta * a_pow[beta] * yd;
    }
  }

  TruncatedSeries y(truncation + m - n);
  for (Int d = 0; d < steps; ++d) {
    if (Y[static_cast<std::size_t>(d)] != 0) y.set(m + d, Y[static_cast<std::size_t>(d)]);
  }
  return PuiseuxCurve::from_series(n, y, truncation);
}

bool SemirootReport::pass() const { return first_failure() == nullptr; }

const Check* SemirootReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

Int semiroot_truncation(const PuiseuxPair& pair) { return minimum_truncation(pair); }

namespace {

std::string join(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

}  // namespace

SemirootReport verify_main_theorem(const ExtendedStandardBasis& basis, int i, const Rational& a) {
  const int s = basis.s();
  if (i < 1 || i > s + 1) fail(ErrorCode::IndexOutOfRange, "semiroot index must satisfy 1 <= i <= s + 1");
  if (i == s + 1 && !basis.is_adjusted()) fail(ErrorCode::IndexOutOfRange, "i = s + 1 needs the adjusted form");
  const PuiseuxPair& pair = basis.curve.pair();
  if (basis.curve.truncation() < default_truncation(pair)) {
    fail(ErrorCode::InvalidInput, "source truncation below c_Gamma + 2nm");
  }

  const OneForm& wi = basis.form(i);
  PuiseuxCurve root = solve_invariant_branch(wi, a, pair, semiroot_truncation(pair));
  const GammaSemimodule expected = basis.semimodule.truncated(i - 1);
  SemirootReport rep{i, a, root, expected.basis(), std::nullopt, std::nullopt, {}};

  const ExtendedStandardBasis rb = compute_standard_basis(root);
  rep.computed = rb.lambda();
  rep.checks.push_back({"algorithm_semimodule", *rep.computed == rep.expected, join(*rep.computed) + " vs " + join(rep.expected)});
  const GammaSemimodule orc = semimodule_oracle(root);
  rep.oracle = orc.basis();
  rep.checks.push_back({"oracle_semimodule", *rep.oracle == rep.expected, join(*rep.oracle) + " vs " + join(rep.expected)});

  for (int j = -1; j < i; ++j) {
    const OrderResult v = nu_C_form(root, basis.form(j));
    const Int lam = basis.semimodule.lambda(j);
    rep.checks.push_back({"value_omega_" + std::to_string(j), v == OrderResult::Finite(lam),
                          to_string(v) + " vs " + std::to_string(lam)});
  }
  const OrderResult vi = nu_C_form(root, wi);
  rep.checks.push_back({"invariant_omega_" + std::to_string(i), !vi.finite, to_string(vi)});
  rep.checks.push_back({"leading_coefficient", root.leading_coefficient() == a,
                        to_string(root.leading_coefficient()) + " vs " + to_string(a)});
  const std::vector<Int> t = basis.critical_orders();
  for (int j = 1; j <= i; ++j) {
    const Int e = nu_E_form(basis.form(j), pair);
    const Int tj = t[static_cast<std::size_t>(j + 1)];
    rep.checks.push_back({"divisorial_omega_" + std::to_string(j), e == tj, std::to_string(e) + " vs " + std::to_string(tj)});
  }
  return rep;
}

void enforce(const SemirootReport& report) {
  if (const Check* c = report.first_failure()) {
    fail(ErrorCode::VerificationFailure, "semiroot i=" + std::to_string(report.i) + " a=" + to_string(report.a) + ": " +
                                             c->name + " (" + c->detail + ")");
  }
}

std::optional<Int> zariski_invariant(const PuiseuxCurve& curve) {
  const ExtendedStandardBasis b = compute_standard_basis(curve);
  if (b.s() < 1) return std::nullopt;
  return b.semimodule.lambda(1) - curve.pair().n();
}

}  // namespace cusp
