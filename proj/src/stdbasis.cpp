#include "cusp/stdbasis.hpp"

#include <map>

namespace cusp {

const OneForm& ExtendedStandardBasis::form(int i) const {
  if (i < -1 || i + 1 >= static_cast<int>(forms.size())) {
    fail(ErrorCode::IndexOutOfRange, "basis form " + std::to_string(i) + " does not exist");
  }
  return forms[static_cast<std::size_t>(i + 1)];
}

namespace {

struct Target {
  int j;
  Int c;
  Int d;
};

// v = lambda_j + c n + d m with the smallest j, then the smallest c.
std::optional<Target> cancellation_target(const GammaSemimodule& sm, Int v) {
  const CuspSemigroup& g = sm.semigroup();
  for (int j = -1; j <= sm.s(); ++j) {
    const Int r = v - sm.lambda(j);
    if (r < 0 || !g.contains(r)) continue;
    for (Int c = 0; c * g.n() <= r; ++c) {
      if ((r - c * g.n()) % g.m() == 0) return Target{j, c, (r - c * g.n()) / g.m()};
    }
  }
  return std::nullopt;
}

struct Round {
  OneForm form;
  std::vector<Polynomial> coefficients;
  OrderResult value;
};

// Seeds x^l1 omega_s' or y^l2 omega_s' (whichever realizes u_{s'+1}) and cancels
// the differential value against monomial multiples of earlier forms while it
// stays below `cap`. With `force_first` the seed value is always cancelled.
Round run_round(const PuiseuxCurve& curve, const std::vector<OneForm>& forms, const GammaSemimodule& sm, Int cap,
                bool force_first) {
  const int sp = sm.s();
  const PuiseuxPair& pair = curve.pair();
  const Limits lim = sm.limits(sp);
  const Int u = sm.axis(sp + 1);
  const Int lam = sm.lambda(sp);
  Round r{OneForm(), std::vector<Polynomial>(static_cast<std::size_t>(sp + 2)), OrderResult::AtLeast(0)};
  Int sa = 0;
  Int sb = 0;
  if (u == lam + pair.n() * lim.ell1) {
    sa = lim.ell1;
  } else {
    sb = lim.ell2;
  }
  const OneForm& top = forms[static_cast<std::size_t>(sp + 1)];
  r.form.add_scaled(1, sa, sb, top);
  r.coefficients[static_cast<std::size_t>(sp + 1)].add_term(sa, sb, 1);

  const Int bound = cap + 1;
  if (bound > curve.truncation()) fail(ErrorCode::TruncationExhausted, "curve truncation below the round bound");
  TruncatedSeries a = pullback(curve, top, bound, sa, sb);
  bool first = true;
  for (Int iter = 0;; ++iter) {
    if (iter > bound) fail(ErrorCode::TruncationExhausted, "cancellation loop did not terminate below the bound");
    r.value = a.order();
    if (!r.value.finite) break;
    const Int v = r.value.value;
    if (v >= cap && !(first && force_first)) break;
    auto target = cancellation_target(sm, v);
    if (!target) break;
    const OneForm& by = forms[static_cast<std::size_t>(target->j + 1)];
    TruncatedSeries p = pullback(curve, by, bound, target->c, target->d);
    const Rational mu = a[v] / p[v];
    a.subtract_scaled(mu, 0, p);
    r.form.add_scaled(-mu, target->c, target->d, by);
    r.coefficients[static_cast<std::size_t>(target->j + 1)].add_term(target->c, target->d, -mu);
    first = false;
  }

  const mpz_class scale = r.form.denominator_lcm();
  if (scale != 1) {
    const Rational q(scale);
    r.form = r.form.scaled(q);
    for (auto& f : r.coefficients) f = f.scaled(q);
  }
  return r;
}

void check_critical_order(const OneForm& w, const GammaSemimodule& sm, int i) {
  const Int e = nu_E_form(w, sm.semigroup().pair());
  const Int t = sm.critical_order(i);
  if (e != t) {
    fail(ErrorCode::Internal, "nu_E(omega_" + std::to_string(i) + ") = " + std::to_string(e) + " but t = " + std::to_string(t));
  }
}

}  // namespace

ExtendedStandardBasis compute_standard_basis(const PuiseuxCurve& curve) {
  const PuiseuxPair& pair = curve.pair();
  require_singular(pair);
  const CuspSemigroup& g = curve.semigroup();
  ExtendedStandardBasis basis{curve, GammaSemimodule(g, {pair.n(), pair.m()}), {OneForm::dx(), OneForm::dy()}, {}, std::nullopt};
  for (;;) {
    Round r = run_round(curve, basis.forms, basis.semimodule, g.conductor(), false);
    if (!r.value.finite || r.value.value >= g.conductor() || basis.semimodule.contains(r.value.value)) break;
    std::vector<Int> lambda = basis.semimodule.basis();
    lambda.push_back(r.value.value);
    GammaSemimodule next(g, lambda);
    if (!next.is_increasing()) fail(ErrorCode::Internal, "computed semimodule is not increasing");
    check_critical_order(r.form, next, next.s());
    basis.semimodule = std::move(next);
    basis.forms.push_back(std::move(r.form));
    basis.construction.push_back(std::move(r.coefficients));
  }
  return basis;
}

AdjustedForm dicritically_adjust(const ExtendedStandardBasis& basis) {
  const PuiseuxCurve& curve = basis.curve;
  const CuspSemigroup& g = curve.semigroup();
  const int s = basis.s();
  std::vector<OneForm> forms(basis.forms.begin(), basis.forms.begin() + s + 2);
  Round r = run_round(curve, forms, basis.semimodule, g.conductor() + 1, true);
  if (r.value.finite && r.value.value <= g.conductor()) {
    fail(ErrorCode::Internal, "differential value " + std::to_string(r.value.value) + " left in the semimodule gap");
  }
  const TruncatedSeries a = pullback(curve, r.form);
  const Polynomial h = integrate_against_conductor(curve, a.shifted(-1));

  AdjustedForm out{r.form - OneForm::differential(h), std::move(r.coefficients), h, OrderResult::AtLeast(0)};
  out.coefficients[0] = out.coefficients[0] - h.derivative_x();
  out.coefficients[1] = out.coefficients[1] - h.derivative_y();
  out.value = nu_C_form(curve, out.form);
  if (out.value.finite) {
    fail(ErrorCode::TruncationExhausted, "adjusted form has finite value " + std::to_string(out.value.value));
  }
  check_critical_order(out.form, basis.semimodule, s + 1);
  return out;
}

ExtendedStandardBasis compute_extended_standard_basis(const PuiseuxCurve& curve) {
  ExtendedStandardBasis basis = compute_standard_basis(curve);
  AdjustedForm adj = dicritically_adjust(basis);
  basis.forms.push_back(std::move(adj.form));
  basis.construction.push_back(std::move(adj.coefficients));
  basis.adjusted_value = adj.value;
  return basis;
}

DelormeDecomposition delorme_decompose(const ExtendedStandardBasis& basis, int i, int j) {
  const int s = basis.s();
  if (j < 0 || j > i || i > s) fail(ErrorCode::IndexOutOfRange, "Delorme indices need 0 <= j <= i <= s");
  if (i == s && !basis.is_adjusted()) fail(ErrorCode::IndexOutOfRange, "i = s needs the adjusted form");

  std::vector<Polynomial> f = basis.construction[static_cast<std::size_t>(i)];
  for (int level = i; level > j; --level) {
    // omega_level = sum g_l omega_l over l < level
    const std::vector<Polynomial>& gl = basis.construction[static_cast<std::size_t>(level - 1)];
    const Polynomial top = f[static_cast<std::size_t>(level + 1)];
    f.pop_back();
    for (std::size_t l = 0; l < f.size(); ++l) f[l] = f[l] + top * gl[l];
  }

  const std::vector<Int> t = basis.critical_orders();
  DelormeDecomposition out{i, j, -2, t[static_cast<std::size_t>(i + 2)] - t[static_cast<std::size_t>(j + 1)] + basis.semimodule.lambda(j),
                           std::move(f), {}};

  OneForm residual = basis.form(i + 1);
  for (int l = -1; l <= j; ++l) {
    const Polynomial& fl = out.coefficients[static_cast<std::size_t>(l + 1)];
    residual = residual - basis.form(l).multiplied(fl);
    const Int lam = basis.semimodule.lambda(l);
    const Int bound = out.vij + 1 - lam;
    if (bound <= 0) {
      out.values.push_back(OrderResult::AtLeast(out.vij + 1));
      continue;
    }
    OrderResult o = nu_C_function(basis.curve, fl, bound);
    out.values.push_back(o.finite ? OrderResult::Finite(o.value + lam) : OrderResult::AtLeast(out.vij + 1));
  }
  if (!residual.is_zero()) fail(ErrorCode::VerificationFailure, "Delorme residual is not zero");

  for (int l = -1; l <= j; ++l) {
    const OrderResult& o = out.values[static_cast<std::size_t>(l + 1)];
    if (o.finite && o.value < out.vij) {
      fail(ErrorCode::VerificationFailure, "summand " + std::to_string(l) + " has value below v_ij");
    }
    if (l == j && !(o.finite && o.value == out.vij)) {
      fail(ErrorCode::VerificationFailure, "summand j does not attain v_ij");
    }
    if (l != j && o.finite && o.value == out.vij) {
      if (out.k != -2) fail(ErrorCode::VerificationFailure, "more than one distinguished index");
      out.k = l;
    }
  }
  if (out.k == -2) fail(ErrorCode::VerificationFailure, "no distinguished index k < j");
  return out;
}

GammaSemimodule semimodule_oracle(const PuiseuxCurve& curve) {
  const PuiseuxPair& pair = curve.pair();
  require_singular(pair);
  const CuspSemigroup& g = curve.semigroup();
  const Int n = pair.n();
  const Int m = pair.m();
  const Int bound = g.conductor() + n;
  if (bound > curve.truncation()) fail(ErrorCode::TruncationExhausted, "curve truncation below the oracle bound");

  std::map<Int, TruncatedSeries> pivots;  // leading order -> row with leading coefficient 1
  auto insert = [&](TruncatedSeries row) {
    for (;;) {
      OrderResult o = row.order();
      if (!o.finite) return;
      auto it = pivots.find(o.value);
      if (it == pivots.end()) {
        const Rational lead = row[o.value];
        pivots.emplace(o.value, row.scaled(1 / lead));
        return;
      }
      const Rational c = row[o.value];
      row.subtract_scaled(c, 0, it->second);
    }
  };
  for (Int b = 0; b * m < bound; ++b) {
    for (Int a = 0; a * n + b * m < bound; ++a) {
      if (a >= 1) insert(pullback(curve, OneForm::log_term(a, b, 1, 0), bound));
      if (b >= 1) insert(pullback(curve, OneForm::log_term(a, b, 0, 1), bound));
    }
  }
  std::vector<Int> generators;
  for (const auto& [v, row] : pivots) generators.push_back(v);
  for (Int v = bound; v < bound + n; ++v) generators.push_back(v);
  return GammaSemimodule(g, minimal_basis(g, generators));
}

}  // namespace cusp
