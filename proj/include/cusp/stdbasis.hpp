#pragma once

#include <optional>
#include <vector>

#include "cusp/forms.hpp"
#include "cusp/semimodule.hpp"
#include "cusp/series.hpp"

namespace cusp {

// Forms omega_{-1} = dx, omega_0 = dy, omega_1, ..., omega_s and, once
// adjusted, omega_{s+1} with nu_C = AtLeast(T).
struct ExtendedStandardBasis {
  PuiseuxCurve curve;
  GammaSemimodule semimodule;
  std::vector<OneForm> forms;
  // construction[i] lists f_{-1}, ..., f_i with omega_{i+1} = sum f_l omega_l.
  std::vector<std::vector<Polynomial>> construction;
  std::optional<OrderResult> adjusted_value;

  int s() const { return semimodule.s(); }
  bool is_adjusted() const { return adjusted_value.has_value(); }
  // -1 <= i <= s, or s + 1 when adjusted.
  const OneForm& form(int i) const;
  std::vector<Int> lambda() const { return semimodule.basis(); }
  std::vector<Int> critical_orders() const { return semimodule.critical_orders(); }
  std::vector<Int> axes() const { return semimodule.axes(); }
};

ExtendedStandardBasis compute_standard_basis(const PuiseuxCurve& curve);

struct AdjustedForm {
  OneForm form;
  std::vector<Polynomial> coefficients;  // omega_{s+1} = sum_{l <= s} f_l omega_l
  Polynomial primitive;                  // h removed by the final integration step
  OrderResult value;
};

AdjustedForm dicritically_adjust(const ExtendedStandardBasis& basis);
// Standard basis followed by the dicritical adjustment.
ExtendedStandardBasis compute_extended_standard_basis(const PuiseuxCurve& curve);

struct DelormeDecomposition {
  int i;
  int j;
  int k;
  Int vij;
  std::vector<Polynomial> coefficients;  // f_{-1}, ..., f_j
  std::vector<OrderResult> values;       // nu_C(f_l omega_l), computed up to vij + 1
};

// 0 <= j <= i <= s; i = s needs an adjusted basis. Checks the residual and
// the value pattern, throwing VerificationFailure on violation.
DelormeDecomposition delorme_decompose(const ExtendedStandardBasis& basis, int i, int j);

// Semimodule of differential values by linear algebra on monomial forms of
// weight below c_Gamma + n.
GammaSemimodule semimodule_oracle(const PuiseuxCurve& curve);

}  // namespace cusp
