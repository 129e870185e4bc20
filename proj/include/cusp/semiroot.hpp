#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cusp/stdbasis.hpp"

namespace cusp {

// The branch (t^n, a t^m + ...) invariant by w, solved so that the pullback
// of w vanishes modulo t^T. w must be pre-basic and resonant for the pair.
PuiseuxCurve solve_invariant_branch(const OneForm& w, const Rational& a, const PuiseuxPair& pair, Int truncation);

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

struct SemirootReport {
  int i;
  Rational a;
  PuiseuxCurve curve;
  std::vector<Int> expected;                 // basis of Lambda_{i-1}
  std::optional<std::vector<Int>> computed;  // algorithm
  std::optional<std::vector<Int>> oracle;
  std::vector<Check> checks;
  bool pass() const;
  // First failing check, if any.
  const Check* first_failure() const;
};

// Truncation used for semiroot curves: c_Gamma + n + m.
Int semiroot_truncation(const PuiseuxPair& pair);

// 1 <= i <= s + 1 on an adjusted basis.
SemirootReport verify_main_theorem(const ExtendedStandardBasis& basis, int i, const Rational& a);
// Throws VerificationFailure carrying the first failed check.
void enforce(const SemirootReport& report);

// lambda_1 - n, or nullopt for a quasi-homogeneous curve.
std::optional<Int> zariski_invariant(const PuiseuxCurve& curve);

}  // namespace cusp
