#pragma once

#include <optional>
#include <vector>

#include "cusp/forms.hpp"

namespace cusp {

enum class StepKind {
  Free,    // x = x1, y = x1 y1; next pair (n, m - n)
  Corner,  // x = y1, y = x1 y1; next pair (m - n, n)
};

const char* step_name(StepKind kind);

struct BlowupStep {
  PuiseuxPair pair;  // pair before the substitution
  StepKind kind;
};

// Euclid trace of a coprime pair down to (1, 1).
class CuspidalSequence {
 public:
  explicit CuspidalSequence(const PuiseuxPair& pair);

  const PuiseuxPair& pair() const { return pair_; }
  const std::vector<BlowupStep>& steps() const { return steps_; }
  // Pairs visited, terminal (1, 1) included.
  std::vector<PuiseuxPair> pairs() const;
  int length() const { return static_cast<int>(steps_.size()) + 1; }
  int freeness_index() const { return freeness_; }

 private:
  PuiseuxPair pair_;
  std::vector<BlowupStep> steps_;
  int freeness_;
};

CuspidalSequence build_sequence(const PuiseuxPair& pair);

Monomial psi(StepKind kind, const Monomial& p);
LogCoefficients transform_coefficients(StepKind kind, const LogCoefficients& c);
PuiseuxPair next_pair(const PuiseuxPair& pair);
StepKind step_kind(const PuiseuxPair& pair);
// Co-pair of next_pair(pair) obtained from the co-pair of pair.
CoPair copair_recursion(const PuiseuxPair& pair, const CoPair& c);

struct TransformedForm {
  OneForm pulled_back;     // cloud = psi(cloud of the input)
  Int exceptional_order;   // r = min(alpha + beta)
  OneForm factored;        // pulled_back divided by the r-th power of the exceptional coordinate
};

// Single-step pullback at index `step` (0 <= step < N - 1).
TransformedForm transform_form(const CuspidalSequence& seq, const OneForm& w, int step);
TransformedForm transform_form(StepKind kind, const OneForm& w);

struct DicriticalCertificate {
  bool combinatorial;
  bool geometric;
  std::optional<Monomial> vertex;  // pre-basic vertex, if any
  bool resonant;
  // Terminal-chart data after stripping the monomial factor.
  Monomial terminal_factor;
  std::optional<LogCoefficients> terminal_unit;
};

struct DicriticalVerdict {
  bool dicritical;
  DicriticalCertificate certificate;
};

// Evaluates pre-basic + resonant and the terminal-chart test independently;
// InternalDisagreement if they differ.
DicriticalVerdict is_totally_dicritical(const OneForm& w, const PuiseuxPair& pair);

}  // namespace cusp
