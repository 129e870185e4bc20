#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cusp {

// Exponents, weights and semigroup values. Inputs are bounded at the pair
// constructor so that every derived quantity fits comfortably.
using Int = std::int64_t;
using Rational = mpq_class;

enum class ErrorCode {
  InvalidPair,
  NotInSemigroup,
  NotUniqueRange,
  NonMinimalBasis,
  InvalidSemimodule,
  IndexOutOfRange,
  NotACusp,
  OrderTooLow,
  ZeroForm,
  ZeroPolynomial,
  QAboveOrder,
  NotPreBasic,
  NotDicritical,
  ZeroPivot,
  InternalDisagreement,
  TruncationExhausted,
  VerificationFailure,
  InvalidInput,
  Internal,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

// "p/q" or "p", optional leading '-', result in lowest terms.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);
Int floor_mod(Int a, Int b);
Int gcd(Int a, Int b);
// Inverse of a modulo n (n >= 1, gcd(a, n) = 1); returns 0 when n = 1.
Int mod_inverse(Int a, Int n);

}  // namespace cusp
