#include "cusp/core.hpp"

#include <cctype>

namespace cusp {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::NotInSemigroup: return "NotInSemigroup";
    case ErrorCode::NotUniqueRange: return "NotUniqueRange";
    case ErrorCode::NonMinimalBasis: return "NonMinimalBasis";
    case ErrorCode::InvalidSemimodule: return "InvalidSemimodule";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotACusp: return "NotACusp";
    case ErrorCode::OrderTooLow: return "OrderTooLow";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::QAboveOrder: return "QAboveOrder";
    case ErrorCode::NotPreBasic: return "NotPreBasic";
    case ErrorCode::NotDicritical: return "NotDicritical";
    case ErrorCode::ZeroPivot: return "ZeroPivot";
    case ErrorCode::InternalDisagreement: return "InternalDisagreement";
    case ErrorCode::TruncationExhausted: return "TruncationExhausted";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    fail(ErrorCode::InvalidInput, "malformed rational '" + std::string(text) + "'");
  }
  std::string ns(num);
  if (ns[0] == '+') ns.erase(0, 1);
  mpz_class p(ns, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) fail(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

Int floor_mod(Int a, Int b) { return a - b * floor_div(a, b); }

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int mod_inverse(Int a, Int n) {
  if (n == 1) return 0;
  Int r0 = n, r1 = floor_mod(a, n), s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) fail(ErrorCode::Internal, "mod_inverse of non-unit");
  return floor_mod(s0, n);
}

}  // namespace cusp
