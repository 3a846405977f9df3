#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace liesec {

using Int = mpz_class;       // arbitrary-precision integer (dimensions, coefficients)
using Rational = mpq_class;  // exact rational (forms, Bott shifts, matrix entries)

// Error hierarchy. Everything thrown by the library derives from Error; the CLI
// maps each subclass to a distinct nonzero exit code.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : Error {
  using Error::Error;
};
// Mathematically invalid request (non-dominant weight, unsupported type, ...).
struct DomainError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};
// Work-size cap exceeded.
struct ResourceError : Error {
  using Error::Error;
};
// An internal consistency check failed (negative multiplicity, dimension
// mismatch, non-integral twist). Indicates a bug or bad input data, never
// silently ignored.
struct InternalCheckError : Error {
  using Error::Error;
};

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw InternalCheckError(msg);
}

// gmpxx has no long long constructors; on this platform long is 64-bit.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Rational to_rat(long long num, long long den = 1) {
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

// Exact conversion helpers; throw if the value does not fit.
inline long long to_ll(const Int& z) {
  if (!z.fits_slong_p()) throw InternalCheckError("integer too large for machine word: " + z.get_str());
  return z.get_si();
}

inline long long rat_to_ll(const Rational& q, const std::string& what) {
  if (q.get_den() != 1) throw InternalCheckError(what + ": expected integer, got " + q.get_str());
  return to_ll(q.get_num());
}

}  // namespace liesec
