// Exact arithmetic helpers on top of GMP's mpz_class / mpq_class.
//
// mpq_class already keeps values in lowest terms with the sign on the
// numerator, which is exactly the serialization contract used everywhere
// in this project ("p/q", integers bare).

#pragma once

#include <gmpxx.h>

#include <string>

namespace linkinv {

using Int = mpz_class;
using Rat = mpq_class;

// GMP's classes take long, not long long; identical on LP64, which is all
// this project targets.
static_assert(sizeof(long) == sizeof(long long), "LP64 platform expected");

inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

inline Rat make_rat(long long num, long long den) {
  Rat q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

inline Rat make_rat(long long v) { return Rat(static_cast<long>(v)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// "p/q" in lowest terms, bare integer when the denominator is 1.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline std::string int_str(const Int& n) { return n.get_str(); }

// Floored modulus with non-negative representative in [0, m).
inline long long mod_nonneg(long long value, long long m) {
  long long r = value % m;
  return r < 0 ? r + m : r;
}

}  // namespace linkinv
