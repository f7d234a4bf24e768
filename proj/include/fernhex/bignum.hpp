#pragma once

#include <gmpxx.h>

#include <string>

namespace fernhex {

/// Exact tiling counts. Always nonnegative in this library.
using BigNat = mpz_class;
/// Canonical exact rationals (gmp keeps them reduced with positive denominator).
using BigRat = mpq_class;

inline std::string to_decimal(const BigNat &n) { return n.get_str(10); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_decimal(const BigRat &q) {
  if (q.get_den() == 1) {
    return q.get_num().get_str(10);
  }
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

inline bool is_integral(const BigRat &q) { return q.get_den() == 1; }

inline BigRat make_rat(const BigNat &num, const BigNat &den) {
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

} // namespace fernhex
