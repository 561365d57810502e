#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace odoprime {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// a mod m in [0, m) for m > 0, regardless of the sign of a.
inline BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

inline double to_double(const BigRat& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

inline BigInt bigint_abs(const BigInt& n) { return n < 0 ? BigInt(-n) : n; }

}  // namespace odoprime
