#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace idg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k); zero for k < 0 or k > n.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace idg
