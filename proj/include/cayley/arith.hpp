#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cayley {

// Exact arithmetic used throughout. Counting paths use Int only;
// generating-series views use Rat. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Binomial coefficient via stepwise exact division; C(n,k) = 0 outside range.
inline Int binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int b = 1;
  for (int i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;  // exact at every step
  }
  return b;
}

inline Int catalan(int n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

inline Int pow2(int e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  return Int(1) << e;
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Narrowing helper for loop bounds coming from exact integers known to be small.
inline long to_long(const Int& v) {
  if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
    throw std::overflow_error("to_long: value out of range");
  return static_cast<long>(v);
}

}  // namespace cayley
