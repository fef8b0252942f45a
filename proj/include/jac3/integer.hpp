#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace jac3 {

// Arbitrary-precision signed integer. Sequence terms grow like 2^n and
// indices up to 10^6 have to stay representable, so fixed-width types are
// not an option.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

// Signed sequence index.
using Index = std::int64_t;

// 2^k for k >= 0.
inline Integer pow2(Index k) {
  if (k < 0) throw std::invalid_argument("pow2: exponent must be non-negative");
  return Integer(1) << static_cast<unsigned long>(k);
}

// Euclidean residue of n mod 3, always in {0, 1, 2} (also for negative n).
inline int mod3(Index n) {
  int r = static_cast<int>(n % 3);
  return r < 0 ? r + 3 : r;
}

// Exact quotient a / d; throws if d does not divide a.
inline Integer exact_div(const Integer& a, const Integer& d) {
  if (d == 0) throw std::invalid_argument("exact_div: zero divisor");
  if (a % d != 0)
    throw std::logic_error("exact_div: " + a.str() + " is not divisible by " + d.str());
  return a / d;
}

}  // namespace jac3
