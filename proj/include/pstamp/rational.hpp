#pragma once
// Exact rationals for growth-ratio reporting. The classification thresholds
// (3, 8, 27/4) are compared exactly; no floating point anywhere.

#include <compare>
#include <numeric>
#include <string>

#include "pstamp/common.hpp"

namespace pstamp {

// Nonnegative rational, stored reduced. Comparisons cross-multiply in 128
// bits, so 64-bit numerators and denominators never overflow.
struct Rational {
  Value num = 0;
  Value den = 1;

  static Rational of(Value n, Value d) {
    if (d == 0) fail(Errc::precondition_violated, "zero denominator");
    Value g = std::gcd(n, d);
    return Rational{n / g, d / g};
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    u128 lhs = u128(a.num) * b.den;
    u128 rhs = u128(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Rational& a, const Rational& b) { return (a <=> b) == 0; }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace pstamp
