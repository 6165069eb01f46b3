#pragma once

#include <cstdint>
#include <numeric>

#include "pcc/errors.hpp"

namespace pcc {

// Exact rational, normalized with positive denominator. Sample errors are
// counts over sample sizes, so 64-bit components never get close to overflow.
struct Ratio {
  long long num = 0;
  long long den = 1;

  static Ratio of(long long num, long long den) {
    require_input(den != 0, "Ratio: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return Ratio{num, den};
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Ratio& a, const Ratio& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Ratio& a, const Ratio& b) {
    return a.num * b.den <= b.num * a.den;
  }
  friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
  friend bool operator>=(const Ratio& a, const Ratio& b) { return b <= a; }
};

}  // namespace pcc
