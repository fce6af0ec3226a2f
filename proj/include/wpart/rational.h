#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

#include "wpart/types.h"

namespace wpart {

// Exact non-reduced fraction num/den with den > 0. Comparisons cross-multiply
// in 128-bit so AF values never suffer rounding at a bound boundary.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den <= 0) throw Error("rational denominator must be positive");
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num) * b.den;
    const __int128 rhs = static_cast<__int128>(b.num) * a.den;
    return lhs <=> rhs;
  }
  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den == b.den) return {checked_add(a.num, b.num), a.den};
    return {checked_add(a.num * b.den, b.num * a.den), a.den * b.den};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(-b.num, b.den);
  }

  // a <= bound, with bound a real number; evaluated as num <= den * bound.
  bool at_most(long double bound) const {
    return static_cast<long double>(num) <= static_cast<long double>(den) * bound;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.num << '/' << r.den;
  }
};

}  // namespace wpart
