#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace clpart {

// Arbitrary-precision rational in lowest terms with positive denominator.
// mpq_class canonicalizes after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& x);

// Accepts "a/b" or an integer "a"; throws std::invalid_argument otherwise
// or when b == 0.
Rational parse_rational(std::string_view text);

Integer ipow(const Integer& base, unsigned long exponent);
Rational rpow(const Rational& base, unsigned long exponent);

// p^(-e) for an integer base p >= 2.
Rational inverse_power(long p, unsigned long exponent);

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// Nearest double; for display only.
inline double approx(const Rational& x) { return x.get_d(); }

// Exact acceptance test for a uniform 64-bit draw k read as k / 2^64:
// accepts(k) <=> k / 2^64 < x. `saturated` covers x * 2^64 >= 2^64.
struct UnitThreshold {
  std::uint64_t value = 0;
  bool saturated = false;

  bool accepts(std::uint64_t k) const { return saturated || k < value; }
};

UnitThreshold unit_threshold(const Rational& x);

}  // namespace clpart
