#pragma once

#include "clpart/rational.hpp"

#include <string>

namespace clpart {

/// A real number known only to lie in [mid - rad, mid + rad].
///
/// Every arithmetic operation returns an enclosure of the exact result for
/// all values inside the operand enclosures. Midpoint and radius are exact
/// rationals, so no rounding mode is involved.
class BoundedReal {
 public:
  BoundedReal() = default;
  BoundedReal(Rational mid, Rational rad);
  explicit BoundedReal(const Rational& exact) : mid_(exact), rad_(0) {}

  // Enclosure of the closed interval [lo, hi].
  static BoundedReal from_bounds(const Rational& lo, const Rational& hi);

  const Rational& mid() const { return mid_; }
  const Rational& rad() const { return rad_; }
  Rational lower() const { return mid_ - rad_; }
  Rational upper() const { return mid_ + rad_; }

  bool contains(const Rational& x) const { return lower() <= x && x <= upper(); }
  bool overlaps(const BoundedReal& other) const {
    return lower() <= other.upper() && other.lower() <= upper();
  }
  bool is_exact() const { return rad_ == 0; }

  // Moves the midpoint onto the grid {k * grid} and widens the radius by
  // the displacement, rounded up to a grid multiple. Keeps denominators
  // bounded in long products.
  BoundedReal snapped(const Rational& grid) const;

  BoundedReal& operator+=(const BoundedReal& rhs);
  BoundedReal& operator-=(const BoundedReal& rhs);
  BoundedReal& operator*=(const BoundedReal& rhs);

  friend BoundedReal operator+(BoundedReal a, const BoundedReal& b) { return a += b; }
  friend BoundedReal operator-(BoundedReal a, const BoundedReal& b) { return a -= b; }
  friend BoundedReal operator*(BoundedReal a, const BoundedReal& b) { return a *= b; }
  friend BoundedReal operator-(const BoundedReal& a) { return {-a.mid_, a.rad_}; }

  // Requires the enclosure to exclude zero; throws std::domain_error
  // otherwise.
  BoundedReal reciprocal() const;

  // Enclosure of |x| over the interval.
  BoundedReal magnitude() const;

 private:
  Rational mid_{0};
  Rational rad_{0};
};

BoundedReal operator*(const Rational& a, const BoundedReal& b);
inline BoundedReal operator*(const BoundedReal& b, const Rational& a) { return a * b; }

std::string to_string(const BoundedReal& x);

}  // namespace clpart
