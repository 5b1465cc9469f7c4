#include "clpart/bounded_real.hpp"

#include <stdexcept>
#include <utility>

namespace clpart {

BoundedReal::BoundedReal(Rational mid, Rational rad) : mid_(std::move(mid)), rad_(std::move(rad)) {
  if (rad_ < 0) throw std::invalid_argument("BoundedReal radius must be nonnegative");
}

BoundedReal BoundedReal::from_bounds(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw std::invalid_argument("BoundedReal bounds out of order");
  return {(lo + hi) / 2, (hi - lo) / 2};
}

BoundedReal BoundedReal::snapped(const Rational& grid) const {
  if (grid <= 0) throw std::invalid_argument("snap grid must be positive");
  Rational scaled = mid_ / grid + Rational(1, 2);
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational moved = Rational(k) * grid;
  Rational widened = (rad_ + abs(Rational(moved - mid_))) / grid;
  Integer steps;
  mpz_cdiv_q(steps.get_mpz_t(), widened.get_num_mpz_t(), widened.get_den_mpz_t());
  return {moved, Rational(steps) * grid};
}

BoundedReal& BoundedReal::operator+=(const BoundedReal& rhs) {
  mid_ += rhs.mid_;
  rad_ += rhs.rad_;
  return *this;
}

BoundedReal& BoundedReal::operator-=(const BoundedReal& rhs) {
  mid_ -= rhs.mid_;
  rad_ += rhs.rad_;
  return *this;
}

BoundedReal& BoundedReal::operator*=(const BoundedReal& rhs) {
  // |xy - ab| <= |a| s + |b| r + r s for |x - a| <= r, |y - b| <= s.
  Rational rad = abs(mid_) * rhs.rad_ + abs(rhs.mid_) * rad_ + rad_ * rhs.rad_;
  mid_ *= rhs.mid_;
  rad_ = std::move(rad);
  return *this;
}

BoundedReal operator*(const Rational& a, const BoundedReal& b) {
  return {a * b.mid(), abs(a) * b.rad()};
}

BoundedReal BoundedReal::reciprocal() const {
  Rational lo = lower();
  Rational hi = upper();
  if (lo <= 0 && hi >= 0) throw std::domain_error("reciprocal of an enclosure containing zero");
  Rational a = 1 / hi;
  Rational b = 1 / lo;
  return a < b ? from_bounds(a, b) : from_bounds(b, a);
}

BoundedReal BoundedReal::magnitude() const {
  Rational lo = lower();
  Rational hi = upper();
  if (lo >= 0) return *this;
  if (hi <= 0) return -*this;
  Rational top = -lo > hi ? Rational(-lo) : hi;
  return from_bounds(0, top);
}

std::string to_string(const BoundedReal& x) {
  return to_string(x.mid()) + " +/- " + to_string(x.rad());
}

}  // namespace clpart
