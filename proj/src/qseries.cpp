#include "clpart/qseries.hpp"

#include <stdexcept>
#include <string>

namespace clpart {

namespace {

void require_base(long p) {
  if (p < 2) throw std::invalid_argument("p must be >= 2, got " + std::to_string(p));
}

void require_positive(const Rational& tolerance) {
  if (tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
}

// Largest power-of-ten grid 10^-k with 10^-k <= bound.
Rational decimal_grid(const Rational& bound) {
  Rational grid(1);
  while (grid > bound) grid /= 10;
  return grid;
}

// Floors x onto the grid; the result is <= x.
Rational floor_to_grid(const Rational& x, const Rational& grid) {
  Rational scaled = x / grid;
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return Rational(k) * grid;
}

// Given an exact partial product `partial` > 0 and a bound `tail_sum` on
// sum a_i over the omitted factors (1 - a_i), encloses the infinite product
// in [partial (1 - tail_sum), partial] and snaps the midpoint so that the
// final radius stays <= tolerance.
BoundedReal enclose_product(const Rational& partial, const Rational& tail_sum,
                            const Rational& tolerance) {
  BoundedReal exact = BoundedReal::from_bounds(partial * (1 - tail_sum), partial);
  return exact.snapped(decimal_grid(tolerance / 4));
}

}  // namespace

Rational finite_qpoch(const Rational& x, const Rational& q, long j) {
  if (j < 0) throw std::invalid_argument("q-Pochhammer length must be nonnegative");
  Rational out(1);
  Rational term = x;
  for (long k = 1; k <= j; ++k) {
    out *= 1 - term;
    term *= q;
  }
  return out;
}

Rational qpoch_p(long p, long j) {
  require_base(p);
  Rational x(1, p);
  return finite_qpoch(x, x, j);
}

Rational qpoch_p2(long p, long j) {
  require_base(p);
  Rational x(1, p * p);
  return finite_qpoch(x, x, j);
}

Rational gaussian_binomial(long r, long s, const Rational& q) {
  if (s < 0 || s > r) return Rational(0);
  return finite_qpoch(q, q, r) / (finite_qpoch(q, q, s) * finite_qpoch(q, q, r - s));
}

Rational d_lambda(const Partition& lambda, long p) {
  require_base(p);
  Rational out(1);
  for (int m : lambda.multiplicities()) out *= qpoch_p2(p, m / 2);
  return out;
}

BoundedReal odd_constant(long p, const Rational& tolerance) {
  require_base(p);
  require_positive(tolerance);
  const Rational inv_p2(1, p * p);
  Rational partial(1);
  Rational term(1, p);  // p^{-i} for the next odd i
  for (long factors = 0; factors < kMaxProductFactors; ++factors) {
    partial *= 1 - term;
    term *= inv_p2;
    // sum_{i odd >= M} p^{-i} = p^{-M} / (1 - p^{-2})
    Rational tail = term / (1 - inv_p2);
    if (partial * tail <= tolerance) return enclose_product(partial, tail, tolerance);
  }
  throw std::runtime_error("odd_constant: tolerance not reached within factor cap");
}

BoundedReal deformed_constant(long p, const Rational& u, const Rational& tolerance) {
  require_base(p);
  require_positive(tolerance);
  if (u <= 0 || u >= p) throw std::invalid_argument("u must satisfy 0 < u < p");
  const Rational inv_p2(1, p * p);
  const Rational u2 = u * u;
  Rational partial = 1 - u / p;
  Rational term = u2 / (p * p * p);  // u^2 p^{-i}, i = 3, 5, ...
  for (long factors = 0; factors < kMaxProductFactors; ++factors) {
    partial *= 1 - term;
    term *= inv_p2;
    Rational tail = term / (1 - inv_p2);
    if (partial * tail <= tolerance) return enclose_product(partial, tail, tolerance);
  }
  throw std::runtime_error("deformed_constant: tolerance not reached within factor cap");
}

Rational qpoch_infinite_lower_bound(const Rational& q) {
  if (q <= 0 || q >= 1) throw std::invalid_argument("q must lie in (0, 1)");
  Rational partial(1);
  Rational power = q;
  const Rational target(1, 1'000'000'000'000L);
  const Rational grid(1, 1'000'000'000'000'000L);
  for (long k = 1; k <= kMaxProductFactors; ++k) {
    partial *= 1 - power;
    power *= q;
    // prod_{k' > k} (1 - q^k') >= 1 - q^{k+1} / (1 - q)
    Rational tail = power / (1 - q);
    if (tail <= target) return floor_to_grid(partial * (1 - tail), grid);
    // Keep denominators small; flooring keeps the bound valid.
    if (k % 16 == 0) partial = floor_to_grid(partial, grid * grid);
  }
  throw std::runtime_error("qpoch_infinite_lower_bound: factor cap reached");
}

EulerIdentityCheck verify_euler_identity(const Rational& s, const Rational& q, long terms) {
  if (s <= 0 || s >= 1 || q <= 0 || q >= 1) {
    throw std::invalid_argument("Euler identity requires s and q in (0, 1)");
  }
  if (terms < 1) throw std::invalid_argument("Euler identity requires N >= 1");

  EulerIdentityCheck out;
  out.lhs = 1;
  Rational power(1);
  Rational poch(1);
  for (long m = 1; m <= terms; ++m) {
    power *= s;
    poch *= 1 - rpow(q, static_cast<unsigned long>(m));
    out.lhs += power / poch;
  }
  out.truncation_bound = power * s / ((1 - s) * qpoch_infinite_lower_bound(q));

  // prod_{m < M} (1 - s q^m), omitted tail sum_{m >= M} s q^m = s q^M / (1 - q).
  const Rational tolerance(1, Integer(10) * ipow(Integer(10), 40));
  Rational partial(1);
  Rational term = s;
  for (long m = 0; m < kMaxProductFactors; ++m) {
    partial *= 1 - term;
    term *= q;
    Rational tail = term / (1 - q);
    if (tail <= tolerance) {
      BoundedReal product = BoundedReal::from_bounds(partial * (1 - tail), partial);
      out.rhs = product.reciprocal().snapped(tolerance);
      break;
    }
  }
  if (out.rhs.mid() == 0) throw std::runtime_error("verify_euler_identity: factor cap reached");

  out.agree = out.lhs <= out.rhs.upper() && out.rhs.lower() <= out.lhs + out.truncation_bound;
  return out;
}

QBinomialCheck verify_qbinomial(long r, const Rational& q, const Rational& x) {
  if (r < 1) throw std::invalid_argument("q-binomial check requires r >= 1");
  QBinomialCheck out;
  out.lhs = 0;
  for (long s = 0; s <= r; ++s) {
    out.lhs += gaussian_binomial(r, s, q) * rpow(q, static_cast<unsigned long>(s * (s + 1) / 2)) *
               rpow(x, static_cast<unsigned long>(s));
  }
  out.rhs = 1;
  Rational qk(1);
  for (long k = 1; k <= r; ++k) {
    qk *= q;
    out.rhs *= 1 + x * qk;
  }
  out.agree = out.lhs == out.rhs;
  return out;
}

}  // namespace clpart
