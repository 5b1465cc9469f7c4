#pragma once

#include "clpart/bounded_real.hpp"
#include "clpart/partition.hpp"
#include "clpart/rational.hpp"

namespace clpart {

// Upper limit on the number of factors any infinite product is expanded to
// before giving up on a requested tolerance.
inline constexpr long kMaxProductFactors = 100'000;

/// (x; q)_j = prod_{k=1}^{j} (1 - x q^{k-1}); the empty product is 1.
Rational finite_qpoch(const Rational& x, const Rational& q, long j);

/// (1/p; 1/p)_j = (1 - 1/p)(1 - 1/p^2)...(1 - 1/p^j).
Rational qpoch_p(long p, long j);

/// (1/p^2; 1/p^2)_j = (1 - 1/p^2)(1 - 1/p^4)...(1 - 1/p^{2j}).
Rational qpoch_p2(long p, long j);

/// Gaussian binomial [r choose s]_q as a ratio of q-Pochhammer products.
Rational gaussian_binomial(long r, long s, const Rational& q);

/// d_lambda(1/p) = prod_i prod_{j=1}^{floor(m_i/2)} (1 - p^{-2j}).
Rational d_lambda(const Partition& lambda, long p);

/// Enclosure of C_p = prod_{i odd} (1 - p^{-i}) with radius <= tolerance.
///
/// The partial product over odd i < M is an upper bound; the tail factor
/// prod_{i odd >= M} (1 - p^{-i}) lies in [1 - sum_{i odd >= M} p^{-i}, 1].
/// Throws std::invalid_argument for p < 2 or tolerance <= 0, and
/// std::runtime_error if kMaxProductFactors factors are not enough.
BoundedReal odd_constant(long p, const Rational& tolerance);

/// Enclosure of (1 - u/p) prod_{i >= 3 odd} (1 - u^2/p^i), the
/// normalizer of the u-deformed measure. Requires 0 < u < p.
BoundedReal deformed_constant(long p, const Rational& u, const Rational& tolerance);

/// Rigorous lower bound on (q; q)_infinity for 0 < q < 1.
Rational qpoch_infinite_lower_bound(const Rational& q);

struct EulerIdentityCheck {
  Rational lhs;               // 1 + sum_{m=1}^{N} s^m / (q;q)_m
  Rational truncation_bound;  // sum_{m > N} s^m / (q;q)_m <= this
  BoundedReal rhs;            // prod_{m >= 0} (1 - s q^m)^{-1}
  bool agree = false;
};

/// 1 + sum_{m>=1} s^m / ((1-q)...(1-q^m)) = prod_{m>=0} (1 - s q^m)^{-1}.
///
/// Agreement means [lhs, lhs + truncation_bound] meets the rhs enclosure.
/// The truncation bound is s^{N+1} / ((1 - s) L) with L a lower bound on
/// (q;q)_infinity. Requires s, q in (0, 1) and N >= 1.
EulerIdentityCheck verify_euler_identity(const Rational& s, const Rational& q, long terms);

struct QBinomialCheck {
  Rational lhs;  // sum_{s=0}^{r} [r choose s]_q q^{s(s+1)/2} x^s
  Rational rhs;  // (1 + xq)(1 + xq^2)...(1 + xq^r)
  bool agree = false;
};

QBinomialCheck verify_qbinomial(long r, const Rational& q, const Rational& x);

}  // namespace clpart
