#pragma once

#include "clpart/bounded_real.hpp"
#include "clpart/partition.hpp"
#include "clpart/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace clpart {

/// Which infinite-product constant multiplies a mass.
enum class ConstantKind {
  kNone,         // fully exact
  kOddConstant,  // C_p = prod_{i odd} (1 - p^{-i})
  kDeformed,     // (1 - u/p) prod_{i >= 3 odd} (1 - u^2/p^i)
};

/// mass = constant(kind, u) * rational_part.
///
/// Formulas are compared through rational_part alone, so equalities between
/// different routes are exact. The constant enters only through evaluate().
struct MassValue {
  ConstantKind kind = ConstantKind::kNone;
  Rational u{0};  // meaningful for kDeformed only
  Rational rational_part{0};

  friend bool operator==(const MassValue&, const MassValue&) = default;
};

/// Evaluates MassValues to enclosures, caching the constants it needs.
class MassEvaluator {
 public:
  MassEvaluator(long p, Rational tolerance);

  long p() const { return p_; }
  BoundedReal constant(ConstantKind kind, const Rational& u = Rational(0));
  BoundedReal operator()(const MassValue& mass);

 private:
  long p_;
  Rational tolerance_;
  std::vector<std::pair<Rational, BoundedReal>> deformed_;
  std::vector<BoundedReal> odd_;
};

// Probability that the p-part of the Jacobian has type lambda, read off
// through the conjugate mu:
//   C_p / (p^{sum mu_i(mu_i+1)/2} prod_{i=1}^{lambda_1} (1/p^2)_{floor((mu_i - mu_{i+1})/2)})
// with mu_{lambda_1 + 1} = 0.
MassValue pmf_wood_form1(const Partition& lambda, long p);

// The same mass as C_p / (p^{n(lambda) + |lambda|} d_lambda(1/p)).
MassValue pmf_wood_form2(const Partition& lambda, long p);

// P(a parts) = C_p / (p^{a(a+1)/2} (1/p)_a).
MassValue pmf_parts(long a, long p);

// P(|lambda| = n) = C_p p^{-n} sum_{j even <= n} p^{-j/2} / (1/p^2)_{j/2}.
MassValue pmf_size(long n, long p);

// The u-deformed measure, 0 < u < p:
//   deformed_constant(u) u^{|lambda|} / (p^{n(lambda)+|lambda|} d_lambda).
MassValue pmf_deformed(const Partition& lambda, long p, const Rational& u);

// The measure on partitions with at most r parts:
//   [prod_{i<=r} (1 + p^{-i})]^{-1} (1/p)_r / (1/p)_{r-l}
//     / (p^{n(lambda)+|lambda|} d_lambda).
// Exact. Throws std::invalid_argument when l(lambda) > r.
Rational pmf_truncated(const Partition& lambda, long p, long r);

// prod_{i=1}^{r} (1 + p^{-i}).
Rational truncated_normalizer(long p, long r);

/// Rational parts of P(0..a_max) from the closed form and from the two
/// recursions that determine them.
struct PartsRecursion {
  std::vector<Rational> closed_form;
  // From (1/p)_r sum_{s<=r} P(s) / (C_p (1/p)_{r-s}) = prod_{i<=r} (1 + p^{-i}).
  std::vector<Rational> from_truncated_measure;
  // From sum_{b<=a} P(b) / (p^{binom(a+1,2)} P(a) (1/p^2)_{floor((a-b)/2)}) = 1.
  std::vector<Rational> from_column_chain;

  bool agree() const {
    return closed_form == from_truncated_measure && closed_form == from_column_chain;
  }
  // C_p-tagged masses from the chain recursion.
  std::vector<MassValue> masses() const;
};

PartsRecursion solve_parts_recursion(long p, long a_max);

/// Upper bound on K_p = sum_{m >= 0} p^{-m} / (1/p^2)_m.
///
/// The rational part of P(|lambda| = n) is at most p^{-n} K_p, which drives
/// every size-tail bound. Computed as a partial sum to m = 60 plus
/// p^{-60} / ((p - 1) L), with L a lower bound on (1/p^2; 1/p^2)_infinity.
Rational size_series_bound(long p);

struct MeasureSpec {
  enum class Kind { kWood, kDeformed, kTruncated };
  Kind kind = Kind::kWood;
  Rational u{1};
  long r = 1;

  static MeasureSpec wood() { return {}; }
  static MeasureSpec deformed(Rational u) { return {Kind::kDeformed, std::move(u), 1}; }
  static MeasureSpec truncated(long r) { return {Kind::kTruncated, Rational(1), r}; }

  std::string name() const;
  std::vector<std::pair<std::string, std::string>> params() const;
};

MassValue pmf(const MeasureSpec& measure, const Partition& lambda, long p);

using PartitionMap = std::map<Partition, MassValue, CanonicalOrder>;

/// All masses for partitions with |lambda| <= max_size, plus an a priori
/// enclosure [0, bound] of the mass outside that support. The tail bound
/// does not assume the measure is normalized.
struct PartitionDistribution {
  long p = 2;
  MeasureSpec measure;
  int max_size = 0;
  PartitionMap entries;
  BoundedReal tail;
};

PartitionDistribution tabulate(long p, int max_size, const MeasureSpec& measure);

/// Evaluated table: partition -> enclosure, plus the tail enclosure.
struct ProbabilityTable {
  std::map<Partition, BoundedReal, CanonicalOrder> entries;
  BoundedReal tail;

  BoundedReal entry_total() const;
  BoundedReal total() const { return entry_total() + tail; }

  // Moves every entry with |lambda| > max_size into the tail.
  ProbabilityTable restricted(int max_size) const;
};

ProbabilityTable evaluate(const PartitionDistribution& dist, const Rational& tolerance);

}  // namespace clpart
