#pragma once

#include "clpart/partition.hpp"
#include "clpart/rational.hpp"

#include <string>
#include <vector>

namespace clpart {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::vector<long> primes{2, 3};
  // Enumeration depth for the truncated sums (all partitions of size <= depth).
  int depth = 40;
  long a_max = 30;
  long r_max = 5;
};

/// Hall weights 1 / (p^{n(lambda)+|lambda|} d_lambda) for every partition of
/// size <= depth, computed by enumeration.
class HallWeightTable {
 public:
  HallWeightTable(long p, int depth);

  struct Row {
    Partition lambda;
    Rational weight;
  };

  long p() const { return p_; }
  int depth() const { return depth_; }
  const std::vector<Row>& rows() const { return rows_; }

  // sum over |lambda| = n of the weights.
  const Rational& size_sum(int n) const { return size_sums_.at(static_cast<std::size_t>(n)); }

  // Bound on the weight carried by all partitions of size > depth.
  const Rational& tail_bound() const { return tail_bound_; }

 private:
  long p_;
  int depth_;
  std::vector<Row> rows_;
  std::vector<Rational> size_sums_;
  Rational tail_bound_;
};

// Euler and q-binomial identities, the u-deformed sum, the sum over
// partitions with at most r parts, the parts formula as an infinite
// product, and normalization of the tabulated measure.
std::vector<CheckResult> verify_identities(const VerifyOptions& options);

// Parts recursions, form equivalence, size marginals, parts marginals, and
// the u = 1 specialization.
std::vector<CheckResult> verify_recursions(const VerifyOptions& options);

// Kernel row sums, the kernel ratio identity, two-step column marginals, and
// normalization of the first-column distribution.
std::vector<CheckResult> verify_chain(const VerifyOptions& options);

}  // namespace clpart
