#pragma once

#include "clpart/empirical.hpp"
#include "clpart/measures.hpp"
#include "clpart/partition.hpp"
#include "clpart/rational.hpp"
#include "clpart/rng.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace clpart {

// Column-height transition probability
//   K(a, b) = (1/p)_a / (p^{binom(b+1,2)} (1/p)_b (1/p^2)_{floor((a-b)/2)})
// for 0 <= b <= a. Throws std::invalid_argument for b > a or b < 0.
Rational kernel(long a, long b, long p);

/// Row a of the transition kernel: masses[b] = K(a, b) for b = 0..a.
/// The constructor checks that the row sums to exactly 1.
struct KernelRow {
  long a = 0;
  std::vector<Rational> masses;

  KernelRow(long a, std::vector<Rational> masses);
};

KernelRow kernel_row(long a, long p);

// Process-wide cache of kernel rows keyed by (a, p). Safe for concurrent
// callers; references stay valid for the life of the process.
const KernelRow& cached_kernel_row(long a, long p);

struct SamplerConfig {
  long p = 2;
  std::uint64_t seed = 0;
  // Mass below which the first-column distribution is cut off.
  Rational initial_tail_cutoff{1, 1'000'000'000'000L};
};

/// P(lambda'_1 = a) for a = 0..B, with B the first height whose remaining
/// tail is provably below the cutoff.
struct InitialColumnDistribution {
  std::vector<MassValue> masses;  // index a, tagged C_p
  // sum_{a > B} P(a) <= tail_bound, from P(a+1)/P(a) = 1/(p^{a+1} - 1)
  // decreasing in a and C_p < 1.
  Rational tail_bound;
};

InitialColumnDistribution initial_column_distribution(long p, const Rational& cutoff);

/// Builds a partition column by column: lambda'_1 from the parts-count
/// distribution, then lambda'_{i+1} from K(lambda'_i, .) until a column of
/// height 0.
///
/// Each draw is one 64-bit word k read as the rational k / 2^64 and
/// compared exactly against cumulative rational weights. The first-column
/// distribution keeps heights 0..B with the residual mass folded into B,
/// so each sample is off by at most the truncation bias in total variation.
class ColumnSampler {
 public:
  static constexpr long kMaxColumns = 10'000;

  explicit ColumnSampler(const SamplerConfig& config);

  long p() const { return p_; }
  long max_initial_height() const { return static_cast<long>(initial_.size()) - 1; }
  const Rational& truncation_bias() const { return bias_; }

  // Cumulative acceptance thresholds: a draw k selects the first index
  // whose threshold accepts it.
  const std::vector<UnitThreshold>& initial_thresholds() const { return initial_; }
  const std::vector<UnitThreshold>& row_thresholds(long a) const { return rows_.at(static_cast<std::size_t>(a)); }

  // Sequence of column heights lambda'_1, lambda'_2, ... ending before the
  // first 0.
  template <BitSource G>
  std::vector<int> sample_columns(G& gen) const {
    std::vector<int> columns;
    auto height = static_cast<long>(pick(initial_, gen()));
    while (height > 0) {
      if (static_cast<long>(columns.size()) >= kMaxColumns) {
        throw std::runtime_error("column sampler exceeded the column cap");
      }
      columns.push_back(static_cast<int>(height));
      height = static_cast<long>(pick(row_thresholds(height), gen()));
    }
    return columns;
  }

  template <BitSource G>
  Partition sample(G& gen) const {
    auto columns = sample_columns(gen);
    return Partition::from_columns(columns);
  }

 private:
  static std::size_t pick(const std::vector<UnitThreshold>& cdf, std::uint64_t k);

  long p_;
  std::vector<UnitThreshold> initial_;
  std::vector<std::vector<UnitThreshold>> rows_;
  Rational bias_;
};

template <BitSource G>
Partition sample_partition(const SamplerConfig& config, G& gen) {
  return ColumnSampler(config).sample(gen);
}

// Frequencies over `trials` samples; trial t draws from
// trial_engine(config.seed, t).
EmpiricalTable empirical_distribution(const SamplerConfig& config, std::uint64_t trials, unsigned threads = 1);

}  // namespace clpart
