#include "clpart/sampler.hpp"

#include "clpart/qseries.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace clpart {

Rational kernel(long a, long b, long p) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  if (b < 0 || b > a) {
    throw std::invalid_argument("kernel K(a, b) requires 0 <= b <= a, got a = " + std::to_string(a) +
                                ", b = " + std::to_string(b));
  }
  auto binom = static_cast<unsigned long>(b * (b + 1) / 2);
  Rational denominator = Rational(ipow(Integer(p), binom)) * qpoch_p(p, b) * qpoch_p2(p, (a - b) / 2);
  return qpoch_p(p, a) / denominator;
}

KernelRow::KernelRow(long a_in, std::vector<Rational> masses_in) : a(a_in), masses(std::move(masses_in)) {
  if (static_cast<long>(masses.size()) != a + 1) throw std::logic_error("kernel row has wrong length");
  Rational sum(0);
  for (const auto& m : masses) {
    if (m <= 0) throw std::logic_error("kernel row has a nonpositive mass");
    sum += m;
  }
  if (sum != 1) throw std::logic_error("kernel row " + std::to_string(a) + " sums to " + to_string(sum));
}

KernelRow kernel_row(long a, long p) {
  if (a < 0) throw std::invalid_argument("kernel row index must be nonnegative");
  std::vector<Rational> masses;
  masses.reserve(static_cast<std::size_t>(a + 1));
  for (long b = 0; b <= a; ++b) masses.push_back(kernel(a, b, p));
  return KernelRow(a, std::move(masses));
}

const KernelRow& cached_kernel_row(long a, long p) {
  static std::shared_mutex mutex;
  static std::map<std::pair<long, long>, std::unique_ptr<KernelRow>> cache;
  const std::pair key{a, p};
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto row = std::make_unique<KernelRow>(kernel_row(a, p));
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.try_emplace(key, std::move(row));
  return *it->second;
}

InitialColumnDistribution initial_column_distribution(long p, const Rational& cutoff) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  if (cutoff <= 0 || cutoff >= 1) throw std::invalid_argument("cutoff must lie in (0, 1)");
  InitialColumnDistribution out;
  for (long a = 0;; ++a) {
    MassValue mass = pmf_parts(a, p);
    // P(a + k) <= P(a) rho^k with rho = 1/(p^{a+1} - 1), and C_p <= 1.
    Rational rho(Integer(1), ipow(Integer(p), static_cast<unsigned long>(a + 1)) - 1);
    Rational bound = rho < 1 ? Rational(mass.rational_part * rho / (1 - rho)) : Rational(1);
    out.masses.push_back(std::move(mass));
    if (bound < cutoff) {
      out.tail_bound = bound;
      return out;
    }
  }
}

ColumnSampler::ColumnSampler(const SamplerConfig& config) : p_(config.p) {
  if (config.p < 2) throw std::invalid_argument("p must be >= 2");
  auto initial = initial_column_distribution(config.p, config.initial_tail_cutoff);
  const BoundedReal c = odd_constant(config.p, Rational(1, ipow(Integer(10), 40)));
  const std::size_t top = initial.masses.size() - 1;

  Rational cumulative(0);
  Rational kept_rational(0);
  for (std::size_t a = 0; a < top; ++a) {
    cumulative += c.mid() * initial.masses[a].rational_part;
    kept_rational += initial.masses[a].rational_part;
    initial_.push_back(unit_threshold(cumulative));
  }
  // Everything not assigned below the top height lands on it.
  initial_.push_back(unit_threshold(Rational(1)));
  bias_ = initial.tail_bound + c.rad() * kept_rational;

  rows_.reserve(top + 1);
  for (std::size_t a = 0; a <= top; ++a) {
    const KernelRow& row = cached_kernel_row(static_cast<long>(a), p_);
    std::vector<UnitThreshold> cdf;
    Rational running(0);
    for (std::size_t b = 0; b < row.masses.size(); ++b) {
      running += row.masses[b];
      cdf.push_back(b + 1 == row.masses.size() ? unit_threshold(Rational(1)) : unit_threshold(running));
    }
    rows_.push_back(std::move(cdf));
  }
}

std::size_t ColumnSampler::pick(const std::vector<UnitThreshold>& cdf, std::uint64_t k) {
  for (std::size_t i = 0; i < cdf.size(); ++i) {
    if (cdf[i].accepts(k)) return i;
  }
  throw std::logic_error("cumulative thresholds do not cover the unit interval");
}

EmpiricalTable empirical_distribution(const SamplerConfig& config, std::uint64_t trials, unsigned threads) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const ColumnSampler sampler(config);
  return run_trials<EmpiricalTable>(0, trials, threads, [&](std::uint64_t t, EmpiricalTable& table) {
    auto engine = trial_engine(config.seed, t);
    table.add(sampler.sample(engine));
  });
}

}  // namespace clpart
