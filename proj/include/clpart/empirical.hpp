#pragma once

#include "clpart/bounded_real.hpp"
#include "clpart/measures.hpp"
#include "clpart/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <map>
#include <thread>
#include <vector>

namespace clpart {

/// Frequency counts over partitions.
struct EmpiricalTable {
  std::map<Partition, std::uint64_t, CanonicalOrder> counts;
  std::uint64_t total = 0;

  void add(const Partition& lambda, std::uint64_t count = 1);
  void merge(const EmpiricalTable& other);
  Rational frequency(const Partition& lambda) const;

  // Exact relative frequencies with an empty tail.
  ProbabilityTable to_table() const;

  friend bool operator==(const EmpiricalTable&, const EmpiricalTable&) = default;
};

enum class TailMode {
  // Tails are unresolved mass: (1/2)|t1 - t2| <= contribution <= (t1 + t2)/2.
  kUnresolved,
  // Each tail is one more bucket: contribution (1/2)|t1 - t2|.
  kBucket,
};

/// Total variation distance (1/2) sum |d1 - d2| over the union of supports,
/// as an enclosure covering entry radii and the tail treatment.
BoundedReal tv_distance(const ProbabilityTable& d1, const ProbabilityTable& d2,
                        TailMode mode = TailMode::kUnresolved);

/// Runs body(trial, acc) for trial in [first, first + trials) on up to
/// `threads` workers, each filling a private accumulator, then merges them
/// in worker order. Acc::merge must be associative and commutative, so the
/// result does not depend on the thread count.
template <class Acc, class Body>
Acc run_trials(std::uint64_t first, std::uint64_t trials, unsigned threads, Body body) {
  std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(trials, 1));
  std::vector<Acc> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::uint64_t worker) {
    try {
      std::uint64_t begin = first + trials * worker / workers;
      std::uint64_t end = first + trials * (worker + 1) / workers;
      for (std::uint64_t t = begin; t < end; ++t) body(t, partial[worker]);
    } catch (...) {
      errors[worker] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  Acc merged;
  for (const auto& acc : partial) merged.merge(acc);
  return merged;
}

}  // namespace clpart
