#include "clpart/empirical.hpp"

namespace clpart {

void EmpiricalTable::add(const Partition& lambda, std::uint64_t count) {
  counts[lambda] += count;
  total += count;
}

void EmpiricalTable::merge(const EmpiricalTable& other) {
  for (const auto& [lambda, count] : other.counts) counts[lambda] += count;
  total += other.total;
}

Rational EmpiricalTable::frequency(const Partition& lambda) const {
  if (total == 0) return Rational(0);
  auto it = counts.find(lambda);
  if (it == counts.end()) return Rational(0);
  Rational freq(Integer(std::to_string(it->second)), Integer(std::to_string(total)));
  freq.canonicalize();
  return freq;
}

ProbabilityTable EmpiricalTable::to_table() const {
  ProbabilityTable out;
  for (const auto& [lambda, count] : counts) {
    out.entries.emplace_hint(out.entries.end(), lambda, BoundedReal(frequency(lambda)));
  }
  return out;
}

BoundedReal tv_distance(const ProbabilityTable& d1, const ProbabilityTable& d2, TailMode mode) {
  BoundedReal sum;
  auto it1 = d1.entries.begin();
  auto it2 = d2.entries.begin();
  CanonicalOrder less;
  const BoundedReal zero;
  while (it1 != d1.entries.end() || it2 != d2.entries.end()) {
    if (it2 == d2.entries.end() || (it1 != d1.entries.end() && less(it1->first, it2->first))) {
      sum += (it1->second - zero).magnitude();
      ++it1;
    } else if (it1 == d1.entries.end() || less(it2->first, it1->first)) {
      sum += (zero - it2->second).magnitude();
      ++it2;
    } else {
      sum += (it1->second - it2->second).magnitude();
      ++it1;
      ++it2;
    }
  }
  const Rational half(1, 2);
  BoundedReal tail_gap = half * (d1.tail - d2.tail).magnitude();
  BoundedReal tails = tail_gap;
  if (mode == TailMode::kUnresolved) {
    BoundedReal tail_sum = half * (d1.tail + d2.tail);
    tails = BoundedReal::from_bounds(tail_gap.lower(), tail_sum.upper());
  }
  return half * sum + tails;
}

}  // namespace clpart
