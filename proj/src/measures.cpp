#include "clpart/measures.hpp"

#include "clpart/qseries.hpp"

#include <stdexcept>

namespace clpart {

namespace {

void require_base(long p) {
  if (p < 2) throw std::invalid_argument("p must be >= 2, got " + std::to_string(p));
}

void require_u(long p, const Rational& u) {
  if (u <= 0 || u >= p) throw std::invalid_argument("u must satisfy 0 < u < p");
}

unsigned long triangular(long a) { return static_cast<unsigned long>(a * (a + 1) / 2); }

// 1 / (p^{n(lambda)+|lambda|} d_lambda)
Rational hall_weight(const Partition& lambda, long p) {
  auto exponent = static_cast<unsigned long>(lambda.n_stat() + lambda.size());
  return inverse_power(p, exponent) / d_lambda(lambda, p);
}

}  // namespace

MassEvaluator::MassEvaluator(long p, Rational tolerance) : p_(p), tolerance_(std::move(tolerance)) {
  require_base(p);
}

BoundedReal MassEvaluator::constant(ConstantKind kind, const Rational& u) {
  switch (kind) {
    case ConstantKind::kNone:
      return BoundedReal(Rational(1));
    case ConstantKind::kOddConstant:
      if (odd_.empty()) odd_.push_back(odd_constant(p_, tolerance_));
      return odd_.front();
    case ConstantKind::kDeformed:
      for (const auto& [key, value] : deformed_) {
        if (key == u) return value;
      }
      deformed_.emplace_back(u, deformed_constant(p_, u, tolerance_));
      return deformed_.back().second;
  }
  throw std::logic_error("unknown constant kind");
}

BoundedReal MassEvaluator::operator()(const MassValue& mass) {
  return mass.rational_part * constant(mass.kind, mass.u);
}

MassValue pmf_wood_form1(const Partition& lambda, long p) {
  require_base(p);
  Partition mu = lambda.conjugate();
  unsigned long exponent = 0;
  for (int column : mu.parts()) exponent += triangular(column);
  Rational denominator(ipow(Integer(p), exponent));
  for (int i = 1; i <= lambda.largest(); ++i) {
    denominator *= qpoch_p2(p, (mu.part(i) - mu.part(i + 1)) / 2);
  }
  return {ConstantKind::kOddConstant, Rational(0), 1 / denominator};
}

MassValue pmf_wood_form2(const Partition& lambda, long p) {
  require_base(p);
  return {ConstantKind::kOddConstant, Rational(0), hall_weight(lambda, p)};
}

MassValue pmf_parts(long a, long p) {
  require_base(p);
  if (a < 0) throw std::invalid_argument("number of parts must be nonnegative");
  Rational denominator = Rational(ipow(Integer(p), triangular(a))) * qpoch_p(p, a);
  return {ConstantKind::kOddConstant, Rational(0), 1 / denominator};
}

MassValue pmf_size(long n, long p) {
  require_base(p);
  if (n < 0) throw std::invalid_argument("size must be nonnegative");
  Rational sum(0);
  for (long j = 0; j <= n; j += 2) {
    sum += inverse_power(p, static_cast<unsigned long>(j / 2)) / qpoch_p2(p, j / 2);
  }
  return {ConstantKind::kOddConstant, Rational(0), sum * inverse_power(p, static_cast<unsigned long>(n))};
}

MassValue pmf_deformed(const Partition& lambda, long p, const Rational& u) {
  require_base(p);
  require_u(p, u);
  Rational weight = rpow(u, static_cast<unsigned long>(lambda.size())) * hall_weight(lambda, p);
  return {ConstantKind::kDeformed, u, weight};
}

Rational truncated_normalizer(long p, long r) {
  require_base(p);
  Rational out(1);
  for (long i = 1; i <= r; ++i) out *= 1 + inverse_power(p, static_cast<unsigned long>(i));
  return out;
}

Rational pmf_truncated(const Partition& lambda, long p, long r) {
  require_base(p);
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  auto length = static_cast<long>(lambda.length());
  if (length > r) {
    throw std::invalid_argument("partition " + to_string(lambda) + " has more than r = " +
                                std::to_string(r) + " parts");
  }
  return hall_weight(lambda, p) * qpoch_p(p, r) / (qpoch_p(p, r - length) * truncated_normalizer(p, r));
}

std::vector<MassValue> PartsRecursion::masses() const {
  std::vector<MassValue> out;
  out.reserve(from_column_chain.size());
  for (const auto& value : from_column_chain) out.push_back({ConstantKind::kOddConstant, Rational(0), value});
  return out;
}

PartsRecursion solve_parts_recursion(long p, long a_max) {
  require_base(p);
  if (a_max < 0) throw std::invalid_argument("a_max must be nonnegative");
  PartsRecursion out;
  for (long a = 0; a <= a_max; ++a) out.closed_form.push_back(pmf_parts(a, p).rational_part);

  // Both recursions start from P(0) = C_p, i.e. rational part 1.
  auto& trunc = out.from_truncated_measure;
  trunc.emplace_back(1);
  for (long r = 1; r <= a_max; ++r) {
    // The s = r term has coefficient (1/p)_r / (1/p)_0, so
    // R(r) = prod(1 + p^{-i}) / (1/p)_r - sum_{s<r} R(s) / (1/p)_{r-s}.
    Rational value = truncated_normalizer(p, r) / qpoch_p(p, r);
    for (long s = 0; s < r; ++s) value -= trunc[static_cast<std::size_t>(s)] / qpoch_p(p, r - s);
    trunc.push_back(value);
  }

  auto& chain = out.from_column_chain;
  chain.emplace_back(1);
  for (long a = 1; a <= a_max; ++a) {
    // P(a) (p^{binom(a+1,2)} - 1) = sum_{b<a} P(b) / (1/p^2)_{floor((a-b)/2)}
    Rational sum(0);
    for (long b = 0; b < a; ++b) sum += chain[static_cast<std::size_t>(b)] / qpoch_p2(p, (a - b) / 2);
    chain.push_back(sum / Rational(ipow(Integer(p), triangular(a)) - 1));
  }
  return out;
}

Rational size_series_bound(long p) {
  require_base(p);
  constexpr long kTerms = 60;
  Rational sum(0);
  for (long m = 0; m <= kTerms; ++m) {
    sum += inverse_power(p, static_cast<unsigned long>(m)) / qpoch_p2(p, m);
  }
  // Terms m > 60 are each <= p^{-m} / (1/p^2; 1/p^2)_infinity.
  Rational tail = inverse_power(p, kTerms) / (Rational(p - 1) * qpoch_infinite_lower_bound(Rational(1, p * p)));
  return sum + tail;
}

std::string MeasureSpec::name() const {
  switch (kind) {
    case Kind::kWood: return "wood";
    case Kind::kDeformed: return "deformed";
    case Kind::kTruncated: return "truncated";
  }
  return "unknown";
}

std::vector<std::pair<std::string, std::string>> MeasureSpec::params() const {
  switch (kind) {
    case Kind::kWood: return {};
    case Kind::kDeformed: return {{"u", to_string(u)}};
    case Kind::kTruncated: return {{"r", std::to_string(r)}};
  }
  return {};
}

MassValue pmf(const MeasureSpec& measure, const Partition& lambda, long p) {
  switch (measure.kind) {
    case MeasureSpec::Kind::kWood: return pmf_wood_form2(lambda, p);
    case MeasureSpec::Kind::kDeformed: return pmf_deformed(lambda, p, measure.u);
    case MeasureSpec::Kind::kTruncated:
      return {ConstantKind::kNone, Rational(0), pmf_truncated(lambda, p, measure.r)};
  }
  throw std::logic_error("unknown measure");
}

PartitionDistribution tabulate(long p, int max_size, const MeasureSpec& measure) {
  require_base(p);
  if (max_size < 0) throw std::invalid_argument("max_size must be nonnegative");
  if (max_size > kEnumerationCap) {
    throw std::invalid_argument("max_size is capped at " + std::to_string(kEnumerationCap));
  }
  if (measure.kind == MeasureSpec::Kind::kDeformed) require_u(p, measure.u);
  if (measure.kind == MeasureSpec::Kind::kTruncated && measure.r < 1) {
    throw std::invalid_argument("r must be >= 1");
  }

  PartitionDistribution dist;
  dist.p = p;
  dist.measure = measure;
  dist.max_size = max_size;
  for (int n = 0; n <= max_size; ++n) {
    for (auto& lambda : enumerate_partitions(n)) {
      if (measure.kind == MeasureSpec::Kind::kTruncated && static_cast<long>(lambda.length()) > measure.r) {
        continue;
      }
      MassValue mass = pmf(measure, lambda, p);
      dist.entries.emplace_hint(dist.entries.end(), std::move(lambda), std::move(mass));
    }
  }

  // Size-class mass at n: rational part <= K_p p^{-n} (times u^n for the
  // deformed measure; the truncated measure's extra factors are <= 1).
  const Rational kp = size_series_bound(p);
  const Rational loose(1, 1'000'000'000'000L);
  Rational bound;
  switch (measure.kind) {
    case MeasureSpec::Kind::kWood:
      bound = odd_constant(p, loose).upper() * kp * inverse_power(p, static_cast<unsigned long>(max_size)) /
              (p - 1);
      break;
    case MeasureSpec::Kind::kDeformed: {
      Rational ratio = measure.u / p;
      bound = deformed_constant(p, measure.u, loose).upper() * kp *
              rpow(ratio, static_cast<unsigned long>(max_size + 1)) / (1 - ratio);
      break;
    }
    case MeasureSpec::Kind::kTruncated:
      bound = kp * inverse_power(p, static_cast<unsigned long>(max_size)) /
              (Rational(p - 1) * truncated_normalizer(p, measure.r));
      break;
  }
  dist.tail = BoundedReal::from_bounds(0, bound);
  return dist;
}

BoundedReal ProbabilityTable::entry_total() const {
  BoundedReal total;
  for (const auto& [lambda, mass] : entries) total += mass;
  return total;
}

ProbabilityTable ProbabilityTable::restricted(int max_size) const {
  ProbabilityTable out;
  out.tail = tail;
  for (const auto& [lambda, mass] : entries) {
    if (lambda.size() <= max_size) {
      out.entries.emplace_hint(out.entries.end(), lambda, mass);
    } else {
      out.tail += mass;
    }
  }
  return out;
}

ProbabilityTable evaluate(const PartitionDistribution& dist, const Rational& tolerance) {
  MassEvaluator eval(dist.p, tolerance);
  ProbabilityTable out;
  out.tail = dist.tail;
  for (const auto& [lambda, mass] : dist.entries) {
    out.entries.emplace_hint(out.entries.end(), lambda, eval(mass));
  }
  return out;
}

}  // namespace clpart
