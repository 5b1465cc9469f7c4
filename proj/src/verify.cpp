#include "clpart/verify.hpp"

#include "clpart/measures.hpp"
#include "clpart/qseries.hpp"
#include "clpart/sampler.hpp"

#include <iomanip>
#include <map>
#include <sstream>

namespace clpart {

namespace {

std::string num(const Rational& x) {
  std::ostringstream out;
  out << std::setprecision(12) << approx(x);
  return out.str();
}

std::string interval(const BoundedReal& x) { return "[" + num(x.lower()) + ", " + num(x.upper()) + "]"; }

std::string tag(long p) { return " (p=" + std::to_string(p) + ")"; }

void require_options(const VerifyOptions& options) {
  if (options.primes.empty()) throw std::invalid_argument("at least one p is required");
  for (long p : options.primes) {
    if (p < 2) throw std::invalid_argument("p must be >= 2");
  }
  if (options.depth < 1) throw std::invalid_argument("depth must be >= 1");
  if (options.depth > kEnumerationCap) {
    throw std::invalid_argument("depth is capped at " + std::to_string(kEnumerationCap));
  }
  if (options.a_max < 0) throw std::invalid_argument("a-max must be nonnegative");
  if (options.r_max < 1) throw std::invalid_argument("r-max must be >= 1");
}

// Truncated sum S with S <= true value <= S + bound, against an enclosure.
CheckResult truncated_against(std::string name, const Rational& partial, const Rational& bound,
                              const BoundedReal& target) {
  bool ok = partial <= target.upper() && target.lower() <= partial + bound;
  return {std::move(name), ok,
          "partial=" + num(partial) + " truncation<=" + num(bound) + " target=" + interval(target)};
}

}  // namespace

HallWeightTable::HallWeightTable(long p, int depth) : p_(p), depth_(depth) {
  if (depth < 0 || depth > kEnumerationCap) throw std::invalid_argument("depth out of range");
  size_sums_.assign(static_cast<std::size_t>(depth + 1), Rational(0));
  for (int n = 0; n <= depth; ++n) {
    for (auto& lambda : enumerate_partitions(n)) {
      Rational w = pmf_wood_form2(lambda, p).rational_part;
      size_sums_[static_cast<std::size_t>(n)] += w;
      rows_.push_back({std::move(lambda), std::move(w)});
    }
  }
  tail_bound_ = size_series_bound(p) * inverse_power(p, static_cast<unsigned long>(depth)) / (p - 1);
}

std::vector<CheckResult> verify_identities(const VerifyOptions& options) {
  require_options(options);
  std::vector<CheckResult> out;
  const Rational tol(1, ipow(Integer(10), 30));

  for (long p : options.primes) {
    const HallWeightTable hall(p, options.depth);

    // Euler's identity at the specializations the size formula relies on,
    // plus two generic points.
    struct EulerCase {
      Rational s, q;
      long terms;
    };
    std::vector<EulerCase> euler{{Rational(1, p), Rational(1, p * p), options.depth},
                                 {Rational(1, p * p * p), Rational(1, p * p), options.depth}};
    if (p == options.primes.front()) {
      euler.push_back({Rational(1, 8), Rational(1, 4), 30});
      euler.push_back({Rational(1, 2), Rational(1, 2), 40});
    }
    for (const auto& c : euler) {
      auto check = verify_euler_identity(c.s, c.q, c.terms);
      out.push_back({"euler identity s=" + to_string(c.s) + " q=" + to_string(c.q) + " N=" + std::to_string(c.terms),
                     check.agree,
                     "lhs=" + num(check.lhs) + " truncation<=" + num(check.truncation_bound) +
                         " rhs=" + interval(check.rhs)});
    }

    for (const Rational& x : {Rational(1), Rational(2)}) {
      bool all = true;
      for (long r = 1; r <= 12; ++r) all = all && verify_qbinomial(r, Rational(1, p), x).agree;
      out.push_back({"q-binomial formula r<=12 q=1/" + std::to_string(p) + " x=" + to_string(x), all, "exact"});
    }

    // sum_lambda u^{|lambda|} w(lambda) = (1 - u/p)^{-1} prod_{i>=3 odd} (1 - u^2/p^i)^{-1}
    std::vector<Rational> us{Rational(1, 2)};
    if (p > 2) us.emplace_back(p - 1);
    for (const auto& u : us) {
      Rational partial(0);
      Rational power(1);
      for (int n = 0; n <= options.depth; ++n) {
        partial += power * hall.size_sum(n);
        power *= u;
      }
      Rational ratio = u / p;
      Rational bound = size_series_bound(p) * rpow(ratio, static_cast<unsigned long>(options.depth + 1)) / (1 - ratio);
      BoundedReal rhs = deformed_constant(p, u, tol).reciprocal();
      out.push_back(truncated_against("u-deformed generating identity u=" + to_string(u) + tag(p), partial, bound, rhs));
    }

    // Sum over l(lambda) <= r of w(lambda) (1/p)_r / (1/p)_{r-l} = prod_{i<=r} (1 + p^{-i}).
    for (long r = 1; r <= options.r_max; ++r) {
      Rational partial(0);
      for (const auto& row : hall.rows()) {
        auto length = static_cast<long>(row.lambda.length());
        if (length > r) continue;
        partial += row.weight * qpoch_p(p, r) / qpoch_p(p, r - length);
      }
      out.push_back(truncated_against("at-most-r-parts product r=" + std::to_string(r) + tag(p), partial,
                                      hall.tail_bound(), BoundedReal(truncated_normalizer(p, r))));
    }

    // P(a) = prod_{i>a} (1 - p^{-i}) / (p^{a(a+1)/2} prod_{i>=1} (1 - p^{-2i})).
    {
      constexpr long kFactors = 80;
      const BoundedReal c = odd_constant(p, tol);
      bool all = true;
      std::string detail;
      for (long a = 0; a <= 5; ++a) {
        Rational top(1);
        for (long i = a + 1; i <= kFactors; ++i) top *= 1 - inverse_power(p, static_cast<unsigned long>(i));
        Rational bottom(1);
        for (long i = 1; i <= kFactors; ++i) bottom *= 1 - inverse_power(p, static_cast<unsigned long>(2 * i));
        Rational top_tail = inverse_power(p, kFactors) / (p - 1);
        Rational bottom_tail = inverse_power(p, 2 * kFactors) / (p * p - 1);
        BoundedReal numerator = BoundedReal::from_bounds(top * (1 - top_tail), top);
        BoundedReal denominator = BoundedReal::from_bounds(bottom * (1 - bottom_tail), bottom);
        BoundedReal product_form =
            inverse_power(p, static_cast<unsigned long>(a * (a + 1) / 2)) * numerator * denominator.reciprocal();
        BoundedReal constant_form = pmf_parts(a, p).rational_part * c;
        if (!product_form.overlaps(constant_form)) {
          all = false;
          detail += "a=" + std::to_string(a) + " product=" + interval(product_form) +
                    " constant=" + interval(constant_form) + "; ";
        }
      }
      out.push_back({"parts formula as infinite product, a<=5" + tag(p), all, all ? "enclosures overlap" : detail});
    }

    // Normalization of the tabulated measures.
    const int size = std::min(options.depth, 30);
    for (const auto& measure : {MeasureSpec::wood(), MeasureSpec::deformed(Rational(1, 2)), MeasureSpec::truncated(3)}) {
      ProbabilityTable table = evaluate(tabulate(p, size, measure), tol);
      BoundedReal total = table.total();
      out.push_back({"normalization " + measure.name() + " |lambda|<=" + std::to_string(size) + tag(p),
                     total.contains(Rational(1)),
                     "total=" + interval(total) + " tail radius=" + num(table.tail.rad())});
    }
  }
  return out;
}

std::vector<CheckResult> verify_recursions(const VerifyOptions& options) {
  require_options(options);
  std::vector<CheckResult> out;
  const int small = std::min(options.depth, 15);

  for (long p : options.primes) {
    PartsRecursion rec = solve_parts_recursion(p, std::max<long>(options.a_max, 20));
    out.push_back({"parts count: closed form = both recursions, a<=" + std::to_string(rec.closed_form.size() - 1) + tag(p),
                   rec.agree(), "exact"});

    bool forms = true;
    bool sizes = true;
    bool deformed = true;
    for (int n = 0; n <= small; ++n) {
      Rational sum(0);
      for (const auto& lambda : enumerate_partitions(n)) {
        MassValue two = pmf_wood_form2(lambda, p);
        forms = forms && pmf_wood_form1(lambda, p) == two;
        deformed = deformed && pmf_deformed(lambda, p, Rational(1)).rational_part == two.rational_part;
        sum += two.rational_part;
      }
      sizes = sizes && sum == pmf_size(n, p).rational_part;
    }
    const std::string upto = " |lambda|<=" + std::to_string(small);
    out.push_back({"column form = multiplicity form" + upto + tag(p), forms, "exact"});
    out.push_back({"size formula = enumerated size marginal" + upto + tag(p), sizes, "exact"});
    out.push_back({"u=1 deformed measure = undeformed" + upto + tag(p), deformed, "exact"});

    const HallWeightTable hall(p, options.depth);
    std::map<long, Rational> by_length;
    for (const auto& row : hall.rows()) by_length[static_cast<long>(row.lambda.length())] += row.weight;
    bool all = true;
    std::string detail;
    for (long a = 0; a * (a + 1) / 2 <= options.depth; ++a) {
      const Rational& partial = by_length[a];
      Rational target = pmf_parts(a, p).rational_part;
      if (!(partial <= target && target <= partial + hall.tail_bound())) {
        all = false;
        detail += "a=" + std::to_string(a) + " partial=" + num(partial) + " target=" + num(target) + "; ";
      }
    }
    out.push_back({"parts marginal by enumeration, |lambda|<=" + std::to_string(options.depth) + tag(p), all,
                   all ? "truncation<=" + num(hall.tail_bound()) : detail});
  }
  return out;
}

std::vector<CheckResult> verify_chain(const VerifyOptions& options) {
  require_options(options);
  std::vector<CheckResult> out;

  for (long p : options.primes) {
    bool rows = true;
    for (long a = 0; a <= options.a_max; ++a) {
      Rational sum(0);
      for (long b = 0; b <= a; ++b) sum += kernel(a, b, p);
      rows = rows && sum == 1;
    }
    out.push_back({"kernel rows sum to 1, a<=" + std::to_string(options.a_max) + tag(p), rows, "exact"});

    // P(b) / (p^{binom(a+1,2)} P(a) (1/p^2)_{floor((a-b)/2)}) = K(a, b)
    bool ratio = true;
    for (long a = 0; a <= options.a_max; ++a) {
      Rational pa = pmf_parts(a, p).rational_part;
      Rational scale = Rational(ipow(Integer(p), static_cast<unsigned long>(a * (a + 1) / 2))) * pa;
      for (long b = 0; b <= a; ++b) {
        Rational lhs = pmf_parts(b, p).rational_part / (scale * qpoch_p2(p, (a - b) / 2));
        ratio = ratio && lhs == kernel(a, b, p);
      }
    }
    out.push_back({"kernel = ratio of column marginals, b<=a<=" + std::to_string(options.a_max) + tag(p), ratio, "exact"});

    // Prob(lambda'_1 = a, lambda'_2 = b) two ways.
    const HallWeightTable hall(p, options.depth);
    std::map<std::pair<int, int>, Rational> enumerated;
    for (const auto& row : hall.rows()) {
      int a = row.lambda.column(1);
      int b = row.lambda.column(2);
      if (a <= 4) enumerated[{a, b}] += row.weight;
    }
    bool two_step = true;
    std::string detail;
    for (long a = 0; a <= 4; ++a) {
      for (long b = 0; b <= a; ++b) {
        Rational chain = pmf_parts(a, p).rational_part * kernel(a, b, p);
        const Rational& partial = enumerated[{static_cast<int>(a), static_cast<int>(b)}];
        if (!(partial <= chain && chain <= partial + hall.tail_bound())) {
          two_step = false;
          detail += "(" + std::to_string(a) + "," + std::to_string(b) + ") ";
        }
      }
    }
    out.push_back({"two-step column marginal, a<=4" + tag(p), two_step,
                   two_step ? "truncation<=" + num(hall.tail_bound()) : detail});

    const Rational cutoff(1, 1'000'000'000'000L);
    auto initial = initial_column_distribution(p, cutoff);
    const BoundedReal c = odd_constant(p, Rational(1, ipow(Integer(10), 30)));
    BoundedReal total = BoundedReal::from_bounds(0, initial.tail_bound);
    for (const auto& mass : initial.masses) total += mass.rational_part * c;
    out.push_back({"first-column distribution normalized, heights<=" + std::to_string(initial.masses.size() - 1) + tag(p),
                   total.contains(Rational(1)), "total=" + interval(total)});
  }
  return out;
}

}  // namespace clpart
