#include "clpart/measures.hpp"
#include "clpart/qseries.hpp"
#include "clpart/verify.hpp"

#include <gtest/gtest.h>

namespace clpart {
namespace {

MassValue cp(Rational r) { return {ConstantKind::kOddConstant, Rational(0), std::move(r)}; }

TEST(MeasuresTest, ColumnFormExamples) {
  EXPECT_EQ(pmf_wood_form1(Partition{}, 2), cp(Rational(1)));
  EXPECT_EQ(pmf_wood_form1(Partition{1}, 2), cp(Rational(1, 2)));
  EXPECT_EQ(pmf_wood_form1(Partition{1, 1}, 2), cp(Rational(1, 6)));
}

TEST(MeasuresTest, MultiplicityFormExamples) {
  EXPECT_EQ(pmf_wood_form2(Partition{}, 2), cp(Rational(1)));
  EXPECT_EQ(pmf_wood_form2(Partition{1, 1}, 2), cp(Rational(1, 6)));
  EXPECT_EQ(pmf_wood_form2(Partition{2}, 3), cp(Rational(1, 9)));
}

TEST(MeasuresTest, FormsAgreeExactly) {
  for (long p : {2L, 3L, 5L}) {
    for (int n = 0; n <= 15; ++n) {
      for (const auto& lambda : enumerate_partitions(n)) {
        ASSERT_EQ(pmf_wood_form1(lambda, p), pmf_wood_form2(lambda, p)) << to_string(lambda) << " p=" << p;
      }
    }
  }
}

TEST(MeasuresTest, PartsExamples) {
  EXPECT_EQ(pmf_parts(0, 2), cp(Rational(1)));
  EXPECT_EQ(pmf_parts(1, 2), cp(Rational(1)));
  EXPECT_EQ(pmf_parts(2, 2), cp(Rational(1, 3)));
  EXPECT_THROW(pmf_parts(-1, 2), std::invalid_argument);
}

TEST(MeasuresTest, OnePartOracle) {
  // One-part partitions [k] carry 2^{-k}; the series sums to 1.
  Rational partial(0);
  for (int k = 1; k <= 60; ++k) partial += pmf_wood_form2(Partition{k}, 2).rational_part;
  Rational tail = inverse_power(2, 60);
  EXPECT_LE(partial, pmf_parts(1, 2).rational_part);
  EXPECT_LE(pmf_parts(1, 2).rational_part, partial + tail);
}

TEST(MeasuresTest, TwoPartOracle) {
  // [i, j], i >= j >= 1: weight 2^{-(i + 2j)} / d with d >= 3/4, so the
  // pairs with i + j > 40 carry at most (4/3) sum_{s > 40} s 2^{-s}
  // = (4/3) 42 / 2^40.
  Rational partial(0);
  for (int i = 1; i <= 40; ++i) {
    for (int j = 1; j <= i && i + j <= 40; ++j) partial += pmf_wood_form2(Partition{i, j}, 2).rational_part;
  }
  Rational tail = Rational(4, 3) * 42 * inverse_power(2, 40);
  Rational target = pmf_parts(2, 2).rational_part;
  EXPECT_LE(partial, target);
  EXPECT_LE(target, partial + tail);
}

TEST(MeasuresTest, SizeExamples) {
  EXPECT_EQ(pmf_size(0, 2), cp(Rational(1)));
  EXPECT_EQ(pmf_size(1, 2), cp(Rational(1, 2)));
  EXPECT_EQ(pmf_size(2, 2), cp(Rational(5, 12)));
  EXPECT_EQ(pmf_size(2, 2).rational_part,
            pmf_wood_form2(Partition{2}, 2).rational_part + pmf_wood_form2(Partition{1, 1}, 2).rational_part);
}

TEST(MeasuresTest, SizeMarginalMatchesEnumeration) {
  for (long p : {2L, 3L, 5L}) {
    for (int n = 0; n <= 15; ++n) {
      Rational sum(0);
      for (const auto& lambda : enumerate_partitions(n)) sum += pmf_wood_form2(lambda, p).rational_part;
      ASSERT_EQ(sum, pmf_size(n, p).rational_part) << "n=" << n << " p=" << p;
    }
  }
}

TEST(MeasuresTest, DeformedExamples) {
  const Rational half(1, 2);
  MassValue empty = pmf_deformed(Partition{}, 2, half);
  EXPECT_EQ(empty.kind, ConstantKind::kDeformed);
  EXPECT_EQ(empty.u, half);
  EXPECT_EQ(empty.rational_part, Rational(1));
  EXPECT_EQ(pmf_deformed(Partition{1}, 2, half).rational_part, Rational(1, 4));
  EXPECT_THROW(pmf_deformed(Partition{1}, 2, Rational(0)), std::invalid_argument);
  EXPECT_THROW(pmf_deformed(Partition{1}, 2, Rational(2)), std::invalid_argument);
}

TEST(MeasuresTest, DeformedAtOneMatchesUndeformed) {
  for (long p : {2L, 3L}) {
    for (int n = 0; n <= 15; ++n) {
      for (const auto& lambda : enumerate_partitions(n)) {
        ASSERT_EQ(pmf_deformed(lambda, p, Rational(1)).rational_part, pmf_wood_form2(lambda, p).rational_part);
      }
    }
  }
}

TEST(MeasuresTest, TruncatedExamples) {
  EXPECT_EQ(pmf_truncated(Partition{}, 2, 1), Rational(2, 3));
  EXPECT_EQ(pmf_truncated(Partition{1}, 2, 1), Rational(1, 6));
  for (int k = 1; k <= 10; ++k) {
    EXPECT_EQ(pmf_truncated(Partition{k}, 2, 1), Rational(2, 3) * inverse_power(2, static_cast<unsigned long>(k + 1)));
  }
  EXPECT_THROW(pmf_truncated(Partition{1, 1}, 2, 1), std::invalid_argument);
}

TEST(MeasuresTest, TruncatedTwoPartTotalEnclosesOne) {
  Rational partial(0);
  for (int n = 0; n <= 40; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      if (lambda.length() <= 2) partial += pmf_truncated(lambda, 2, 2);
    }
  }
  // Size class n carries at most K_2 2^{-n}.
  Rational tail = size_series_bound(2) * inverse_power(2, 40);
  EXPECT_LE(partial, Rational(1));
  EXPECT_LE(Rational(1), partial + tail);
}

TEST(MeasuresTest, RecursionExamples) {
  auto zero = solve_parts_recursion(2, 0);
  ASSERT_EQ(zero.masses().size(), 1u);
  EXPECT_EQ(zero.masses()[0], cp(Rational(1)));

  auto one = solve_parts_recursion(2, 1);
  EXPECT_EQ(one.from_column_chain[1], Rational(1));
  EXPECT_EQ(one.from_truncated_measure[1], Rational(1));

  auto five = solve_parts_recursion(3, 5);
  EXPECT_TRUE(five.agree());
  for (long a = 0; a <= 5; ++a) EXPECT_EQ(five.masses()[static_cast<std::size_t>(a)], pmf_parts(a, 3));
}

TEST(MeasuresTest, RecursionsAgreeToTwenty) {
  for (long p : {2L, 3L, 5L}) EXPECT_TRUE(solve_parts_recursion(p, 20).agree()) << p;
}

TEST(MeasuresTest, SizeSeriesBoundIsAboveThePartialSums) {
  for (long p : {2L, 3L, 5L}) {
    Rational bound = size_series_bound(p);
    Rational partial(0);
    for (long m = 0; m <= 30; ++m) partial += inverse_power(p, static_cast<unsigned long>(m)) / qpoch_p2(p, m);
    EXPECT_LT(partial, bound);
    // K_p = 1 / C_p by Euler's identity at s = 1/p, q = 1/p^2.
    BoundedReal inverse = odd_constant(p, Rational(1, 1'000'000'000'000L)).reciprocal();
    EXPECT_LE(inverse.lower(), bound);
    EXPECT_LT(bound - inverse.upper(), Rational(1, 1'000'000L));
  }
}

TEST(MeasuresTest, TabulateEmptySupport) {
  auto dist = tabulate(2, 0, MeasureSpec::wood());
  ASSERT_EQ(dist.entries.size(), 1u);
  EXPECT_EQ(dist.entries.begin()->first, Partition{});
  EXPECT_EQ(dist.entries.begin()->second, cp(Rational(1)));
  BoundedReal c = odd_constant(2, Rational(1, 1'000'000'000'000L));
  EXPECT_LE(dist.tail.lower(), 1 - c.upper());
  EXPECT_GE(dist.tail.upper(), 1 - c.lower());
}

TEST(MeasuresTest, TabulateWoodIsNormalized) {
  auto dist = tabulate(2, 30, MeasureSpec::wood());
  auto table = evaluate(dist, Rational(1, ipow(Integer(10), 30)));
  EXPECT_LT(table.tail.rad(), Rational(1, 1'000'000));
  EXPECT_TRUE(table.total().contains(Rational(1)));
}

TEST(MeasuresTest, TabulateTruncatedIsGeometric) {
  auto dist = tabulate(2, 20, MeasureSpec::truncated(1));
  ASSERT_EQ(dist.entries.size(), 21u);
  for (const auto& [lambda, mass] : dist.entries) {
    EXPECT_LE(lambda.length(), 1u);
    EXPECT_EQ(mass.kind, ConstantKind::kNone);
    EXPECT_EQ(mass.rational_part, pmf_truncated(lambda, 2, 1));
  }
  auto table = evaluate(dist, Rational(1, 1'000'000'000L));
  EXPECT_TRUE(table.total().contains(Rational(1)));
}

TEST(MeasuresTest, TabulateDeformedIsNormalized) {
  for (auto [p, u] : {std::pair{2L, Rational(1, 2)}, std::pair{3L, Rational(2)}}) {
    auto table = evaluate(tabulate(p, 24, MeasureSpec::deformed(u)), Rational(1, ipow(Integer(10), 30)));
    EXPECT_TRUE(table.total().contains(Rational(1))) << p;
  }
}

TEST(MeasuresTest, TabulateRejectsBadInput) {
  EXPECT_THROW(tabulate(2, 61, MeasureSpec::wood()), std::invalid_argument);
  EXPECT_THROW(tabulate(2, -1, MeasureSpec::wood()), std::invalid_argument);
  EXPECT_THROW(tabulate(2, 3, MeasureSpec::deformed(Rational(3))), std::invalid_argument);
}

TEST(MeasuresTest, RestrictedMovesMassIntoTail) {
  auto table = evaluate(tabulate(2, 8, MeasureSpec::wood()), Rational(1, ipow(Integer(10), 30)));
  auto small = table.restricted(3);
  for (const auto& [lambda, mass] : small.entries) EXPECT_LE(lambda.size(), 3);
  EXPECT_TRUE(small.total().overlaps(table.total()));
  EXPECT_GT(small.tail.mid(), table.tail.mid());
}

TEST(MeasuresTest, IdentityAndMarginalSuitesPass) {
  VerifyOptions options;
  options.primes = {2, 3};
  options.depth = 40;
  for (const auto& check : verify_identities(options)) EXPECT_TRUE(check.passed) << check.name << ": " << check.detail;
  for (const auto& check : verify_recursions(options)) EXPECT_TRUE(check.passed) << check.name << ": " << check.detail;
}

}  // namespace
}  // namespace clpart
