#include "clpart/partition.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace clpart {
namespace {

TEST(PartitionTest, ConjugateExamples) {
  EXPECT_EQ(conjugate(Partition{}), Partition{});
  EXPECT_EQ(conjugate(Partition{3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(conjugate(Partition{2, 2}), (Partition{2, 2}));
}

TEST(PartitionTest, NStatExamples) {
  EXPECT_EQ(n_stat(Partition{}), 0);
  EXPECT_EQ(n_stat(Partition{1, 1}), 1);
  EXPECT_EQ(n_stat(Partition{3, 2, 1}), 4);
}

TEST(PartitionTest, MultiplicityExamples) {
  EXPECT_EQ(multiplicity(Partition{1, 1}, 1), 2);
  EXPECT_EQ(multiplicity(Partition{3, 1}, 2), 0);
  EXPECT_EQ(multiplicity(Partition{2, 2, 2}, 2), 3);
  EXPECT_EQ((Partition{3, 1, 1}.multiplicities()), (std::vector<int>{2, 0, 1}));
}

TEST(PartitionTest, EnumerateExamples) {
  EXPECT_EQ(enumerate_partitions(0), std::vector<Partition>{Partition{}});
  EXPECT_EQ(enumerate_partitions(2), (std::vector<Partition>{Partition{2}, Partition{1, 1}}));
  EXPECT_EQ(enumerate_partitions(5).size(), 7u);
}

TEST(PartitionTest, EnumerationIsReverseLexicographic) {
  auto four = enumerate_partitions(4);
  std::vector<Partition> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(four, expected);
  CanonicalOrder less;
  for (int n = 1; n <= 12; ++n) {
    auto all = enumerate_partitions(n);
    for (std::size_t i = 1; i < all.size(); ++i) EXPECT_TRUE(less(all[i - 1], all[i]));
  }
}

TEST(PartitionTest, EnumerationRejectsOutOfRange) {
  EXPECT_THROW(enumerate_partitions(-1), std::invalid_argument);
  EXPECT_THROW(enumerate_partitions(kEnumerationCap + 1), std::invalid_argument);
}

// p(n) from Euler's pentagonal number recurrence.
std::vector<long> partition_counts(int n_max) {
  std::vector<long> p(static_cast<std::size_t>(n_max + 1), 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    long total = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      long sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) total += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = total;
  }
  return p;
}

TEST(PartitionTest, EnumerationCountsMatchRecurrence) {
  auto counts = partition_counts(40);
  for (int n = 0; n <= 40; ++n) {
    auto all = enumerate_partitions(n);
    ASSERT_EQ(static_cast<long>(all.size()), counts[static_cast<std::size_t>(n)]) << "n=" << n;
    if (n <= 25) {
      std::set<std::vector<int>> unique;
      for (const auto& l : all) {
        EXPECT_EQ(l.size(), n);
        unique.emplace(l.parts().begin(), l.parts().end());
      }
      EXPECT_EQ(unique.size(), all.size());
    }
  }
}

TEST(PartitionTest, ConjugationIsAnInvolutionPreservingSize) {
  for (int n = 0; n <= 20; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      Partition mu = lambda.conjugate();
      ASSERT_EQ(mu.size(), lambda.size());
      ASSERT_EQ(mu.conjugate(), lambda);
      ASSERT_EQ(static_cast<int>(mu.length()), lambda.largest());
    }
  }
}

TEST(PartitionTest, NStatEqualsSumOfColumnBinomials) {
  for (int n = 0; n <= 20; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      long expected = 0;
      Partition columns = lambda.conjugate();
      for (int c : columns.parts()) expected += static_cast<long>(c) * (c - 1) / 2;
      ASSERT_EQ(lambda.n_stat(), expected) << to_string(lambda);
    }
  }
}

TEST(PartitionTest, FromColumns) {
  std::vector<int> columns{2, 1};
  EXPECT_EQ(Partition::from_columns(columns), (Partition{2, 1}));
  std::vector<int> tall{3};
  EXPECT_EQ(Partition::from_columns(tall), (Partition{1, 1, 1}));
  EXPECT_EQ(Partition::from_columns({}), Partition{});
}

TEST(PartitionTest, ColumnHeights) {
  Partition lambda{4, 2, 2, 1};
  EXPECT_EQ(lambda.column(1), 4);
  EXPECT_EQ(lambda.column(2), 3);
  EXPECT_EQ(lambda.column(3), 1);
  EXPECT_EQ(lambda.column(5), 0);
}

TEST(PartitionTest, TextForm) {
  EXPECT_EQ(to_string(Partition{}), "[]");
  EXPECT_EQ(to_string(Partition{3, 1, 1}), "[3,1,1]");
  EXPECT_EQ(parse_partition("[]"), Partition{});
  EXPECT_EQ(parse_partition(" [ 3, 1 ,1 ] "), (Partition{3, 1, 1}));
}

TEST(PartitionTest, TextFormRoundTripsOnRandomPartitions) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(rng() % 30);
    auto all = enumerate_partitions(n);
    const auto& lambda = all[rng() % all.size()];
    EXPECT_EQ(parse_partition(to_string(lambda)), lambda);
  }
}

TEST(PartitionTest, RejectsMalformedInput) {
  try {
    parse_partition("[1,2]");
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "parts must be weakly decreasing");
  }
  EXPECT_THROW(parse_partition("[0]"), std::invalid_argument);
  EXPECT_THROW(parse_partition("[2,-1]"), std::invalid_argument);
  EXPECT_THROW(parse_partition("3,1"), std::invalid_argument);
  EXPECT_THROW(parse_partition("[3,]"), std::invalid_argument);
  EXPECT_THROW(parse_partition("[a]"), std::invalid_argument);
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
}

}  // namespace
}  // namespace clpart
