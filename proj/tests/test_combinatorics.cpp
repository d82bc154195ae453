#include <gtest/gtest.h>

#include "anscombe/combinatorics.hpp"

namespace anscombe {
namespace {

TEST(Binomial, SmallAndLarge) {
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(100, 50), BigInt("100891344545564193334812497256"));
  EXPECT_THROW(binomial(-1, 0), ParameterError);
}

TEST(Binomial, TableMatchesDirect) {
  const BinomialTable table(60);
  for (int n = 0; n <= 60; ++n) {
    for (int k = -1; k <= n + 1; ++k) ASSERT_EQ(table(n, k), binomial(n, k)) << n << " " << k;
  }
}

TEST(FirstMajority, CeilOfHalfPlusOne) {
  EXPECT_EQ(first_majority_k(1), 1);
  EXPECT_EQ(first_majority_k(2), 2);
  EXPECT_EQ(first_majority_k(3), 2);
  EXPECT_EQ(first_majority_k(4), 3);
  EXPECT_EQ(first_majority_k(9), 5);
}

TEST(Skl, HandValues) {
  // t=3: a 1-voter (YNN) supports the 2-proposals YYN and YNY.
  EXPECT_EQ(s_kl(3, 2, 1), 2);
  EXPECT_EQ(s_kl(3, 3, 1), 0);
  EXPECT_EQ(s_kl(3, 2, 3), 3);
  EXPECT_EQ(s_kl(3, 3, 3), 1);
  EXPECT_THROW(s_kl(3, 1, 1), ParameterError);
  EXPECT_THROW(s_kl(3, 2, 4), ParameterError);
}

TEST(Skl, BoundaryColumns) {
  for (int t = 1; t <= 40; ++t) {
    for (int k = first_majority_k(t); k <= t; ++k) {
      ASSERT_EQ(s_kl(t, k, 0), 0) << t << " " << k;
      ASSERT_EQ(s_kl(t, k, t), binomial(t, k)) << t << " " << k;
    }
  }
}

TEST(Skl, MatchesEnumeration) {
  for (int t = 1; t <= 12; ++t) {
    for (int k = first_majority_k(t); k <= t; ++k) {
      for (int l = 0; l <= t; ++l) ASSERT_EQ(s_kl(t, k, l), s_kl_oracle(t, k, l)) << t << " " << k << " " << l;
    }
  }
}

TEST(Skl, AnyVoterWithLYesGivesTheSameCount) {
  for (int t = 1; t <= 7; ++t) {
    for (Mask m = 0; m < (Mask{1} << t); ++m) {
      const OpinionVector voter(t, m);
      for (int k = first_majority_k(t); k <= t; ++k) {
        ASSERT_EQ(s_kl_oracle(k, voter), s_kl(t, k, voter.yes_count()));
      }
    }
  }
}

TEST(Skl, TableMatchesDirect) {
  const SupportTable table(31);
  for (int k = table.first_k(); k <= 31; ++k) {
    for (int l = 0; l <= 31; ++l) ASSERT_EQ(table(k, l), s_kl(31, k, l));
  }
  EXPECT_THROW(table(table.first_k() - 1, 0), ParameterError);
}

TEST(Identity, WeightedColumnSums) {
  for (int t = 1; t <= 30; t += 2) {
    for (int l = 0; l <= t; ++l) ASSERT_EQ(c_l(t, l), c_l_closed_form(t, l)) << t << " " << l;
  }
  EXPECT_EQ(c_l_closed_form(5, 2), 2 * 6);
}

}  // namespace
}  // namespace anscombe
