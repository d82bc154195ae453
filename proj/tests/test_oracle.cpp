#include <gtest/gtest.h>

#include <random>

#include "anscombe/oracle.hpp"
#include "anscombe/sampling.hpp"
#include "support.hpp"

namespace anscombe {
namespace {

using testing::brute_force;
using testing::nine_voters;
using testing::random_matrix;

TEST(Oracle, NineVoterExample) {
  const VoterMatrix v = nine_voters();
  const OracleResult md = max_majority_decisions(v);
  EXPECT_EQ(md.best.yes_count(), 6);
  EXPECT_EQ(md_of(v), 6);
  EXPECT_TRUE(has_majority_support(v, md.best));

  const OracleResult best = best_representation(v);
  EXPECT_EQ(best.value, 37);
  EXPECT_EQ(*best.relative, make_rational(37, 39));
  EXPECT_EQ(best.absolute, make_rational(37, 63));
  EXPECT_TRUE(has_majority_support(v, best.best));
  EXPECT_EQ(matches(v, best.best), 37u);
}

TEST(Oracle, SingleVoter) {
  const VoterMatrix v(5, {{OpinionVector::parse("YYYYY"), 3}});
  EXPECT_EQ(md_of(v), 5);
  EXPECT_EQ(*best_representation(v).relative, 1);
}

TEST(Oracle, TieBreakPrefersMoreYesThenSmallestMask) {
  // Both YN and NY are supported with equal matches; YY also is.
  const VoterMatrix v(2, {{OpinionVector::parse("YN"), 1}, {OpinionVector::parse("NY"), 1}});
  const OracleResult r = best_representation(v);
  EXPECT_EQ(r.best.to_string(), "YY");
  const VoterMatrix w(4, {{OpinionVector::parse("YYNN"), 1}, {OpinionVector::parse("NNYY"), 1}});
  EXPECT_EQ(max_majority_decisions(w).best.to_string(), "YYYY");
}

TEST(Oracle, AgreesWithStringBruteForce) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 3000; ++iter) {
    const VoterMatrix v = canonicalize(random_matrix(rng, 8, 7, 5)).matrix;
    const auto ref = brute_force(v);
    const OracleResult best = best_representation(v);
    ASSERT_EQ(md_of(v), ref.md);
    ASSERT_EQ(best.value, static_cast<unsigned long>(ref.matches));
    ASSERT_EQ(*best.relative, ref.relative);
  }
}

TEST(Oracle, ThreadCountDoesNotChangeTheWitness) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 5; ++iter) {
    const VoterMatrix v = random_canonical_matrix(rng, {14, 16, 40, 9});
    OracleOptions one, many;
    one.threads = 1;
    many.threads = 4;
    const auto a = best_representation(v, one);
    const auto b = best_representation(v, many);
    EXPECT_EQ(a.best, b.best);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(max_majority_decisions(v, one).best, max_majority_decisions(v, many).best);
  }
}

TEST(Oracle, RationalWeightsMatchScaledIntegers) {
  const FractionalMatrix f(3, {{OpinionVector::parse("YNN"), make_rational(1, 5)},
                               {OpinionVector::parse("NYN"), make_rational(1, 5)},
                               {OpinionVector::parse("NNY"), make_rational(1, 5)},
                               {OpinionVector::parse("YYY"), make_rational(2, 5)}});
  const VoterMatrix v(3, {{OpinionVector::parse("YNN"), 1},
                          {OpinionVector::parse("NYN"), 1},
                          {OpinionVector::parse("NNY"), 1},
                          {OpinionVector::parse("YYY"), 2}});
  EXPECT_EQ(md_of(f), md_of(v));
  EXPECT_EQ(*best_representation(f).relative, *best_representation(v).relative);
}

TEST(Oracle, Caps) {
  const VoterMatrix wide(25, {{OpinionVector::all_yes(25), 1}});
  EXPECT_THROW(md_of(wide), ResourceLimit);
  OracleOptions options;
  options.max_topics = 31;
  EXPECT_THROW(md_of(wide, options), ParameterError);

  const VoterMatrix flipped(2, {{OpinionVector::parse("NN"), 2}, {OpinionVector::parse("YY"), 1}});
  EXPECT_THROW(best_representation(flipped), ParameterError);
  // md counts Ys literally, so non-canonical input is accepted: YY lacks
  // support, YN is backed by everyone.
  EXPECT_EQ(md_of(flipped), 1);
}

TEST(HalfProposal, SupportedAndAboveBound) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 2000; ++iter) {
    const VoterMatrix v = canonicalize(random_matrix(rng, 12, 8, 4)).matrix;
    const Proposal p = half_proposal(v);
    ASSERT_TRUE(has_majority_support(v, p));
    ASSERT_GE(absolute_representativeness(v, p), make_rational(1, 2) - make_rational(1, v.topics()));
  }
}

TEST(RuleOfThreeFourths, LargeAverageMajorityMeansAllYesIsSupported) {
  // m_V = 3/4 exactly: YYYY x2, YYNN, NNYY.
  const VoterMatrix v(4, {{OpinionVector::parse("YYYY"), 2},
                          {OpinionVector::parse("YYNN"), 1},
                          {OpinionVector::parse("NNYY"), 1}});
  EXPECT_EQ(column_tally(v).average_majority(), make_rational(3, 4));
  EXPECT_TRUE(has_majority_support(v, OpinionVector::all_yes(4)));
  EXPECT_TRUE(rule_of_three_fourths_check(v));
  // Below 3/4 the implication is vacuous even when all-Y fails.
  EXPECT_TRUE(rule_of_three_fourths_check(nine_voters()));
  EXPECT_FALSE(has_majority_support(nine_voters(), OpinionVector::all_yes(7)));
}

}  // namespace
}  // namespace anscombe
