#include <gtest/gtest.h>

#include <cmath>

#include "anscombe/bounds.hpp"
#include "anscombe/lp.hpp"

namespace anscombe {
namespace {

SolveOptions float_options() {
  SolveOptions o;
  o.arithmetic = Arithmetic::kFloat;
  return o;
}

TEST(Lp, ProgramShape) {
  const LinearProgram lp = build_ma_lp(5, 4);
  EXPECT_EQ(lp.constraint_count(), 2u);
  EXPECT_EQ(lp.row_k, (std::vector<int>{4, 5}));
  EXPECT_EQ(lp.rhs, make_rational(1, 2));
  EXPECT_EQ(lp.objective[5], 1);
  for (const auto& row : lp.coefficients) {
    EXPECT_EQ(row[0], 0);
    EXPECT_EQ(row[5], 1);
  }
  // Of the five 4-proposals, only YYYNY and YYYYN agree with YYYNN on 3 topics.
  EXPECT_EQ(lp.coefficients[0][3], make_rational(2, 5));
  EXPECT_THROW(build_ma_lp(5, 2), ParameterError);
  EXPECT_THROW(build_ma_lp(5, 6), ParameterError);
}

TEST(Lp, ThreeTopics) {
  const LpSolution s = solve_ma(3, 3);
  EXPECT_EQ(s.ma, make_rational(2, 3));
  EXPECT_EQ(s.type_profile().average_majority(), s.ma);
  EXPECT_EQ(solve_ma(3, 2).ma, make_rational(1, 2));
}

TEST(Lp, NineTopicSweep) {
  const MaTable table = ma_table(9);
  EXPECT_EQ(table.first_w, 5);
  const std::vector<Rational> expected{make_rational(1, 2), make_rational(5, 9), make_rational(11, 18),
                                       make_rational(2, 3), make_rational(13, 18)};
  for (int w = 5; w <= 9; ++w) EXPECT_EQ(table.ma(w), expected[static_cast<std::size_t>(w - 5)]) << w;
  EXPECT_EQ(table.ma(10), 1);
  EXPECT_THROW(table.ma(4), ParameterError);
}

TEST(Lp, FullProgramClosedForm) {
  for (int t = 1; t <= 30; ++t) EXPECT_EQ(solve_ma(t, t).ma, ma_closed_form_full(t)) << t;
}

TEST(Lp, SolutionsAreFeasibleAndMonotone) {
  for (int t = 1; t <= 24; ++t) {
    const MaTable table = ma_table(t);
    Rational previous = 0;
    for (int w = table.first_w; w <= t; ++w) {
      const LpSolution& s = table.solutions[static_cast<std::size_t>(w - table.first_w)];
      EXPECT_EQ(s.min_yes, w);
      EXPECT_GE(s.ma, previous);
      EXPECT_GE(s.ma, ma_linear_lower(t, w)) << t << " " << w;
      EXPECT_GE(s.ma, make_rational(1, 2));
      previous = s.ma;

      // Independent re-check against the unreduced program.
      const LinearProgram lp = build_ma_lp(t, w);
      Rational mass = 0;
      for (const Rational& v : s.profile) mass += v;
      EXPECT_EQ(mass, 1);
      for (std::size_t i = 0; i < lp.constraint_count(); ++i) {
        Rational lhs = 0;
        for (int l = 0; l <= t; ++l) lhs += lp.coefficients[i][static_cast<std::size_t>(l)] * s.profile[static_cast<std::size_t>(l)];
        EXPECT_LE(lhs, lp.rhs);
      }
    }
  }
}

TEST(Lp, ThreadCountDoesNotChangeResults) {
  SolveOptions one, many;
  one.threads = 1;
  many.threads = 4;
  const MaTable a = ma_table(21, one);
  const MaTable b = ma_table(21, many);
  for (int w = a.first_w; w <= 21; ++w) {
    EXPECT_EQ(a.ma(w), b.ma(w));
    EXPECT_EQ(a.solutions[static_cast<std::size_t>(w - a.first_w)].profile,
              b.solutions[static_cast<std::size_t>(w - b.first_w)].profile);
  }
}

TEST(Lp, FloatAgreesWithExact) {
  for (int t : {3, 8, 15, 31, 40}) {
    const MaTable exact = ma_table(t);
    const MaTable approx = ma_table(t, float_options());
    EXPECT_FALSE(approx.exact);
    for (int w = exact.first_w; w <= t; ++w) {
      EXPECT_NEAR(approx.ma(w).get_d(), exact.ma(w).get_d(), 1e-8) << t << " " << w;
      EXPECT_LT(approx.solutions[static_cast<std::size_t>(w - exact.first_w)].residual, 1e-8);
    }
  }
}

TEST(Lp, Caps) {
  EXPECT_THROW(solve_ma(201, 150), ResourceLimit);
  SolveOptions raised;
  raised.exact_topic_cap = 250;
  EXPECT_THROW(solve_ma(251, 200, raised), ResourceLimit);
  EXPECT_THROW(solve_ma(1001, 1000, float_options()), ResourceLimit);
  EXPECT_THROW(ma_table(0), ParameterError);
  EXPECT_THROW(solve_ma(4, 4, float_options()).type_profile(), ParameterError);
}

}  // namespace
}  // namespace anscombe
