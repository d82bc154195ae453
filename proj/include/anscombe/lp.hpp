#pragma once

// The linear program whose optimum is ma_t(w), the largest average majority
// of a t-topic matrix in which no proposal with w or more Ys has majority
// support:
//
//   maximize   (1/t) sum_l l v_l
//   subject to sum_l (s_{k,l} / s_{k,t}) v_l <= 1/2   for k = w..t
//              sum_l v_l = 1,  v >= 0
//
// A matrix with md_V < w satisfies the constraints strictly; they are closed
// here, so the optimum is the supremum over such matrices rather than a value
// attained by one of them.

#include <cstddef>
#include <vector>

#include "anscombe/combinatorics.hpp"
#include "anscombe/core.hpp"
#include "anscombe/rational.hpp"

namespace anscombe {

struct LinearProgram {
  int topics;
  int min_yes;
  /// k of each inequality row, w..t.
  std::vector<int> row_k;
  /// Row k holds s_{k,l} / s_{k,t} for l = 0..t.
  std::vector<std::vector<Rational>> coefficients;
  Rational rhs;
  /// l / t for l = 0..t.
  std::vector<Rational> objective;

  std::size_t constraint_count() const noexcept { return row_k.size(); }
};

/// Throws ParameterError unless t >= 1 and ceil((t+1)/2) <= w <= t.
LinearProgram build_ma_lp(int t, int w);
LinearProgram build_ma_lp(const SupportTable& support, int w);

enum class Arithmetic { kExact, kFloat };

struct SolveOptions {
  Arithmetic arithmetic = Arithmetic::kExact;
  /// Exact solves refuse t above this (ResourceLimit).
  int exact_topic_cap = 200;
  /// Worker threads for sweeps; 0 picks hardware_concurrency().
  unsigned threads = 0;
};

inline constexpr int kDefaultExactTopicCap = 200;
inline constexpr int kFloatTopicCap = 1000;

struct LpSolution {
  int topics;
  int min_yes;
  /// v*_0..v*_t. In float mode these are the exact values of the doubles.
  std::vector<Rational> profile;
  /// (1/t) sum_l l v*_l.
  Rational ma;
  /// k of every constraint that holds with equality (exact mode) or within
  /// 1e-9 (float mode).
  std::vector<int> active;
  std::size_t pivots = 0;
  bool exact = true;
  /// Largest constraint violation of the returned profile; 0 in exact mode.
  double residual = 0.0;

  /// Exact mode only (ParameterError otherwise).
  TypeProfile type_profile() const;
};

LpSolution solve_lp(const LinearProgram& lp);
LpSolution solve_ma(int t, int w, const SolveOptions& options = {});

/// ma_t(w) for every w in [ceil((t+1)/2), t].
struct MaTable {
  int topics;
  int first_w;
  bool exact;
  std::vector<LpSolution> solutions;

  int last_w() const noexcept { return topics; }
  /// ma_t(w); w = t+1 yields 1 by convention.
  Rational ma(int w) const;
};

MaTable ma_table(int t, const SolveOptions& options = {});

}  // namespace anscombe
