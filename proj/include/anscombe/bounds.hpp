#pragma once

// Closed-form bounds on ma_t(w) and r_t, and the numeric r_t bounds that
// follow from a table of LP values.

#include <vector>

#include "anscombe/lp.hpp"
#include "anscombe/rational.hpp"

namespace anscombe {

/// ma_t(t) = 1/2 + floor((t-1)/2) / (2t).
Rational ma_closed_form_full(int t);

/// ma_t(w) >= w/(2t) + floor((t-1)/2)/(2t) for ceil((t+1)/2) <= w <= t.
Rational ma_linear_lower(int t, int w);

/// Upper bound on r_t from the symmetric LP matrix at a single w:
/// ((w-1) ma + (t-w+1)(1-ma)) / (t ma).
Rational rt_upper_at(int t, int w, const Rational& ma);

/// min over w of rt_upper_at, the strongest bound the table supports.
Rational rt_upper_numeric(const MaTable& table);

/// min over w of max(w/(2t-w), (t-2)/(2t ma_t(w+1))) with ma_t(t+1) = 1.
Rational rt_lower_numeric(const MaTable& table);

/// 2 sqrt(6) - 4 + (c/t)(1 - sqrt(2/3)) with c = 1 for odd t and 2 for even
/// t. Requires t >= 3.
double rt_analytic_upper(int t);

/// The limit 2 sqrt(6) - 4 of rt_analytic_upper.
double rt_analytic_limit();

/// r_V >= 1/3 for every voter matrix.
Rational analytic_floor();

struct Figure2Point {
  int w;
  Rational x;
  Rational y;
};

/// x = (w - ceil((t+1)/2)) / floor((t-1)/2),
/// y = (ma_t(w) - 1/2) / (floor((t-1)/2) / (2t)). Requires t >= 3.
Figure2Point figure2_point(int t, int w, const Rational& ma);
std::vector<Figure2Point> figure2_points(const MaTable& table);

struct RtDetail {
  int w;
  Rational ma;
  /// max(w/(2t-w), (t-2)/(2t ma_t(w+1))).
  Rational lower_candidate;
  Rational upper_candidate;
};

struct RtBounds {
  int topics;
  Rational lower;
  Rational upper;
  double analytic_upper;
  bool exact;
  /// Minimizing w of the upper bound; 0 when t < 3.
  int upper_w = 0;
  std::vector<RtDetail> detail;
};

/// r_1 = r_2 = 1 without solving anything; t >= 3 solves ma_table(t).
RtBounds rt_bounds(int t, const SolveOptions& options = {});

/// Same, reusing an already computed table.
RtBounds rt_bounds(const MaTable& table);

}  // namespace anscombe
