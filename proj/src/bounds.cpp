#include "anscombe/bounds.hpp"

#include <cmath>
#include <limits>
#include <optional>

namespace anscombe {

namespace {

void check_w(int t, int w) {
  if (t < 1) throw ParameterError("t must be at least 1");
  if (w < first_majority_k(t) || w > t) throw ParameterError("w outside [ceil((t+1)/2), t]");
}

Rational lower_candidate(int t, int w, const MaTable& table) {
  const Rational by_decisions = make_rational(w, 2 * t - w);
  const Rational by_half = make_rational(t - 2, 2 * t) / table.ma(w + 1);
  return by_decisions > by_half ? by_decisions : by_half;
}

}  // namespace

Rational ma_closed_form_full(int t) {
  if (t < 1) throw ParameterError("t must be at least 1");
  return make_rational(1, 2) + make_rational((t - 1) / 2, 2 * t);
}

Rational ma_linear_lower(int t, int w) {
  check_w(t, w);
  return make_rational(w + (t - 1) / 2, 2 * t);
}

Rational rt_upper_at(int t, int w, const Rational& ma) {
  check_w(t, w);
  if (sgn(ma) <= 0) throw ParameterError("average majority must be positive");
  return ((w - 1) * ma + (t - w + 1) * (1 - ma)) / (t * ma);
}

Rational rt_upper_numeric(const MaTable& table) {
  std::optional<Rational> best;
  for (int w = table.first_w; w <= table.topics; ++w) {
    Rational u = rt_upper_at(table.topics, w, table.ma(w));
    if (!best || u < *best) best = std::move(u);
  }
  return *best;
}

Rational rt_lower_numeric(const MaTable& table) {
  std::optional<Rational> best;
  for (int w = table.first_w; w <= table.topics; ++w) {
    Rational c = lower_candidate(table.topics, w, table);
    if (!best || c < *best) best = std::move(c);
  }
  return *best;
}

double rt_analytic_limit() { return 2.0 * std::sqrt(6.0) - 4.0; }

double rt_analytic_upper(int t) {
  if (t < 3) throw ParameterError("rt_analytic_upper: t must be at least 3");
  const double c = t % 2 == 1 ? 1.0 : 2.0;
  return rt_analytic_limit() + c / t * (1.0 - std::sqrt(2.0 / 3.0));
}

Rational analytic_floor() { return make_rational(1, 3); }

Figure2Point figure2_point(int t, int w, const Rational& ma) {
  if (t < 3) throw ParameterError("figure2 normalization needs t >= 3");
  check_w(t, w);
  const int span = (t - 1) / 2;
  return {w, make_rational(w - first_majority_k(t), span), (ma - make_rational(1, 2)) / make_rational(span, 2 * t)};
}

std::vector<Figure2Point> figure2_points(const MaTable& table) {
  std::vector<Figure2Point> points;
  for (int w = table.first_w; w <= table.topics; ++w) points.push_back(figure2_point(table.topics, w, table.ma(w)));
  return points;
}

RtBounds rt_bounds(const MaTable& table) {
  const int t = table.topics;
  RtBounds b{t, 1, 1, t >= 3 ? rt_analytic_upper(t) : std::numeric_limits<double>::quiet_NaN(), table.exact, 0, {}};
  if (t < 3) return b;
  b.lower = rt_lower_numeric(table);
  b.upper = 1;
  for (int w = table.first_w; w <= t; ++w) {
    RtDetail d{w, table.ma(w), lower_candidate(t, w, table), rt_upper_at(t, w, table.ma(w))};
    if (d.upper_candidate < b.upper || b.upper_w == 0) {
      b.upper = d.upper_candidate;
      b.upper_w = w;
    }
    b.detail.push_back(std::move(d));
  }
  return b;
}

RtBounds rt_bounds(int t, const SolveOptions& options) {
  if (t < 1) throw ParameterError("t must be at least 1");
  if (t < 3) return {t, 1, 1, std::numeric_limits<double>::quiet_NaN(), true, 0, {}};
  return rt_bounds(ma_table(t, options));
}

}  // namespace anscombe
