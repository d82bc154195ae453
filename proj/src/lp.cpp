#include "anscombe/lp.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <optional>
#include <thread>

#include "reduced_simplex.hpp"
#include "simplex.hpp"

namespace anscombe {

namespace {

void check_program_range(int t, int w) {
  if (t < 1) throw ParameterError("ma LP: t must be at least 1");
  if (w < first_majority_k(t) || w > t) {
    throw ParameterError("ma LP: w = " + std::to_string(w) + " outside [" +
                         std::to_string(first_majority_k(t)) + ", " + std::to_string(t) + "]");
  }
}

std::size_t pivot_limit(int t) { return 50 * static_cast<std::size_t>(t + 1) * static_cast<std::size_t>(t + 1) + 1000; }

// s_{k,l} / C(t,k) is the upper tail P[X >= x0] of a hypergeometric
// variable X (draws k from t items of which l are marked). Evaluated in long
// double from the log-pmf at x0 and the pmf ratio recurrence.
long double normalized_support(int t, int k, int l) {
  const int threshold = k + l - t / 2;
  const int from = std::max({0, k - (t - l), threshold >= 0 ? (threshold + 1) / 2 : -((-threshold) / 2)});
  const int to = std::min(k, l);
  if (from > to) return 0.0L;

  auto log_choose = [](long double n, long double r) {
    return std::lgamma(n + 1) - std::lgamma(r + 1) - std::lgamma(n - r + 1);
  };
  long double term = std::exp(log_choose(l, from) + log_choose(t - l, k - from) - log_choose(t, k));
  long double sum = 0;
  for (int x = from; x <= to; ++x) {
    sum += term;
    // pmf(x+1) / pmf(x) = (l-x)(k-x) / ((x+1)(t-l-k+x+1))
    const long double num = static_cast<long double>(l - x) * (k - x);
    const long double den = static_cast<long double>(x + 1) * (t - l - k + x + 1);
    if (num == 0) break;
    term *= num / den;
  }
  return std::min(sum, 1.0L);
}

// Rows k = ceil((t+1)/2)..t of normalized coefficients, shared by a sweep.
class FloatSupportTable {
 public:
  explicit FloatSupportTable(int t) : t_(t) {
    for (int k = first_majority_k(t); k <= t; ++k) {
      std::vector<long double> row(static_cast<std::size_t>(t) + 1);
      for (int l = 0; l < t; ++l) row[static_cast<std::size_t>(l)] = normalized_support(t, k, l);
      row[static_cast<std::size_t>(t)] = 1.0L;
      rows_.push_back(std::move(row));
    }
  }

  int topics() const { return t_; }

  // Rows for k = w..t.
  detail::ReducedSimplex::Rows rows_from(int w) const {
    return detail::ReducedSimplex::Rows(rows_).subspan(static_cast<std::size_t>(w - first_majority_k(t_)));
  }

 private:
  int t_;
  std::vector<std::vector<long double>> rows_;
};

LpSolution solve_float(const FloatSupportTable& support, int w) {
  const int t = support.topics();
  const detail::ReducedSimplex::Rows a = support.rows_from(w);
  std::vector<long double> cost(static_cast<std::size_t>(t) + 1);
  for (int l = 0; l <= t; ++l) cost[static_cast<std::size_t>(l)] = static_cast<long double>(l) / t;

  detail::ReducedSimplex simplex(a, std::vector<long double>(a.size(), 0.5L), cost);
  const auto stats = simplex.solve(pivot_limit(t));
  const std::vector<long double> x = simplex.solution();

  LpSolution s;
  s.topics = t;
  s.min_yes = w;
  s.exact = false;
  s.pivots = stats.pivots;

  long double objective = 0, mass = 0, residual = 0;
  for (int l = 0; l <= t; ++l) {
    const long double v = x[static_cast<std::size_t>(l)];
    objective += l * v;
    mass += v;
    s.profile.emplace_back(static_cast<double>(v));
  }
  objective /= t;
  residual = std::abs(mass - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    long double lhs = 0;
    for (int l = 0; l <= t; ++l) lhs += a[i][static_cast<std::size_t>(l)] * x[static_cast<std::size_t>(l)];
    residual = std::max(residual, lhs - 0.5L);
    if (std::abs(lhs - 0.5L) <= 1e-9L) s.active.push_back(w + static_cast<int>(i));
  }
  s.residual = static_cast<double>(residual);
  s.ma = Rational(static_cast<double>(objective));
  return s;
}

}  // namespace

LinearProgram build_ma_lp(const SupportTable& support, int w) {
  const int t = support.topics();
  check_program_range(t, w);
  LinearProgram lp{t, w, {}, {}, make_rational(1, 2), {}};
  for (int l = 0; l <= t; ++l) lp.objective.push_back(make_rational(l, t));
  for (int k = w; k <= t; ++k) {
    const BigInt& full = support(k, t);
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(t) + 1);
    for (int l = 0; l <= t; ++l) {
      Rational q(support(k, l), full);
      q.canonicalize();
      row.push_back(std::move(q));
    }
    lp.row_k.push_back(k);
    lp.coefficients.push_back(std::move(row));
  }
  return lp;
}

LinearProgram build_ma_lp(int t, int w) {
  check_program_range(t, w);
  return build_ma_lp(SupportTable(t), w);
}

LpSolution solve_lp(const LinearProgram& lp) {
  const int t = lp.topics;
  std::vector<Rational> rhs(lp.constraint_count(), lp.rhs);
  detail::SimplexTableau<Rational> tableau(lp.coefficients, rhs, lp.objective);
  const auto stats = tableau.solve(pivot_limit(t));

  LpSolution s;
  s.topics = t;
  s.min_yes = lp.min_yes;
  s.exact = true;
  s.pivots = stats.pivots;
  s.profile = tableau.structural_solution();
  s.ma = tableau.objective();

  // Substitute the solution back: feasibility and the objective are
  // re-checked exactly, independent of the tableau bookkeeping.
  Rational mass = 0, objective = 0;
  for (int l = 0; l <= t; ++l) {
    const Rational& v = s.profile[static_cast<std::size_t>(l)];
    if (sgn(v) < 0) throw Error("ma LP: negative variable in solution");
    mass += v;
    objective += lp.objective[static_cast<std::size_t>(l)] * v;
  }
  if (mass != 1 || objective != s.ma) throw Error("ma LP: solution failed exact re-substitution");
  for (std::size_t i = 0; i < lp.constraint_count(); ++i) {
    Rational lhs = 0;
    for (int l = 0; l <= t; ++l) lhs += lp.coefficients[i][static_cast<std::size_t>(l)] * s.profile[static_cast<std::size_t>(l)];
    if (lhs > lp.rhs) throw Error("ma LP: solution violates constraint k = " + std::to_string(lp.row_k[i]));
    if (lhs == lp.rhs) s.active.push_back(lp.row_k[i]);
  }
  return s;
}

LpSolution solve_ma(int t, int w, const SolveOptions& options) {
  check_program_range(t, w);
  if (options.arithmetic == Arithmetic::kFloat) {
    if (t > kFloatTopicCap) throw ResourceLimit("float LP limited to t <= " + std::to_string(kFloatTopicCap));
    return solve_float(FloatSupportTable(t), w);
  }
  if (t > options.exact_topic_cap) {
    throw ResourceLimit("exact LP limited to t <= " + std::to_string(options.exact_topic_cap) +
                        "; use float arithmetic for larger t");
  }
  return solve_lp(build_ma_lp(t, w));
}

TypeProfile LpSolution::type_profile() const {
  if (!exact) throw ParameterError("type_profile needs an exact LP solution");
  return TypeProfile(profile);
}

Rational MaTable::ma(int w) const {
  if (w == topics + 1) return 1;
  if (w < first_w || w > topics) throw ParameterError("ma: w outside the table");
  return solutions[static_cast<std::size_t>(w - first_w)].ma;
}

MaTable ma_table(int t, const SolveOptions& options) {
  if (t < 1) throw ParameterError("ma_table: t must be at least 1");
  const bool exact = options.arithmetic == Arithmetic::kExact;
  if (exact && t > options.exact_topic_cap) {
    throw ResourceLimit("exact LP limited to t <= " + std::to_string(options.exact_topic_cap) +
                        "; use float arithmetic for larger t");
  }
  if (!exact && t > kFloatTopicCap) throw ResourceLimit("float LP limited to t <= " + std::to_string(kFloatTopicCap));

  MaTable table{t, first_majority_k(t), exact, {}};
  const int count = t - table.first_w + 1;
  table.solutions.resize(static_cast<std::size_t>(count));

  std::optional<SupportTable> support;
  std::optional<FloatSupportTable> float_support;
  if (exact) {
    support.emplace(t);
  } else {
    float_support.emplace(t);
  }

  auto solve_one = [&](int w) {
    return exact ? solve_lp(build_ma_lp(*support, w)) : solve_float(*float_support, w);
  };

  // Each w is independent; results land in their own slot so the table does
  // not depend on scheduling.
  const unsigned threads = std::min<unsigned>(
      static_cast<unsigned>(count),
      options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency()));
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) table.solutions[static_cast<std::size_t>(i)] = solve_one(table.first_w + i);
    return table;
  }
  std::atomic<int> next{0};
  std::vector<std::future<void>> workers;
  for (unsigned i = 0; i < threads; ++i) {
    workers.push_back(std::async(std::launch::async, [&] {
      for (int j = next++; j < count; j = next++) {
        table.solutions[static_cast<std::size_t>(j)] = solve_one(table.first_w + j);
      }
    }));
  }
  for (auto& f : workers) f.get();
  return table;
}

}  // namespace anscombe
