#pragma once

// Revised simplex in long double for
//
//   maximize c^T x  subject to  A x <= b,  sum x = 1,  x >= 0
//
// with column 0 of A zero, started from x_0 = 1. A basis is kept as the set
// S of basic structural columns and the set T of rows whose slack is
// nonbasic (tight). Basic values then follow from the |S| x |S| system
//
//   [1 ... 1 ; A_{T,S}] x_S = [1 ; b_T]
//
// which is refactored from the original coefficients at every pivot, so
// round-off does not accumulate over long degenerate runs. |S| stays small
// for the ma programs (a handful of voter types carry the optimum).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <utility>
#include <span>
#include <vector>

#include "anscombe/error.hpp"
#include "simplex.hpp"

namespace anscombe::detail {

class ReducedSimplex {
 public:
  using Real = long double;
  using Rows = std::span<const std::vector<Real>>;

  static constexpr Real kCostTol = 1e-14L;
  static constexpr Real kPivotTol = 1e-11L;
  static constexpr Real kStepTol = 1e-15L;

  // The rows behind `a` must outlive the solver.
  ReducedSimplex(Rows a, std::vector<Real> b, std::vector<Real> c)
      : a_(a), b_(std::move(b)), c_(std::move(c)), m_(a.size()), n_(c_.size()) {
    if (n_ == 0) throw ParameterError("simplex: no variables");
    if (b_.size() != m_) throw ParameterError("simplex: right-hand side size mismatch");
    for (std::size_t i = 0; i < m_; ++i) {
      if (a_[i].size() != n_) throw ParameterError("simplex: ragged constraint matrix");
      if (a_[i][0] != 0) throw ParameterError("simplex: x_0 must not appear in inequality rows");
      if (b_[i] < 0) throw ParameterError("simplex: negative right-hand side");
    }
    reset();
  }

  SimplexStats solve(std::size_t max_pivots) {
    // Many rows become tight at once (every row has coefficient 1 on x_t), so
    // the plain program stalls in long degenerate runs. Distinct tiny shifts
    // of b separate those vertices; the final basis is then re-evaluated and
    // finished against the true right-hand sides.
    const std::vector<Real> original = b_;
    std::mt19937_64 rng(0x5eed);
    for (Real& bi : b_) bi += kPerturbation * (1 + static_cast<Real>(rng() >> 11) * 0x1p-53L);
    SimplexStats stats;
    iterate(stats, max_pivots);

    // The optimal basis of the shifted program usually stays feasible for the
    // true one, which is then finished from there. When the basis is too ill
    // conditioned for that, the shifted optimum is kept: it violates the true
    // rows by at most the shift and its objective is off by O(shift).
    const std::vector<Real> shifted = std::exchange(b_, original);
    factor();
    if (infeasibility_ <= kFeasTol) {
      iterate(stats, max_pivots);
    } else {
      b_ = shifted;
      factor();
      stats.shifted = true;
    }
    return stats;
  }

  std::vector<Real> solution() const {
    std::vector<Real> x(n_, 0);
    for (std::size_t j = 0; j < structural_.size(); ++j) x[structural_[j]] = std::max<Real>(x_s_(static_cast<Eigen::Index>(j)), 0);
    return x;
  }

 private:
  using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

  struct Entering {
    bool valid = false;
    bool slack = false;
    std::size_t index = 0;  // column, or position in tight_ for a slack
  };
  struct Leaving {
    bool valid = false;
    bool slack = false;
    std::size_t index = 0;  // position in structural_, or row for a slack
    Real step = 0;
  };

  static constexpr Real kPerturbation = 1e-9L;
  static constexpr Real kFeasTol = 1e-12L;

  Real a(std::size_t row, std::size_t col) const { return a_[row][col]; }

  void reset() {
    basic_.assign(n_, false);
    tight_row_.assign(m_, false);
    tight_.clear();
    structural_ = {0};
    basic_[0] = true;
  }

  void iterate(SimplexStats& stats, std::size_t max_pivots) {
    std::size_t degenerate_run = 0;
    bool bland = false;
    while (true) {
      factor();
      const Entering enter = choose_entering(bland);
      if (!enter.valid) break;
      direction(enter);
      const Leaving leave = choose_leaving();
      if (!leave.valid) throw Error("simplex: objective unbounded");
      apply(enter, leave);
      ++stats.pivots;
      if (leave.step <= kStepTol) {
        ++stats.degenerate_pivots;
        if (++degenerate_run >= 32) bland = true;
      } else {
        degenerate_run = 0;
      }
      if (stats.pivots > max_pivots) throw Error("simplex: pivot limit exceeded");
    }
    stats.used_bland = stats.used_bland || bland;
  }

  void factor() {
    const auto size = static_cast<Eigen::Index>(structural_.size());
    Matrix core(size, size);
    Vector rhs(size), cost(size);
    for (Eigen::Index j = 0; j < size; ++j) {
      const std::size_t col = structural_[static_cast<std::size_t>(j)];
      core(0, j) = 1;
      for (std::size_t r = 0; r < tight_.size(); ++r) core(static_cast<Eigen::Index>(r) + 1, j) = a(tight_[r], col);
      cost(j) = c_[col];
    }
    rhs(0) = 1;
    for (std::size_t r = 0; r < tight_.size(); ++r) rhs(static_cast<Eigen::Index>(r) + 1) = b_[tight_[r]];
    lu_.compute(core);
    x_s_ = lu_.solve(rhs);
    duals_ = lu_.transpose().solve(cost);
    infeasibility_ = std::max<Real>(0, -x_s_.minCoeff());
    slack_.assign(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (tight_row_[i]) continue;
      Real used = 0;
      for (std::size_t j = 0; j < structural_.size(); ++j) used += a(i, structural_[j]) * x_s_(static_cast<Eigen::Index>(j));
      infeasibility_ = std::max(infeasibility_, used - b_[i]);
      slack_[i] = std::max<Real>(b_[i] - used, 0);
    }
  }

  Real reduced_cost(std::size_t col) const {
    Real d = c_[col] - duals_(0);
    for (std::size_t r = 0; r < tight_.size(); ++r) d -= duals_(static_cast<Eigen::Index>(r) + 1) * a(tight_[r], col);
    return d;
  }

  // Structural columns are numbered before slacks for Bland's rule.
  Entering choose_entering(bool bland) const {
    Entering best;
    Real best_d = kCostTol;
    auto consider = [&](Entering e, Real d) {
      if (d <= kCostTol) return false;
      if (bland) {
        best = e;
        return true;
      }
      if (!best.valid || d > best_d) {
        best = e;
        best_d = d;
      }
      return false;
    };
    for (std::size_t col = 0; col < n_; ++col) {
      if (basic_[col]) continue;
      if (consider({true, false, col}, reduced_cost(col))) return best;
    }
    // The slack of a tight row has cost 0 and column e_row: d = -y_row.
    std::vector<std::size_t> order(tight_.size());
    for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return tight_[x] < tight_[y]; });
    for (std::size_t r : order) {
      if (consider({true, true, r}, -duals_(static_cast<Eigen::Index>(r) + 1))) return best;
    }
    return best;
  }

  // Rates at which basic variables fall per unit of the entering variable.
  void direction(const Entering& e) {
    const auto size = static_cast<Eigen::Index>(structural_.size());
    Vector column = Vector::Zero(size);
    if (e.slack) {
      column(static_cast<Eigen::Index>(e.index) + 1) = 1;
    } else {
      column(0) = 1;
      for (std::size_t r = 0; r < tight_.size(); ++r) column(static_cast<Eigen::Index>(r) + 1) = a(tight_[r], e.index);
    }
    delta_ = lu_.solve(column);
    slack_rate_.assign(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (tight_row_[i]) continue;
      Real rate = e.slack ? 0 : a(i, e.index);
      for (std::size_t j = 0; j < structural_.size(); ++j) rate -= a(i, structural_[j]) * delta_(static_cast<Eigen::Index>(j));
      slack_rate_[i] = rate;
    }
  }

  // Minimum ratio, ties to the smallest basic index.
  Leaving choose_leaving() const {
    Leaving best;
    std::size_t best_id = 0;
    auto consider = [&](Leaving cand, Real value, Real rate, std::size_t id) {
      if (rate <= kPivotTol) return;
      cand.valid = true;
      cand.step = value / rate;
      if (!best.valid || cand.step < best.step - kStepTol || (cand.step <= best.step + kStepTol && id < best_id)) {
        best = cand;
        best_id = id;
      }
    };
    for (std::size_t j = 0; j < structural_.size(); ++j) {
      consider({true, false, j, 0}, std::max<Real>(x_s_(static_cast<Eigen::Index>(j)), 0),
               delta_(static_cast<Eigen::Index>(j)), structural_[j]);
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (!tight_row_[i]) consider({true, true, i, 0}, slack_[i], slack_rate_[i], n_ + i);
    }
    return best;
  }

  void apply(const Entering& e, const Leaving& l) {
    if (l.slack) {
      tight_.push_back(l.index);
      tight_row_[l.index] = true;
    } else {
      basic_[structural_[l.index]] = false;
      structural_.erase(structural_.begin() + static_cast<std::ptrdiff_t>(l.index));
    }
    if (e.slack) {
      // e.index is a position in tight_ taken before the leaving row was
      // appended, so it is still valid.
      tight_row_[tight_[e.index]] = false;
      tight_.erase(tight_.begin() + static_cast<std::ptrdiff_t>(e.index));
    } else {
      structural_.push_back(e.index);
      basic_[e.index] = true;
    }
  }

  Rows a_;
  std::vector<Real> b_;
  std::vector<Real> c_;
  std::size_t m_;
  std::size_t n_;

  std::vector<std::size_t> structural_;
  std::vector<bool> basic_;
  std::vector<std::size_t> tight_;
  std::vector<bool> tight_row_;

  Eigen::PartialPivLU<Matrix> lu_;
  Vector x_s_;
  Vector duals_;
  Vector delta_;
  std::vector<Real> slack_;
  std::vector<Real> slack_rate_;
  Real infeasibility_ = 0;
};

}  // namespace anscombe::detail
