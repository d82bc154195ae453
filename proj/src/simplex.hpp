#pragma once

// Dense tableau simplex in exact arithmetic for
//
//   maximize c^T x  subject to  A x <= b,  e^T x = 1,  x >= 0
//
// started from the basis {slacks of A, x_0}. That basis is feasible when
// b >= 0 and column 0 of A is zero, which holds for every ma_t(w) program
// (a 0-voter supports no majority proposal).
//
// Entering variables follow Dantzig's largest-reduced-cost rule until a run
// of degenerate pivots is seen, after which Bland's smallest-index rule is
// used for the rest of the solve; the ratio test breaks ties by smallest
// basic index. Both choices are deterministic.

#include <cstddef>
#include <vector>

#include "anscombe/error.hpp"
#include "anscombe/rational.hpp"

namespace anscombe::detail {

template <class Scalar>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static bool positive(const Rational& v) { return sgn(v) > 0; }
  static bool zero(const Rational& v) { return sgn(v) == 0; }
  // a/b < c/d with b, d > 0.
  static bool ratio_less(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    return a * d < c * b;
  }
  static bool ratio_equal(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    return a * d == c * b;
  }
};

struct SimplexStats {
  std::size_t pivots = 0;
  std::size_t degenerate_pivots = 0;
  bool used_bland = false;
  // Solution taken from a right-hand side shifted by a tiny amount.
  bool shifted = false;
};

template <class Scalar>
class SimplexTableau {
  using Ops = ScalarOps<Scalar>;

 public:
  // a: m rows of n structural coefficients; b: m right-hand sides; c: n costs.
  SimplexTableau(const std::vector<std::vector<Scalar>>& a, const std::vector<Scalar>& b,
                 const std::vector<Scalar>& c)
      : m_(a.size()), n_(c.size()), width_(c.size() + a.size()) {
    if (n_ == 0) throw ParameterError("simplex: no variables");
    const std::size_t rows = m_ + 1;
    tableau_.assign(rows, std::vector<Scalar>(width_, Scalar(0)));
    rhs_.assign(rows, Scalar(0));
    basis_.resize(rows);
    for (std::size_t i = 0; i < m_; ++i) {
      if (a[i].size() != n_) throw ParameterError("simplex: ragged constraint matrix");
      if (!Ops::zero(a[i][0])) throw ParameterError("simplex: x_0 must not appear in inequality rows");
      if (b[i] < Scalar(0)) throw ParameterError("simplex: negative right-hand side");
      for (std::size_t j = 0; j < n_; ++j) tableau_[i][j] = a[i][j];
      tableau_[i][n_ + i] = Scalar(1);
      rhs_[i] = b[i];
      basis_[i] = n_ + i;
    }
    for (std::size_t j = 0; j < n_; ++j) tableau_[m_][j] = Scalar(1);
    rhs_[m_] = Scalar(1);
    basis_[m_] = 0;

    cost_.assign(width_, Scalar(0));
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = c[j];
    // Reduced costs d_j = c_j - c_B^T B^{-1} A_j with B = I on this basis.
    reduced_ = cost_;
    for (std::size_t j = 0; j < width_; ++j) reduced_[j] -= cost_[0] * tableau_[m_][j];
    objective_ = cost_[0];
  }

  SimplexStats solve(std::size_t max_pivots) {
    SimplexStats stats;
    std::size_t degenerate_run = 0;
    bool bland = false;
    while (true) {
      const std::size_t enter = choose_entering(bland);
      if (enter == kNone) break;
      const std::size_t leave = choose_leaving(enter);
      if (leave == kNone) throw Error("simplex: objective unbounded");
      const bool degenerate = Ops::zero(rhs_[leave]);
      pivot(leave, enter);
      ++stats.pivots;
      if (degenerate) {
        ++stats.degenerate_pivots;
        if (++degenerate_run >= kDegenerateRunLimit) bland = true;
      } else {
        degenerate_run = 0;
      }
      if (stats.pivots > max_pivots) throw Error("simplex: pivot limit exceeded");
    }
    stats.used_bland = bland;
    return stats;
  }

  const Scalar& objective() const { return objective_; }

  std::vector<Scalar> structural_solution() const {
    std::vector<Scalar> x(n_, Scalar(0));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < n_) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  static constexpr std::size_t kDegenerateRunLimit = 32;

  std::size_t choose_entering(bool bland) const {
    std::size_t best = kNone;
    for (std::size_t j = 0; j < width_; ++j) {
      if (!Ops::positive(reduced_[j])) continue;
      if (bland) return j;
      if (best == kNone || reduced_[j] > reduced_[best]) best = j;
    }
    return best;
  }

  std::size_t choose_leaving(std::size_t col) const {
    std::size_t best = kNone;
    for (std::size_t i = 0; i < tableau_.size(); ++i) {
      const Scalar& a = tableau_[i][col];
      if (!Ops::positive(a)) continue;
      if (best == kNone) {
        best = i;
        continue;
      }
      const Scalar& ab = tableau_[best][col];
      if (Ops::ratio_less(rhs_[i], a, rhs_[best], ab) ||
          (Ops::ratio_equal(rhs_[i], a, rhs_[best], ab) && basis_[i] < basis_[best])) {
        best = i;
      }
    }
    return best;
  }

  void pivot(std::size_t row, std::size_t col) {
    auto& pr = tableau_[row];
    const Scalar inv = Scalar(1) / pr[col];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j < width_; ++j) {
      if (Ops::zero(pr[j])) continue;
      pr[j] *= inv;
      nonzero.push_back(j);
    }
    rhs_[row] *= inv;
    pr[col] = Scalar(1);

    Scalar tmp(0);
    for (std::size_t i = 0; i < tableau_.size(); ++i) {
      if (i == row) continue;
      auto& r = tableau_[i];
      if (Ops::zero(r[col])) continue;
      const Scalar f = r[col];
      for (std::size_t j : nonzero) {
        tmp = f * pr[j];
        r[j] -= tmp;
      }
      tmp = f * rhs_[row];
      rhs_[i] -= tmp;
      r[col] = Scalar(0);
    }
    if (!Ops::zero(reduced_[col])) {
      const Scalar f = reduced_[col];
      for (std::size_t j : nonzero) {
        tmp = f * pr[j];
        reduced_[j] -= tmp;
      }
      tmp = f * rhs_[row];
      objective_ += tmp;
      reduced_[col] = Scalar(0);
    }
    basis_[row] = col;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<std::vector<Scalar>> tableau_;
  std::vector<Scalar> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Scalar> cost_;
  std::vector<Scalar> reduced_;
  Scalar objective_;
};

}  // namespace anscombe::detail
