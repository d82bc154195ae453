#pragma once

// Exact binomials and the proposal-support counts s_{k,l}.
//
// s_{k,l} is the number of k-proposals supported by a fixed l-voter over t
// topics. It does not depend on which l-voter is chosen, since a topic
// permutation maps any l-voter onto any other and fixes the set of
// k-proposals.

#include <vector>

#include "anscombe/core.hpp"
#include "anscombe/rational.hpp"

namespace anscombe {

/// C(n, k), zero when k < 0 or k > n. Throws ParameterError for n < 0.
BigInt binomial(long n, long k);

/// Lowest k for which the closed form of s_{k,l} holds: ceil((t+1)/2).
constexpr int first_majority_k(int t) { return (t + 2) / 2; }

/// Closed-form s_{k,l} = sum_{x=ceil((k+l-floor(t/2))/2)}^{k} C(l,x) C(t-l,k-x).
/// Defined for t >= 1, ceil((t+1)/2) <= k <= t and 0 <= l <= t; other k throw
/// ParameterError (use s_kl_oracle for those).
BigInt s_kl(int t, int k, int l);

/// Counts k-proposals supported by the l-voter Y^l N^(t-l) by enumerating all
/// C(t,k) of them. Any k and l in [0, t]; t <= 20 (ResourceLimit otherwise).
BigInt s_kl_oracle(int t, int k, int l);

/// Same count for an arbitrary voter vector.
BigInt s_kl_oracle(int k, const OpinionVector& voter);

/// c_l = sum_{k=ceil(t/2)}^{t} (2k - t) s_{k,l}, evaluated term by term.
/// Terms with 2k = t vanish and are skipped, so even t is accepted too.
BigInt c_l(int t, int l);

/// l * C(t-1, floor(t/2)).
BigInt c_l_closed_form(int t, int l);

/// Pascal's triangle up to row `max_n`. Immutable after construction, so
/// concurrent lookups are safe.
class BinomialTable {
 public:
  explicit BinomialTable(int max_n);

  int max_n() const noexcept { return max_n_; }
  /// Zero outside 0 <= k <= n; n must be within [0, max_n].
  const BigInt& operator()(int n, int k) const;

 private:
  int max_n_;
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_;
};

/// s_{k,l} for all k in [ceil((t+1)/2), t] and l in [0, t], computed from a
/// shared binomial table.
class SupportTable {
 public:
  explicit SupportTable(int t);

  int topics() const noexcept { return t_; }
  int first_k() const noexcept { return first_majority_k(t_); }
  const BigInt& operator()(int k, int l) const;
  const BinomialTable& binomials() const noexcept { return binomials_; }

 private:
  int t_;
  BinomialTable binomials_;
  std::vector<std::vector<BigInt>> values_;
};

}  // namespace anscombe
