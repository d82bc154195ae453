#pragma once

// Exhaustive search over all 2^t proposals for the best majority-supported
// one. The feasible set is never empty: for every p, the supporters of p and
// of its opposite together carry at least the full weight, so one of the two
// has majority support.

#include <cstdint>
#include <optional>

#include "anscombe/core.hpp"

namespace anscombe {

enum class Metric { kMajorityDecisions, kMatches };

struct OracleOptions {
  /// Enumeration refuses t above this (ResourceLimit). May be raised to at
  /// most kOracleHardCap; anything higher is a ParameterError.
  int max_topics = 24;
  /// 0 picks std::thread::hardware_concurrency(). Results do not depend on it.
  unsigned threads = 0;
};

inline constexpr int kOracleDefaultCap = 24;
inline constexpr int kOracleHardCap = 30;

struct OracleResult {
  Metric metric;
  Proposal best;
  /// md_V for kMajorityDecisions, the match count for kMatches.
  Rational value;
  Rational supporter_weight;
  /// R of `best`.
  Rational absolute;
  /// r of `best`; empty when the matrix is not canonical.
  std::optional<Rational> relative;
};

/// Largest Y-count of a majority-supported proposal, which is md_V for a
/// canonical matrix. Non-canonical input is accepted and counted literally
/// (lemma7_matrix with odd n is of that kind).
template <class Weight>
int md_of(const BasicVoterMatrix<Weight>& v, const OracleOptions& options = {});

/// md_V together with its witness. Ties go to the smallest bitmask.
template <class Weight>
OracleResult max_majority_decisions(const BasicVoterMatrix<Weight>& v, const OracleOptions& options = {});

/// Majority-supported proposal with the most matches; its `relative` field
/// is r_V and `absolute` is R_V. Canonical input only (ParameterError). Ties go to the larger Y-count, then the
/// smallest bitmask.
template <class Weight>
OracleResult best_representation(const BasicVoterMatrix<Weight>& v, const OracleOptions& options = {});

/// Linear-time proposal with R >= 1/2 - 1/t and majority support.
///
/// Takes the largest k with m_1+...+m_k + (1-m_{k+1})+...+(1-m_t) <= t/2
/// (topics in their given order), forms Y^k N^(t-k) and returns it or its
/// opposite, whichever is supported; if both are, the one with larger R,
/// and the prefix proposal on a tie.
template <class Weight>
Proposal half_proposal(const BasicVoterMatrix<Weight>& v);

/// The implication "m_V >= 3/4 => the all-Y proposal has majority support".
template <class Weight>
bool rule_of_three_fourths_check(const BasicVoterMatrix<Weight>& v);

}  // namespace anscombe
