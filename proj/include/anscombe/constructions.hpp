#pragma once

// Worst-case voter matrices used to show that the bounds are tight.

#include "anscombe/core.hpp"

namespace anscombe {

enum class ConstructionKind { kLemma1, kTheorem2, kTheorem3, kLemma7, kVlp };

/// t unit rows with a single Y each (on topic i for row i) plus one all-Y row
/// of weight t-1 (omitted for t = 1). Every proposal with more than
/// ceil((t+1)/2) Ys lacks majority support.
VoterMatrix lemma1_matrix(int t);

/// Three topics: YNN, NYN, NNY with weight l each, YYY with weight 3l-1.
VoterMatrix theorem2_matrix(long l);

/// n = 2k+1 voters and every column holding exactly M Ys. The bottom k
/// voters are all-Y (one row of weight k). The remaining (M-k)t Ys go to the
/// top k+1 unit rows column by column, cycling through the rows, so each
/// column gets M-k of them and row counts differ by at most one.
/// Requires k >= 0 and k+1 <= M <= 2k+1.
VoterMatrix theorem3_matrix(int t, long k, long M);

/// Top ceil(n/2) voters Y on the first w - ceil((t+1)/2) topics only,
/// bottom floor(n/2) voters all-Y. Requires ceil((t+1)/2) <= w <= t, n >= 1.
VoterMatrix lemma7_matrix(int t, int w, long n);

/// Symmetric fractional matrix for an l-voter profile: every l-voter vector
/// appears with weight v_l / C(t, l), so total weight is one and every
/// k-proposal gets the same support. Only l with v_l > 0 produce rows.
/// t <= 20 (ResourceLimit otherwise).
FractionalMatrix vlp_matrix(const TypeProfile& profile);

/// (1 - epsilon) v + epsilon e_0. Moving mass to 0-voters lowers the support
/// of every majority proposal, turning the LP's non-strict constraints into
/// strict ones at the cost of at most epsilon in average majority.
/// Requires 0 <= epsilon <= 1.
TypeProfile mix_with_empty_voters(const TypeProfile& profile, const Rational& epsilon);

/// Scales a fractional matrix to integer weights by the least common
/// multiple of the weight denominators. Throws ResourceLimit if the scaled
/// weights do not fit.
struct ScaledMatrix {
  VoterMatrix matrix;
  BigInt scale;
};
ScaledMatrix to_integer_weights(const FractionalMatrix& v);

}  // namespace anscombe
