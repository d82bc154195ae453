#include "anscombe/constructions.hpp"

#include <limits>

#include "anscombe/combinatorics.hpp"

namespace anscombe {

namespace {

constexpr int kVlpMaxTopics = 20;

std::uint64_t as_weight(long w) { return static_cast<std::uint64_t>(w); }

}  // namespace

VoterMatrix lemma1_matrix(int t) {
  if (t < 1 || t > kMaxTopics) throw ParameterError("lemma1_matrix: t must be in [1, 64]");
  std::vector<VoterRow> rows;
  for (int i = 0; i < t; ++i) rows.push_back({OpinionVector(t, Mask{1} << i), 1});
  if (t > 1) rows.push_back({OpinionVector::all_yes(t), as_weight(t - 1)});
  return {t, std::move(rows)};
}

VoterMatrix theorem2_matrix(long l) {
  if (l < 1) throw ParameterError("theorem2_matrix: l must be at least 1");
  return {3,
          {{OpinionVector::parse("YNN"), as_weight(l)},
           {OpinionVector::parse("NYN"), as_weight(l)},
           {OpinionVector::parse("NNY"), as_weight(l)},
           {OpinionVector::parse("YYY"), as_weight(3 * l - 1)}}};
}

VoterMatrix theorem3_matrix(int t, long k, long M) {
  if (t < 1 || t > kMaxTopics) throw ParameterError("theorem3_matrix: t must be in [1, 64]");
  if (k < 0) throw ParameterError("theorem3_matrix: k must be nonnegative");
  if (M < k + 1 || M > 2 * k + 1) {
    throw ParameterError("theorem3_matrix: M must lie in [k+1, 2k+1]");
  }
  if (k + 1 > (1L << 20)) throw ResourceLimit("theorem3_matrix: k+1 top rows exceed 2^20");

  const long top = k + 1;
  const long per_column = M - k;
  std::vector<Mask> top_rows(static_cast<std::size_t>(top), 0);
  long next = 0;
  for (int column = 0; column < t; ++column) {
    for (long j = 0; j < per_column; ++j) {
      top_rows[static_cast<std::size_t>(next)] |= Mask{1} << column;
      next = (next + 1) % top;
    }
  }

  std::vector<VoterRow> rows;
  rows.reserve(top_rows.size() + 1);
  for (Mask m : top_rows) rows.push_back({OpinionVector(t, m), 1});
  if (k > 0) rows.push_back({OpinionVector::all_yes(t), as_weight(k)});
  VoterMatrix v(t, std::move(rows));

  const auto tally = column_tally(v);
  for (auto y : tally.yes_weight) {
    if (y != static_cast<std::uint64_t>(M)) throw Error("theorem3_matrix: column tally check failed");
  }
  return v;
}

VoterMatrix lemma7_matrix(int t, int w, long n) {
  if (t < 1 || t > kMaxTopics) throw ParameterError("lemma7_matrix: t must be in [1, 64]");
  const int w_min = first_majority_k(t);
  if (w < w_min || w > t) {
    throw ParameterError("lemma7_matrix: w must lie in [ceil((t+1)/2), t]");
  }
  if (n < 1) throw ParameterError("lemma7_matrix: n must be at least 1");
  std::vector<VoterRow> rows;
  rows.push_back({OpinionVector::prefix(t, w - w_min), as_weight((n + 1) / 2)});
  if (n / 2 > 0) rows.push_back({OpinionVector::all_yes(t), as_weight(n / 2)});
  return {t, std::move(rows)};
}

FractionalMatrix vlp_matrix(const TypeProfile& profile) {
  const int t = profile.topics();
  if (t < 1) throw ParameterError("vlp_matrix: profile must cover at least one topic");
  if (t > kVlpMaxTopics) throw ResourceLimit("vlp_matrix emits up to 2^t rows; t <= 20 required");

  const BinomialTable choose(t);
  std::vector<FractionalRow> rows;
  for (Mask m = 0; m < (Mask{1} << t); ++m) {
    const int l = std::popcount(m);
    if (sgn(profile[l]) == 0) continue;
    rows.push_back({OpinionVector(t, m), profile[l] / Rational(choose(t, l))});
  }
  return {t, std::move(rows)};
}

TypeProfile mix_with_empty_voters(const TypeProfile& profile, const Rational& epsilon) {
  if (sgn(epsilon) < 0 || epsilon > 1) throw ParameterError("epsilon must lie in [0, 1]");
  std::vector<Rational> mixed;
  for (const Rational& f : profile.fractions()) mixed.push_back((1 - epsilon) * f);
  mixed[0] += epsilon;
  return TypeProfile(std::move(mixed));
}

ScaledMatrix to_integer_weights(const FractionalMatrix& v) {
  BigInt scale = 1;
  for (const auto& row : v.rows()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), row.weight.get_den_mpz_t());

  std::vector<VoterRow> rows;
  rows.reserve(v.rows().size());
  for (const auto& row : v.rows()) {
    const Rational scaled = row.weight * scale;
    const BigInt& w = scaled.get_num();
    if (!w.fits_ulong_p()) throw ResourceLimit("scaled voter weight does not fit in 64 bits");
    rows.push_back({row.opinions, static_cast<std::uint64_t>(w.get_ui())});
  }
  return {VoterMatrix(v.topics(), std::move(rows)), scale};
}

}  // namespace anscombe
