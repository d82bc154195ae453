#pragma once

// Voter matrices, proposals and the support relation between them.
//
// Opinion vectors are bitmasks over at most 64 topics with Y = 1; topic i
// (0-based, leftmost character in the textual form) is bit i. Voter rows
// carry a multiplicity so that large blocks of identical voters cost one row.
// Every quantity defined here depends only on the row multiset.

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "anscombe/error.hpp"
#include "anscombe/rational.hpp"

namespace anscombe {

using Mask = std::uint64_t;

inline constexpr int kMaxTopics = 64;

/// Mask with the lowest `topics` bits set.
constexpr Mask full_mask(int topics) {
  return topics >= 64 ? ~Mask{0} : (Mask{1} << topics) - 1;
}

/// A fixed-length vector of binary opinions.
class OpinionVector {
 public:
  OpinionVector() = default;
  /// Throws ParameterError when topics is outside [1, 64] or bits are set
  /// beyond the topic count.
  OpinionVector(int topics, Mask yes);

  /// Parses a string of 'Y'/'N' characters.
  static OpinionVector parse(std::string_view text);
  static OpinionVector all_yes(int topics) { return {topics, full_mask(topics)}; }
  static OpinionVector all_no(int topics) { return {topics, 0}; }
  /// The first `yes` topics Y, the rest N.
  static OpinionVector prefix(int topics, int yes);

  int topics() const noexcept { return topics_; }
  Mask mask() const noexcept { return yes_; }
  int yes_count() const noexcept { return std::popcount(yes_); }
  bool yes(int topic) const noexcept { return (yes_ >> topic) & 1U; }

  OpinionVector opposite() const noexcept { return {topics_, ~yes_ & full_mask(topics_), Unchecked{}}; }
  /// Toggles the topics set in `flip`.
  OpinionVector flipped(Mask flip) const noexcept {
    return {topics_, (yes_ ^ flip) & full_mask(topics_), Unchecked{}};
  }

  std::string to_string() const;

  friend bool operator==(const OpinionVector&, const OpinionVector&) = default;
  friend auto operator<=>(const OpinionVector&, const OpinionVector&) = default;

 private:
  struct Unchecked {};
  OpinionVector(int topics, Mask yes, Unchecked) noexcept : topics_(topics), yes_(yes) {}

  int topics_ = 0;
  Mask yes_ = 0;
};

using Proposal = OpinionVector;

/// Number of topics on which the two vectors agree. Throws MalformedInput on
/// a length mismatch.
int agreements(const OpinionVector& a, const OpinionVector& b);

/// A voter supports p when it agrees with p on at least ceil(t/2) topics,
/// i.e. the hamming distance is at most floor(t/2).
bool supports(const OpinionVector& voter, const Proposal& p);

/// Number of Ys of p; in the canonical frame this is the number of topics on
/// which p sides with the majority.
inline int majority_decisions(const Proposal& p) { return p.yes_count(); }

template <class Weight>
struct BasicVoterRow {
  OpinionVector opinions;
  Weight weight;

  friend bool operator==(const BasicVoterRow&, const BasicVoterRow&) = default;
};

/// Weighted voter matrix. `Weight` is std::uint64_t for ordinary matrices and
/// Rational for the fractional matrices built from LP profiles.
template <class Weight>
class BasicVoterMatrix {
 public:
  using weight_type = Weight;
  using Row = BasicVoterRow<Weight>;

  /// Validates row lengths (MalformedInput) and positive weights; rejects an
  /// empty row list. Integer matrices additionally require n <= 2^57 so that
  /// n*t fits in 64 bits.
  BasicVoterMatrix(int topics, std::vector<Row> rows);

  int topics() const noexcept { return topics_; }
  std::span<const Row> rows() const noexcept { return rows_; }
  const Weight& total_weight() const noexcept { return total_; }

  /// Columns in `flip` are mirrored (Y <-> N) in every row.
  BasicVoterMatrix flipped(Mask flip) const;
  /// Identical opinion vectors merged, rows sorted by mask.
  BasicVoterMatrix merged() const;
  /// Every weight-w row replaced by w unit rows. Integer matrices only.
  BasicVoterMatrix expanded() const
    requires std::is_integral_v<Weight>;

  friend bool operator==(const BasicVoterMatrix&, const BasicVoterMatrix&) = default;

 private:
  int topics_;
  std::vector<Row> rows_;
  Weight total_;
};

using VoterRow = BasicVoterRow<std::uint64_t>;
using VoterMatrix = BasicVoterMatrix<std::uint64_t>;
using FractionalRow = BasicVoterRow<Rational>;
using FractionalMatrix = BasicVoterMatrix<Rational>;

template <class Weight>
struct ColumnTally {
  std::vector<Weight> yes_weight;
  Weight total;

  /// m_i = yes_weight[i] / n.
  Rational majority(int topic) const;
  /// m_V, the mean of m_i over all topics.
  Rational average_majority() const;
};

template <class Weight>
ColumnTally<Weight> column_tally(const BasicVoterMatrix<Weight>& v);

/// Every column has Y-weight >= N-weight (ties count as Y-majority).
template <class Weight>
bool is_canonical(const BasicVoterMatrix<Weight>& v);

template <class Weight>
struct CanonicalForm {
  BasicVoterMatrix<Weight> matrix;
  /// Columns that were flipped; tie columns are never flipped.
  Mask flip_mask;
};

template <class Weight>
CanonicalForm<Weight> canonicalize(const BasicVoterMatrix<Weight>& v);

template <class Weight>
Weight supporter_weight(const BasicVoterMatrix<Weight>& v, const Proposal& p);

/// At least half of the total weight supports p.
template <class Weight>
bool has_majority_support(const BasicVoterMatrix<Weight>& v, const Proposal& p);

/// Sum over rows of weight * agreements(row, p).
template <class Weight>
Weight matches(const BasicVoterMatrix<Weight>& v, const Proposal& p);

/// R_p = matches / (n t).
template <class Weight>
Rational absolute_representativeness(const BasicVoterMatrix<Weight>& v, const Proposal& p);

/// r_p = R_p / m_V. Requires a canonical matrix (ParameterError otherwise).
template <class Weight>
Rational relative_representativeness(const BasicVoterMatrix<Weight>& v, const Proposal& p);

/// Fractions v'_0..v'_t of l-voters. Entries are nonnegative and sum to one.
class TypeProfile {
 public:
  /// Throws ParameterError on a negative entry, an empty vector or a sum != 1.
  explicit TypeProfile(std::vector<Rational> fractions);

  int topics() const noexcept { return static_cast<int>(fractions_.size()) - 1; }
  const Rational& operator[](int l) const { return fractions_.at(static_cast<std::size_t>(l)); }
  std::span<const Rational> fractions() const noexcept { return fractions_; }

  /// (1/t) * sum_l l * v'_l, the average majority of any matrix with this profile.
  Rational average_majority() const;

  friend bool operator==(const TypeProfile&, const TypeProfile&) = default;

 private:
  std::vector<Rational> fractions_;
};

template <class Weight>
TypeProfile type_profile(const BasicVoterMatrix<Weight>& v);

}  // namespace anscombe
