#include "anscombe/core.hpp"

#include <algorithm>
#include <map>

namespace anscombe {

namespace {

constexpr std::uint64_t kMaxIntegerWeight = std::uint64_t{1} << 57;

void check_lengths(const OpinionVector& a, const OpinionVector& b) {
  if (a.topics() != b.topics()) {
    throw MalformedInput("opinion vectors of length " + std::to_string(a.topics()) + " and " +
                         std::to_string(b.topics()) + " cannot be compared");
  }
}

bool positive(std::uint64_t w) { return w > 0; }
bool positive(const Rational& w) { return sgn(w) > 0; }

}  // namespace

OpinionVector::OpinionVector(int topics, Mask yes) : topics_(topics), yes_(yes) {
  if (topics < 1 || topics > kMaxTopics) {
    throw ParameterError("topic count " + std::to_string(topics) + " outside [1, 64]");
  }
  if ((yes & ~full_mask(topics)) != 0) {
    throw ParameterError("opinion mask has bits beyond topic " + std::to_string(topics));
  }
}

OpinionVector OpinionVector::parse(std::string_view text) {
  if (text.empty()) throw MalformedInput("empty opinion vector");
  if (text.size() > static_cast<std::size_t>(kMaxTopics)) {
    throw MalformedInput("opinion vector has " + std::to_string(text.size()) +
                         " topics; at most 64 are supported");
  }
  Mask yes = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'Y':
        yes |= Mask{1} << i;
        break;
      case 'N':
        break;
      default:
        throw MalformedInput(std::string("unexpected character '") + text[i] + "' in opinion vector");
    }
  }
  return {static_cast<int>(text.size()), yes};
}

OpinionVector OpinionVector::prefix(int topics, int yes) {
  if (yes < 0 || yes > topics) throw ParameterError("prefix length outside [0, t]");
  return {topics, full_mask(yes)};
}

std::string OpinionVector::to_string() const {
  std::string s(static_cast<std::size_t>(topics_), 'N');
  for (int i = 0; i < topics_; ++i) {
    if (yes(i)) s[static_cast<std::size_t>(i)] = 'Y';
  }
  return s;
}

int agreements(const OpinionVector& a, const OpinionVector& b) {
  check_lengths(a, b);
  return a.topics() - std::popcount(a.mask() ^ b.mask());
}

bool supports(const OpinionVector& voter, const Proposal& p) {
  return 2 * agreements(voter, p) >= voter.topics();
}

// ---------------------------------------------------------------------------
// BasicVoterMatrix

template <class Weight>
BasicVoterMatrix<Weight>::BasicVoterMatrix(int topics, std::vector<Row> rows)
    : topics_(topics), rows_(std::move(rows)), total_(0) {
  if (topics < 1 || topics > kMaxTopics) {
    throw ParameterError("topic count " + std::to_string(topics) + " outside [1, 64]");
  }
  if (rows_.empty()) throw MalformedInput("voter matrix has no rows");
  for (const Row& row : rows_) {
    if (row.opinions.topics() != topics) {
      throw MalformedInput("row " + row.opinions.to_string() + " has " +
                           std::to_string(row.opinions.topics()) + " topics, expected " +
                           std::to_string(topics));
    }
    if (!positive(row.weight)) throw MalformedInput("row weights must be positive");
    if constexpr (std::is_integral_v<Weight>) {
      if (row.weight > kMaxIntegerWeight || total_ > kMaxIntegerWeight - row.weight) {
        throw ResourceLimit("total voter weight exceeds 2^57");
      }
    }
    total_ += row.weight;
  }
}

template <class Weight>
BasicVoterMatrix<Weight> BasicVoterMatrix<Weight>::flipped(Mask flip) const {
  std::vector<Row> out;
  out.reserve(rows_.size());
  for (const Row& row : rows_) out.push_back({row.opinions.flipped(flip), row.weight});
  return {topics_, std::move(out)};
}

template <class Weight>
BasicVoterMatrix<Weight> BasicVoterMatrix<Weight>::merged() const {
  std::map<Mask, Weight> combined;
  for (const Row& row : rows_) {
    auto [it, inserted] = combined.try_emplace(row.opinions.mask(), row.weight);
    if (!inserted) it->second += row.weight;
  }
  std::vector<Row> out;
  out.reserve(combined.size());
  for (auto& [mask, weight] : combined) out.push_back({OpinionVector(topics_, mask), weight});
  return {topics_, std::move(out)};
}

template <class Weight>
BasicVoterMatrix<Weight> BasicVoterMatrix<Weight>::expanded() const
  requires std::is_integral_v<Weight>
{
  std::vector<Row> out;
  for (const Row& row : rows_) {
    for (Weight i = 0; i < row.weight; ++i) out.push_back({row.opinions, 1});
  }
  return {topics_, std::move(out)};
}

// ---------------------------------------------------------------------------
// Tallies and canonical form

template <class Weight>
Rational ColumnTally<Weight>::majority(int topic) const {
  return to_rational(yes_weight.at(static_cast<std::size_t>(topic))) / to_rational(total);
}

template <class Weight>
Rational ColumnTally<Weight>::average_majority() const {
  Weight sum = 0;
  for (const Weight& y : yes_weight) sum += y;
  Rational m = to_rational(sum) / (to_rational(total) * static_cast<long>(yes_weight.size()));
  m.canonicalize();
  return m;
}

template <class Weight>
ColumnTally<Weight> column_tally(const BasicVoterMatrix<Weight>& v) {
  ColumnTally<Weight> tally{std::vector<Weight>(static_cast<std::size_t>(v.topics()), Weight(0)),
                            v.total_weight()};
  for (const auto& row : v.rows()) {
    Mask m = row.opinions.mask();
    while (m != 0) {
      tally.yes_weight[static_cast<std::size_t>(std::countr_zero(m))] += row.weight;
      m &= m - 1;
    }
  }
  return tally;
}

template <class Weight>
bool is_canonical(const BasicVoterMatrix<Weight>& v) {
  const auto tally = column_tally(v);
  for (const Weight& y : tally.yes_weight) {
    if (Weight(y + y) < tally.total) return false;
  }
  return true;
}

template <class Weight>
CanonicalForm<Weight> canonicalize(const BasicVoterMatrix<Weight>& v) {
  const auto tally = column_tally(v);
  Mask flip = 0;
  for (int i = 0; i < v.topics(); ++i) {
    const Weight& y = tally.yes_weight[static_cast<std::size_t>(i)];
    if (Weight(y + y) < tally.total) flip |= Mask{1} << i;
  }
  return {flip == 0 ? v : v.flipped(flip), flip};
}

// ---------------------------------------------------------------------------
// Support and representativeness

template <class Weight>
Weight supporter_weight(const BasicVoterMatrix<Weight>& v, const Proposal& p) {
  Weight sum = 0;
  for (const auto& row : v.rows()) {
    if (supports(row.opinions, p)) sum += row.weight;
  }
  return sum;
}

template <class Weight>
bool has_majority_support(const BasicVoterMatrix<Weight>& v, const Proposal& p) {
  const Weight s = supporter_weight(v, p);
  return Weight(s + s) >= v.total_weight();
}

template <class Weight>
Weight matches(const BasicVoterMatrix<Weight>& v, const Proposal& p) {
  Weight sum = 0;
  for (const auto& row : v.rows()) {
    sum += row.weight * static_cast<unsigned long>(agreements(row.opinions, p));
  }
  return sum;
}

template <class Weight>
Rational absolute_representativeness(const BasicVoterMatrix<Weight>& v, const Proposal& p) {
  Rational r = to_rational(matches(v, p)) / (to_rational(v.total_weight()) * v.topics());
  r.canonicalize();
  return r;
}

template <class Weight>
Rational relative_representativeness(const BasicVoterMatrix<Weight>& v, const Proposal& p) {
  if (!is_canonical(v)) {
    throw ParameterError("relative representativeness requires a canonical matrix");
  }
  Rational r = absolute_representativeness(v, p) / column_tally(v).average_majority();
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Type profiles

TypeProfile::TypeProfile(std::vector<Rational> fractions) : fractions_(std::move(fractions)) {
  if (fractions_.empty()) throw ParameterError("type profile needs at least one entry");
  Rational sum = 0;
  for (const Rational& f : fractions_) {
    if (sgn(f) < 0) throw ParameterError("type profile entries must be nonnegative");
    sum += f;
  }
  if (sum != 1) throw ParameterError("type profile entries must sum to 1, got " + exact_string(sum));
}

Rational TypeProfile::average_majority() const {
  Rational sum = 0;
  for (std::size_t l = 0; l < fractions_.size(); ++l) sum += fractions_[l] * static_cast<long>(l);
  if (topics() > 0) sum /= topics();
  sum.canonicalize();
  return sum;
}

template <class Weight>
TypeProfile type_profile(const BasicVoterMatrix<Weight>& v) {
  std::vector<Weight> by_count(static_cast<std::size_t>(v.topics()) + 1, Weight(0));
  for (const auto& row : v.rows()) by_count[static_cast<std::size_t>(row.opinions.yes_count())] += row.weight;
  std::vector<Rational> fractions;
  fractions.reserve(by_count.size());
  for (const Weight& w : by_count) {
    Rational f = to_rational(w) / to_rational(v.total_weight());
    f.canonicalize();
    fractions.push_back(std::move(f));
  }
  return TypeProfile(std::move(fractions));
}

#define ANSCOMBE_INSTANTIATE_CORE(W)                                                   \
  template class BasicVoterMatrix<W>;                                                  \
  template struct ColumnTally<W>;                                                      \
  template ColumnTally<W> column_tally(const BasicVoterMatrix<W>&);                    \
  template bool is_canonical(const BasicVoterMatrix<W>&);                              \
  template CanonicalForm<W> canonicalize(const BasicVoterMatrix<W>&);                  \
  template W supporter_weight(const BasicVoterMatrix<W>&, const Proposal&);            \
  template bool has_majority_support(const BasicVoterMatrix<W>&, const Proposal&);     \
  template W matches(const BasicVoterMatrix<W>&, const Proposal&);                     \
  template Rational absolute_representativeness(const BasicVoterMatrix<W>&, const Proposal&); \
  template Rational relative_representativeness(const BasicVoterMatrix<W>&, const Proposal&); \
  template TypeProfile type_profile(const BasicVoterMatrix<W>&);

ANSCOMBE_INSTANTIATE_CORE(std::uint64_t)
ANSCOMBE_INSTANTIATE_CORE(Rational)

#undef ANSCOMBE_INSTANTIATE_CORE

}  // namespace anscombe
