#include "anscombe/oracle.hpp"

#include <algorithm>
#include <optional>
#include <thread>
#include <vector>

namespace anscombe {

namespace {

template <class Weight>
class Enumerator {
 public:
  Enumerator(const BasicVoterMatrix<Weight>& v, const OracleOptions& options, bool need_canonical)
      : topics_(v.topics()), total_(v.total_weight()) {
    if (options.max_topics > kOracleHardCap) {
      throw ParameterError("oracle topic cap cannot exceed " + std::to_string(kOracleHardCap));
    }
    if (v.topics() > options.max_topics) {
      throw ResourceLimit("exhaustive search over 2^" + std::to_string(v.topics()) +
                          " proposals exceeds the cap of t <= " + std::to_string(options.max_topics));
    }
    if (need_canonical && !is_canonical(v)) {
      throw ParameterError("oracle requires a canonical voter matrix");
    }

    const auto merged = v.merged();
    for (const auto& row : merged.rows()) {
      masks_.push_back(row.opinions.mask());
      weights_.push_back(row.weight);
    }
    if (need_canonical) {
      // gain_ holds 2 y_i - n, nonnegative in canonical form.
      const auto tally = column_tally(v);
      base_matches_ = Weight(0);
      for (const Weight& y : tally.yes_weight) {
        base_matches_ += total_ - y;
        gain_.push_back(Weight(y + y - total_));
      }
    }

    threads_ = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    const std::uint64_t work = (std::uint64_t{1} << topics_) * masks_.size();
    if (work < (std::uint64_t{1} << 18)) threads_ = 1;
  }

  int topics() const { return topics_; }
  const Weight& total() const { return total_; }

  bool supported(Mask p) const {
    Weight sum = 0;
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      if (2 * (topics_ - std::popcount(masks_[i] ^ p)) >= topics_) {
        sum += weights_[i];
        if (Weight(sum + sum) >= total_) return true;
      }
    }
    return false;
  }

  Weight matches(Mask p) const {
    Weight m = base_matches_;
    while (p != 0) {
      m += gain_[static_cast<std::size_t>(std::countr_zero(p))];
      p &= p - 1;
    }
    return m;
  }

  // Runs `scan(lo, hi)` over disjoint ranges of [0, 2^t) and reduces the
  // per-range winners with `better`, which must be a strict total order so
  // the result is independent of the partition.
  template <class Candidate, class Scan, class Better>
  std::optional<Candidate> search(Scan scan, Better better) const {
    const Mask end = Mask{1} << topics_;
    const unsigned parts = threads_;
    std::vector<std::optional<Candidate>> partial(parts);
    if (parts == 1) {
      partial[0] = scan(Mask{0}, end);
    } else {
      std::vector<std::thread> pool;
      const Mask step = (end + parts - 1) / parts;
      for (unsigned i = 0; i < parts; ++i) {
        const Mask lo = std::min(end, step * i);
        const Mask hi = std::min(end, lo + step);
        pool.emplace_back([&, i, lo, hi] { partial[i] = scan(lo, hi); });
      }
      for (auto& th : pool) th.join();
    }
    std::optional<Candidate> best;
    for (auto& c : partial) {
      if (c && (!best || better(*c, *best))) best = std::move(c);
    }
    return best;
  }

 private:
  int topics_;
  Weight total_;
  std::vector<Mask> masks_;
  std::vector<Weight> weights_;
  Weight base_matches_ = Weight(0);
  std::vector<Weight> gain_;
  unsigned threads_ = 1;
};

struct DecisionCandidate {
  Mask mask;
};

bool more_decisions(const DecisionCandidate& a, const DecisionCandidate& b) {
  const int ya = std::popcount(a.mask), yb = std::popcount(b.mask);
  if (ya != yb) return ya > yb;
  return a.mask < b.mask;
}

template <class Weight>
struct MatchCandidate {
  Mask mask;
  Weight matches;
};

template <class Weight>
bool more_matches(const MatchCandidate<Weight>& a, const MatchCandidate<Weight>& b) {
  if (a.matches != b.matches) return a.matches > b.matches;
  const int ya = std::popcount(a.mask), yb = std::popcount(b.mask);
  if (ya != yb) return ya > yb;
  return a.mask < b.mask;
}

template <class Weight>
OracleResult describe(const BasicVoterMatrix<Weight>& v, Metric metric, const Proposal& best, Rational value) {
  return OracleResult{metric,
                      best,
                      std::move(value),
                      to_rational(supporter_weight(v, best)),
                      absolute_representativeness(v, best),
                      is_canonical(v) ? std::optional(relative_representativeness(v, best)) : std::nullopt};
}

}  // namespace

template <class Weight>
OracleResult max_majority_decisions(const BasicVoterMatrix<Weight>& v, const OracleOptions& options) {
  const Enumerator<Weight> e(v, options, false);
  auto best = e.template search<DecisionCandidate>(
      [&e](Mask lo, Mask hi) {
        std::optional<DecisionCandidate> best;
        for (Mask p = lo; p < hi; ++p) {
          const DecisionCandidate c{p};
          if (best && !more_decisions(c, *best)) continue;
          if (e.supported(p)) best = c;
        }
        return best;
      },
      more_decisions);
  // Unreachable for a valid matrix: p or its opposite is always supported.
  if (!best) throw Error("no proposal has majority support");
  const Proposal p(v.topics(), best->mask);
  return describe(v, Metric::kMajorityDecisions, p, Rational(p.yes_count()));
}

template <class Weight>
int md_of(const BasicVoterMatrix<Weight>& v, const OracleOptions& options) {
  return max_majority_decisions(v, options).best.yes_count();
}

template <class Weight>
OracleResult best_representation(const BasicVoterMatrix<Weight>& v, const OracleOptions& options) {
  const Enumerator<Weight> e(v, options, true);
  using Candidate = MatchCandidate<Weight>;
  auto best = e.template search<Candidate>(
      [&e](Mask lo, Mask hi) {
        std::optional<Candidate> best;
        for (Mask p = lo; p < hi; ++p) {
          Candidate c{p, e.matches(p)};
          if (best && !more_matches(c, *best)) continue;
          if (e.supported(p)) best = std::move(c);
        }
        return best;
      },
      more_matches<Weight>);
  if (!best) throw Error("no proposal has majority support");
  return describe(v, Metric::kMatches, Proposal(v.topics(), best->mask), to_rational(best->matches));
}

template <class Weight>
Proposal half_proposal(const BasicVoterMatrix<Weight>& v) {
  if (!is_canonical(v)) throw ParameterError("half_proposal requires a canonical voter matrix");
  const auto tally = column_tally(v);
  const int t = v.topics();

  // Work with weights scaled by n: the condition reads
  // sum_{i<k} y_i + sum_{i>=k} (n - y_i) <= t n / 2.
  const Rational n = to_rational(tally.total);
  const Rational limit = n * t / 2;
  Rational value = 0;
  for (int i = 0; i < t; ++i) value += n - to_rational(tally.yes_weight[static_cast<std::size_t>(i)]);
  int k = 0;
  for (int i = 0; i < t; ++i) {
    // Moving topic i from the N block to the Y block adds 2 y_i - n >= 0.
    const Rational next = value + 2 * to_rational(tally.yes_weight[static_cast<std::size_t>(i)]) - n;
    if (next > limit) break;
    value = next;
    k = i + 1;
  }

  const Proposal p = OpinionVector::prefix(t, k);
  const Proposal q = p.opposite();
  const bool p_ok = has_majority_support(v, p);
  const bool q_ok = has_majority_support(v, q);
  if (p_ok && q_ok) return matches(v, q) > matches(v, p) ? q : p;
  return p_ok ? p : q;
}

template <class Weight>
bool rule_of_three_fourths_check(const BasicVoterMatrix<Weight>& v) {
  if (!is_canonical(v)) throw ParameterError("rule_of_three_fourths_check requires a canonical voter matrix");
  if (column_tally(v).average_majority() < make_rational(3, 4)) return true;
  return has_majority_support(v, OpinionVector::all_yes(v.topics()));
}

#define ANSCOMBE_INSTANTIATE_ORACLE(W)                                                            \
  template int md_of(const BasicVoterMatrix<W>&, const OracleOptions&);                           \
  template OracleResult max_majority_decisions(const BasicVoterMatrix<W>&, const OracleOptions&); \
  template OracleResult best_representation(const BasicVoterMatrix<W>&, const OracleOptions&);    \
  template Proposal half_proposal(const BasicVoterMatrix<W>&);                                    \
  template bool rule_of_three_fourths_check(const BasicVoterMatrix<W>&);

ANSCOMBE_INSTANTIATE_ORACLE(std::uint64_t)
ANSCOMBE_INSTANTIATE_ORACLE(Rational)

#undef ANSCOMBE_INSTANTIATE_ORACLE

}  // namespace anscombe
