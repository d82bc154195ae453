#include "anscombe/combinatorics.hpp"

#include <algorithm>
#include <string>

namespace anscombe {

namespace {

constexpr int kOracleMaxTopics = 20;

// ceil(a / 2) for any sign of a.
int ceil_half(int a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }

void check_k_range(int t, int k, int l) {
  if (t < 1) throw ParameterError("s_kl: t must be at least 1");
  if (k < first_majority_k(t) || k > t) {
    throw ParameterError("s_kl: k = " + std::to_string(k) + " outside [" +
                         std::to_string(first_majority_k(t)) + ", " + std::to_string(t) + "]");
  }
  if (l < 0 || l > t) throw ParameterError("s_kl: l outside [0, t]");
}

// Sum over x of C(l,x) C(t-l,k-x) from the support threshold up to k.
template <class Binomial>
BigInt support_sum(int t, int k, int l, Binomial&& choose) {
  BigInt sum = 0;
  const int from = std::max(0, ceil_half(k + l - t / 2));
  for (int x = from; x <= k; ++x) {
    if (x > l || k - x > t - l) continue;
    sum += choose(l, x) * choose(t - l, k - x);
  }
  return sum;
}

}  // namespace

BigInt binomial(long n, long k) {
  if (n < 0) throw ParameterError("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= static_cast<unsigned long>(n - k + i);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return result;
}

BigInt s_kl(int t, int k, int l) {
  check_k_range(t, k, l);
  return support_sum(t, k, l, [](int n, int r) { return binomial(n, r); });
}

BigInt s_kl_oracle(int k, const OpinionVector& voter) {
  const int t = voter.topics();
  if (t > kOracleMaxTopics) {
    throw ResourceLimit("s_kl_oracle enumerates C(t,k) proposals; t <= 20 required");
  }
  if (k < 0 || k > t) return 0;
  if (k == 0) return supports(voter, OpinionVector::all_no(t)) ? 1 : 0;

  unsigned long count = 0;
  const Mask limit = Mask{1} << t;
  // Gosper's hack: successive masks with exactly k bits set.
  for (Mask m = full_mask(k); m < limit;) {
    if (supports(voter, OpinionVector(t, m))) ++count;
    const Mask low = m & (~m + 1);
    const Mask ripple = m + low;
    m = (((ripple ^ m) >> 2) / low) | ripple;
  }
  return count;
}

BigInt s_kl_oracle(int t, int k, int l) {
  if (t < 1) throw ParameterError("s_kl_oracle: t must be at least 1");
  if (l < 0 || l > t) throw ParameterError("s_kl_oracle: l outside [0, t]");
  if (t > kOracleMaxTopics) {
    throw ResourceLimit("s_kl_oracle enumerates C(t,k) proposals; t <= 20 required");
  }
  return s_kl_oracle(k, OpinionVector::prefix(t, l));
}

BigInt c_l(int t, int l) {
  if (t < 1) throw ParameterError("c_l: t must be at least 1");
  if (l < 0 || l > t) throw ParameterError("c_l: l outside [0, t]");
  BigInt sum = 0;
  for (int k = (t + 1) / 2; k <= t; ++k) {
    if (2 * k == t) continue;
    sum += s_kl(t, k, l) * (2 * k - t);
  }
  return sum;
}

BigInt c_l_closed_form(int t, int l) {
  if (t < 1) throw ParameterError("c_l: t must be at least 1");
  return binomial(t - 1, t / 2) * l;
}

// ---------------------------------------------------------------------------

BinomialTable::BinomialTable(int max_n) : max_n_(max_n), zero_(0) {
  if (max_n < 0) throw ParameterError("BinomialTable: max_n must be nonnegative");
  rows_.reserve(static_cast<std::size_t>(max_n) + 1);
  rows_.push_back({BigInt(1)});
  for (int n = 1; n <= max_n; ++n) {
    const auto& prev = rows_.back();
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    row.front() = 1;
    row.back() = 1;
    for (int k = 1; k < n; ++k) row[static_cast<std::size_t>(k)] = prev[k - 1] + prev[k];
    rows_.push_back(std::move(row));
  }
}

const BigInt& BinomialTable::operator()(int n, int k) const {
  if (n < 0 || n > max_n_) throw ParameterError("BinomialTable: n outside table");
  if (k < 0 || k > n) return zero_;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

SupportTable::SupportTable(int t) : t_(t), binomials_(t) {
  if (t < 1) throw ParameterError("SupportTable: t must be at least 1");
  for (int k = first_k(); k <= t; ++k) {
    std::vector<BigInt> row;
    row.reserve(static_cast<std::size_t>(t) + 1);
    for (int l = 0; l <= t; ++l) {
      row.push_back(support_sum(t, k, l, [this](int n, int r) -> const BigInt& { return binomials_(n, r); }));
    }
    values_.push_back(std::move(row));
  }
}

const BigInt& SupportTable::operator()(int k, int l) const {
  check_k_range(t_, k, l);
  return values_[static_cast<std::size_t>(k - first_k())][static_cast<std::size_t>(l)];
}

}  // namespace anscombe
