#include "support.hpp"

namespace anscombe::testing {

VoterMatrix nine_voters() {
  return {7,
          {{OpinionVector::parse("YYYYYYY"), 4},
           {OpinionVector::parse("YYYNNNN"), 1},
           {OpinionVector::parse("NNNYYNN"), 2},
           {OpinionVector::parse("NNNNNYY"), 2}}};
}

Reference brute_force(const VoterMatrix& v) {
  const int t = v.topics();
  std::vector<std::string> voters;
  std::vector<std::uint64_t> weights;
  std::uint64_t n = 0;
  for (const auto& row : v.rows()) {
    voters.push_back(row.opinions.to_string());
    weights.push_back(row.weight);
    n += row.weight;
  }

  std::uint64_t yes_total = 0;
  for (std::size_t r = 0; r < voters.size(); ++r) {
    for (char c : voters[r]) yes_total += c == 'Y' ? weights[r] : 0;
  }

  Reference ref;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << t); ++code) {
    std::string p(static_cast<std::size_t>(t), 'N');
    int ys = 0;
    for (int i = 0; i < t; ++i) {
      if ((code >> i) & 1U) {
        p[static_cast<std::size_t>(i)] = 'Y';
        ++ys;
      }
    }
    std::uint64_t support = 0, matches = 0;
    for (std::size_t r = 0; r < voters.size(); ++r) {
      int agree = 0;
      for (int i = 0; i < t; ++i) agree += voters[r][static_cast<std::size_t>(i)] == p[static_cast<std::size_t>(i)];
      matches += weights[r] * static_cast<std::uint64_t>(agree);
      if (2 * agree >= t) support += weights[r];
    }
    if (2 * support < n) continue;
    ref.md = std::max(ref.md, ys);
    ref.matches = std::max(ref.matches, matches);
  }
  // matches / (n t) divided by yes_total / (n t).
  ref.relative = Rational(static_cast<unsigned long>(ref.matches), static_cast<unsigned long>(yes_total));
  ref.relative.canonicalize();
  return ref;
}

VoterMatrix random_matrix(std::mt19937_64& rng, int max_topics, int max_rows, std::uint64_t max_weight) {
  const int t = std::uniform_int_distribution<int>(1, max_topics)(rng);
  const int rows = std::uniform_int_distribution<int>(1, max_rows)(rng);
  std::uniform_int_distribution<std::uint64_t> mask(0, full_mask(t));
  std::uniform_int_distribution<std::uint64_t> weight(1, max_weight);
  std::vector<VoterRow> out;
  for (int r = 0; r < rows; ++r) out.push_back({OpinionVector(t, mask(rng)), weight(rng)});
  return {t, std::move(out)};
}

}  // namespace anscombe::testing
