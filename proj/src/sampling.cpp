#include "anscombe/sampling.hpp"

namespace anscombe {

VoterMatrix random_canonical_matrix(std::mt19937_64& rng, const SampleShape& shape) {
  if (shape.min_topics < 1 || shape.max_topics > kMaxTopics || shape.min_topics > shape.max_topics ||
      shape.max_rows < 1 || shape.max_weight < 1) {
    throw ParameterError("random_canonical_matrix: invalid sample shape");
  }
  std::uniform_int_distribution<int> topics_dist(shape.min_topics, shape.max_topics);
  std::uniform_int_distribution<int> rows_dist(1, shape.max_rows);
  std::uniform_int_distribution<std::uint64_t> weight_dist(1, shape.max_weight);
  std::uniform_real_distribution<double> bias_dist(0.2, 0.8);

  const int t = topics_dist(rng);
  const int rows = rows_dist(rng);
  std::bernoulli_distribution yes(bias_dist(rng));

  std::vector<VoterRow> out;
  out.reserve(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    Mask m = 0;
    for (int i = 0; i < t; ++i) {
      if (yes(rng)) m |= Mask{1} << i;
    }
    out.push_back({OpinionVector(t, m), weight_dist(rng)});
  }
  return canonicalize(VoterMatrix(t, std::move(out))).matrix;
}

}  // namespace anscombe
