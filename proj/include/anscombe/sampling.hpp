#pragma once

#include <random>

#include "anscombe/core.hpp"

namespace anscombe {

struct SampleShape {
  int min_topics = 1;
  int max_topics = 10;
  int max_rows = 9;
  std::uint64_t max_weight = 4;
};

/// Draws a few rows with independent Bernoulli opinions (per-matrix Y
/// probability drawn uniformly from [0.2, 0.8]) and integer weights, then
/// canonicalizes. Few rows keep Anscombe-type profiles common.
VoterMatrix random_canonical_matrix(std::mt19937_64& rng, const SampleShape& shape);

}  // namespace anscombe
