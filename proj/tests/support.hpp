#pragma once

// Shared fixtures and a string-based brute force that does not reuse the
// library's bitmask code.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "anscombe/core.hpp"

namespace anscombe::testing {

/// 4x YYYYYYY, YYYNNNN, 2x NNNYYNN, 2x NNNNNYY.
VoterMatrix nine_voters();

struct Reference {
  int md = 0;                  // most Ys over supported proposals
  std::uint64_t matches = 0;   // most matches over supported proposals
  Rational relative;           // matches / (n * t * m_V)
};

/// Enumerates all 2^t proposals as strings. Requires a canonical matrix.
Reference brute_force(const VoterMatrix& v);

/// Arbitrary (not necessarily canonical) matrix with t in [1, max_topics].
VoterMatrix random_matrix(std::mt19937_64& rng, int max_topics, int max_rows, std::uint64_t max_weight);

}  // namespace anscombe::testing
