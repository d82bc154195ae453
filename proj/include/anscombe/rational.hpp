#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace anscombe {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational to_rational(std::uint64_t v) { return Rational(static_cast<unsigned long>(v)); }
inline const Rational& to_rational(const Rational& v) { return v; }

/// "num/den" with den > 0, always including the denominator.
std::string exact_string(const Rational& q);

/// Decimal rendering to `digits` significant figures, truncated toward zero
/// (e.g. 0.709880... -> "0.7098"). Zero renders as "0" followed by digits-1 zeros.
std::string significant_figures(const Rational& q, int digits = 4);

/// Same convention for a double; used for real-valued expressions.
std::string significant_figures(double v, int digits = 4);

}  // namespace anscombe
