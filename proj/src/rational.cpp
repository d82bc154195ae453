#include "anscombe/rational.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace anscombe {

std::string exact_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

// Places a decimal point into the digit string `digits` representing
// value * 10^(sig-1-exponent).
std::string place_point(const std::string& digits, long exponent, bool negative) {
  std::string out = negative ? "-" : "";
  const long sig = static_cast<long>(digits.size());
  if (exponent < 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-exponent - 1), '0');
    out += digits;
  } else if (exponent + 1 >= sig) {
    out += digits;
    out.append(static_cast<std::size_t>(exponent + 1 - sig), '0');
  } else {
    out += digits.substr(0, static_cast<std::size_t>(exponent + 1));
    out += '.';
    out += digits.substr(static_cast<std::size_t>(exponent + 1));
  }
  return out;
}

}  // namespace

std::string significant_figures(const Rational& q, int digits) {
  if (digits < 1) throw std::invalid_argument("significant_figures: digits must be positive");
  if (sgn(q) == 0) return "0." + std::string(static_cast<std::size_t>(digits - 1), '0');

  const bool negative = sgn(q) < 0;
  Rational a = abs(q);

  // Decimal exponent with 10^e <= a < 10^(e+1); the double estimate is
  // corrected exactly.
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  auto pow10 = [](long n) {
    Rational p = 1;
    BigInt ten;
    mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(n < 0 ? -n : n));
    if (n >= 0) p = Rational(ten); else p = Rational(BigInt(1), ten);
    return p;
  };
  while (pow10(e) > a) --e;
  while (pow10(e + 1) <= a) ++e;

  Rational scaled = a * pow10(digits - 1 - e);
  BigInt truncated = scaled.get_num() / scaled.get_den();
  return place_point(truncated.get_str(), e, negative);
}

std::string significant_figures(double v, int digits) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  return significant_figures(Rational(v), digits);
}

}  // namespace anscombe
