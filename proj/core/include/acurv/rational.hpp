#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace acurv {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q", "p" or "-p/q". Decimal points and exponents are rejected.
// The result is canonicalized. Throws ParseError.
Rational parse_rational(std::string_view text);

// "p/q" with q > 1, or "p" for integers.
std::string to_string(const Rational& value);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Seeded 64-bit Mersenne Twister wrapper. The draw helpers below avoid
// std::uniform_int_distribution so that sequences are identical across
// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  // numerator in [-bound, bound], denominator in [1, max_den].
  Rational rational(long bound = 5, long max_den = 4) {
    const long num = uniform(-bound, bound);
    const long den = uniform(1, max_den);
    return make_rational(num, den);
  }

  Rational nonzero_rational(long bound = 5, long max_den = 4) {
    long num = 0;
    while (num == 0) num = uniform(-bound, bound);
    return make_rational(num, uniform(1, max_den));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace acurv
