#pragma once

// Shared helpers for the test suites: a deterministic RNG (stable across
// platforms, unlike <random> distributions) and small generators.

#include <complex>
#include <cstdint>
#include <gmpxx.h>

namespace test_support {

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
  }

  std::complex<double> complex_unit_box() { return {uniform(-1, 1), uniform(-1, 1)}; }
};

/// Small random rational with numerator in [-60, 60] and denominator in [1, 60].
inline mpq_class random_rational(SplitMix64& rng) {
  long num = static_cast<long>(rng.uniform_int(-60, 60));
  long den = static_cast<long>(rng.uniform_int(1, 60));
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

/// Nonzero variant.
inline mpq_class random_nonzero_rational(SplitMix64& rng) {
  mpq_class q = random_rational(rng);
  while (q == 0) q = random_rational(rng);
  return q;
}

}  // namespace test_support
