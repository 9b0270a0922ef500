#pragma once

#include <complex>
#include <cstdint>

#include "padiclab/padic.hpp"

namespace padiclab {

/// Deterministic generator for the verification suites. Hand-rolled so that a
/// seed produces the identical stream on every platform, which the CLI's
/// byte-reproducibility contract relies on.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double uniform(double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
  }

  Complex complex_unit_box() { return {uniform(-1, 1), uniform(-1, 1)}; }

  Rational rational(long max_num = 60, long max_den = 60) {
    Rational q(uniform_int(-max_num, max_num), uniform_int(1, max_den));
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational(long max_num = 60, long max_den = 60) {
    Rational q = rational(max_num, max_den);
    while (q == 0) q = rational(max_num, max_den);
    return q;
  }
};

}  // namespace padiclab
