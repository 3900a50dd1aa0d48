#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "recip/vector_algebra.hpp"

namespace recip {

/// Deterministic sampler for identity fuzzing. The engine's output sequence is
/// fixed by the standard, and the uniform mapping below avoids the
/// implementation-defined std distributions, so a seed reproduces the same
/// samples on every platform.
class FuzzRng {
 public:
  /// `stream` separates independent sequences drawn from one seed.
  explicit FuzzRng(std::uint64_t seed, std::uint32_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream};
    engine_.seed(seq);
  }

  /// Uniform on [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// exp of a uniform draw on [log lo, log hi].
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  double sign() { return (engine_() >> 63) ? -1.0 : 1.0; }
  /// Magnitude uniform on [lo, hi] with a random sign.
  double signed_magnitude(double lo, double hi) { return sign() * uniform(lo, hi); }
  /// Uniform integer on [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  /// Uniformly distributed direction.
  Vector3<double> unit_vector() {
    for (;;) {
      Vector3<double> v(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
      const double n = v.norm();
      if (n > 1e-3 && n <= 1.0) return v / n;
    }
  }

  /// Real vector with uniformly distributed direction and norm in [lo, hi].
  Vector3<double> vector(double lo, double hi) { return unit_vector() * uniform(lo, hi); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace recip
