#pragma once

#include <array>
#include <cstdint>

#include "lnr/geometry.hpp"

namespace lnr {

/// Counter-based splitmix64 stream. Substreams derived from (seed, index) are
/// reproducible independently of evaluation order, which keeps Monte Carlo
/// sweeps deterministic under any scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0,1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo,hi).
  double next_double(double lo, double hi) { return lo + (hi - lo) * next_double(); }

 private:
  std::uint64_t state_;
};

namespace detail {
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Stream uniquely determined by (seed, index); hashing keeps distinct
/// substreams from being shifted copies of each other.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(detail::mix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
}

/// Uniform point on the unit sphere via the equal-area inverse transform.
inline UnitVec3 random_unit_vector(SplitMix64& g) {
  const double z = g.next_double(-1.0, 1.0);
  const double phi = g.next_double(-std::numbers::pi, std::numbers::pi);
  const double r = std::sqrt(std::max(1.0 - z * z, 0.0));
  return UnitVec3(r * std::cos(phi), r * std::sin(phi), z);
}

/// Three independent uniform sphere points, rejection-sampled until
/// |e1 . (e2 x e3)| exceeds min_abs_triple.
inline std::array<UnitVec3, 3> random_independent_triple(SplitMix64& g,
                                                         double min_abs_triple = 0.05) {
  while (true) {
    const UnitVec3 e1 = random_unit_vector(g);
    const UnitVec3 e2 = random_unit_vector(g);
    const UnitVec3 e3 = random_unit_vector(g);
    if (std::abs(triple_product(e1, e2, e3)) > min_abs_triple) {
      return {e1, e2, e3};
    }
  }
}

}  // namespace lnr
