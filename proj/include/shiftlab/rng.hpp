#pragma once

#include <cmath>
#include <cstdint>

namespace shiftlab {

// Counter-based splittable RNG. Every consumer derives an independent
// stream from (seed, stream_id), so parallel loops can hand one stream to
// each draw and the results do not depend on thread count or iteration
// order.
struct SplitMix64 {
  using result_type = std::uint64_t;
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t s) : state(s) {}

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

  std::uint64_t operator()() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 g(seed ^ (0x6a09e667f3bcc909ull + stream * 0x3c6ef372fe94f82bull));
  g();
  return g();
}

inline SplitMix64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  return SplitMix64(derive_stream(seed, stream));
}

// Uniform in [0,1). 53-bit mantissa.
inline double uniform01(SplitMix64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform_in(SplitMix64& g, double lo, double hi) {
  return lo + (hi - lo) * uniform01(g);
}

// Standard normal via polar Box-Muller. Sequences are pinned by this code,
// not by the standard library's normal_distribution.
inline double normal01(SplitMix64& g) {
  for (;;) {
    double u = 2.0 * uniform01(g) - 1.0;
    double v = 2.0 * uniform01(g) - 1.0;
    double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) {
      return u * std::sqrt(-2.0 * std::log(s) / s);
    }
  }
}

inline int rademacher(SplitMix64& g) { return (g() >> 63) ? 1 : -1; }

}  // namespace shiftlab
