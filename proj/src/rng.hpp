#pragma once

#include <cmath>
#include <cstdint>

namespace mw {

// Counter-based deterministic generator: output i = mix64(state + i * gamma)
// with the SplitMix64 finalizer and the golden-ratio gamma.  Chosen over
// <random> engines plus std distributions because those are not guaranteed
// bit-identical across standard library implementations, and scenario output
// must be byte-identical for a fixed seed everywhere.  All variate shaping
// below is hand-rolled from the raw 64-bit stream for the same reason.
class CounterRng {
 public:
  // Independent streams for the same seed: stream is mixed into the base
  // state so per-token generators never overlap.
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(mix(seed ^ mix(stream + 0x632BE59BD9B4E019ULL))) {}

  std::uint64_t next_u64() { return mix(state_ + (++counter_) * 0x9E3779B97F4A7C15ULL); }

  // [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [0, n); n must be > 0.  Modulo bias is irrelevant at these n.
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  std::int64_t range_i64(std::int64_t lo, std::int64_t hi) {  // inclusive ends
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(double p) { return uniform() < p; }

  // Box-Muller, cosine branch only: always consumes exactly two draws, so
  // the stream position stays a pure function of the number of calls.
  double normal() {
    double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  double lognormal(double mu, double sigma) { return std::exp(mu + sigma * normal()); }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
  std::uint64_t counter_ = 0;
};

}  // namespace mw
