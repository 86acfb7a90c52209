#pragma once

#include <cstdint>

namespace mixlab {

/// Deterministic xoshiro256++ stream with splitmix64 seeding.
///
/// Streams form a tree: `substream(i)` derives an independent child stream
/// from the parent's seed key and the index, regardless of how many values
/// the parent has already drawn. Per-sample work keyed by
/// `root.substream(sample_index)` is therefore reproducible under any
/// parallel schedule.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  Rng substream(std::uint64_t index) const;

  std::uint64_t key() const { return key_; }

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n). n must be nonzero.
  std::uint64_t below(std::uint64_t n);

  /// Standard normal via Box-Muller (two u64 draws per value).
  double normal();

  /// Gamma(alpha, 1), Marsaglia-Tsang. alpha > 0.
  double gamma(double alpha);

  /// Beta(a, b) via two gamma draws. a, b > 0.
  double beta(double a, double b);

 private:
  std::uint64_t key_ = 0;
  std::uint64_t s_[4] = {};
};

}  // namespace mixlab
