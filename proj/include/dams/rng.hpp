#pragma once

#include <cstdint>
#include <vector>

namespace dams {

/// splitmix64 finalizer: bijective 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic combination of a seed and a stream/index value.
constexpr std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) {
  return mix64(seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

/// Counter-based splitmix64 stream. Streams derived from distinct
/// (master_seed, stream_id) pairs start at scrambled offsets and are
/// independent for simulation purposes; identical seeds reproduce the
/// identical sequence.
class Rng {
 public:
  Rng() = default;
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng stream(std::uint64_t master_seed, std::uint64_t stream_id) {
    return Rng(hash_combine(master_seed, stream_id));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  /// Uniform integer in [0, bound). bound must be >= 1.
  std::uint32_t below(std::uint32_t bound);

  /// Uniform double in [0, 1).
  double unit_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Binomial(n, p) sample by CDF inversion; exact within double precision.
  int binomial(int n, double p);

  /// Uniform sample of `count` distinct integers from [0, upper_bound),
  /// Floyd's subset-sampling algorithm. Order of `out` is unspecified.
  void sample_distinct(int upper_bound, int count, std::vector<int>& out);

  std::uint64_t state() const { return state_; }
  static Rng from_state(std::uint64_t state) { return Rng(state); }

  bool operator==(const Rng&) const = default;

 private:
  std::uint64_t state_ = 0;
};

}  // namespace dams
