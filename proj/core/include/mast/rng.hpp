// Deterministic 64-bit random stream (splitmix64). The generator is fully
// specified here, so equal seeds give bit-identical sequences on every
// platform. Streams can be forked: fork(i) derives an independent child
// stream from the current state and the branch index without advancing the
// parent, which keeps recursive and parallel consumers reproducible.
#ifndef MAST_RNG_HPP
#define MAST_RNG_HPP

#include <cstdint>

namespace mast {

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(avalanche(seed ^ kPhi)) {}

  std::uint64_t next_u64() {
    state_ += kPhi;
    return avalanche(state_);
  }

  /// Unbiased uniform draw in [0, bound); bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  bool next_bool() { return (next_u64() & 1u) != 0; }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Independent child stream derived from the current state and an index.
  RngStream fork(std::uint64_t index) const {
    return RngStream(avalanche(state_ + kGamma * (index + 1)));
  }

  /// Stable seed for a task identified by (master, a, b).
  static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                   std::uint64_t b) {
    std::uint64_t h = avalanche(master ^ kPhi);
    h = avalanche(h + kGamma * (a + 1));
    h = avalanche(h + kPhi * (b + 1));
    return h;
  }

 private:
  static constexpr std::uint64_t kPhi = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kGamma = 0xD1B54A32D192ED03ull;

  static std::uint64_t avalanche(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace mast

#endif
