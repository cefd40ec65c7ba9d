#pragma once

#include <cstdint>

namespace rwre {

// All randomness in the project flows through SplitMix64 ("splitmix64-v1" in
// output provenance).  The mixing function is a pure documented map so any
// language can reproduce the streams bit for bit.
inline constexpr std::uint64_t splitmix64_mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

inline constexpr std::uint64_t kSplitMixGamma = 0x9e3779b97f4a7c15ULL;

// Minimal counter generator: state advances by the golden gamma, output is the
// mixed state.  Equidistributed, 2^64 period, trivially seedable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kSplitMixGamma;
    return splitmix64_mix(state_);
  }

  // Uniform in [0, 1), 53-bit mantissa.
  double next_u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// Derives the initial generator state for (master seed, worker, stream).
// Documented derivation (exactly this, in order):
//   a = mix(master + gamma)
//   b = mix(a ^ (gamma * (worker + 1)))
//   c = mix(b ^ (0xbf58476d1ce4e5b9 * (stream + 1)))
// The returned value seeds a SplitMix64.  Distinct (worker, stream) pairs give
// statistically independent streams.
inline constexpr std::uint64_t seed_stream(std::uint64_t master, std::uint64_t worker,
                                           std::uint64_t stream) {
  std::uint64_t a = splitmix64_mix(master + kSplitMixGamma);
  std::uint64_t b = splitmix64_mix(a ^ (kSplitMixGamma * (worker + 1)));
  return splitmix64_mix(b ^ (0xbf58476d1ce4e5b9ULL * (stream + 1)));
}

inline SplitMix64 make_rng(std::uint64_t master, std::uint64_t worker, std::uint64_t stream) {
  return SplitMix64(seed_stream(master, worker, stream));
}

inline constexpr const char* kRngFamily = "splitmix64-v1";

}  // namespace rwre
