#pragma once

#include <cstdint>
#include <limits>

// Deterministic random streams. Every stochastic operation takes an explicit
// stream, so a result is a pure function of (seed, stream id).
//
// Streams are splitmix64 sequences: cheap enough to construct one (or four)
// per trial, which keeps trial trajectories independent of how a batch is
// partitioned across workers. Substream rule: stream k of master seed s
// starts from state splitmix64_mix(s + k * 0x9E3779B97F4A7C15).

namespace crowdgame {

inline std::uint64_t splitmix64_mix(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream() = default;
  explicit RandomStream(std::uint64_t state) : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return splitmix64_mix(state_);
  }

 private:
  std::uint64_t state_ = 0;
};

inline RandomStream make_stream(std::uint64_t seed, std::uint64_t stream = 0) {
  return RandomStream(splitmix64_mix(seed + stream * 0x9E3779B97F4A7C15ULL));
}

// Uniform draw on [0, 1) with a full 53-bit mantissa; bit-stable across
// platforms, unlike std::uniform_real_distribution.
inline double uniform01(RandomStream& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline bool fair_coin(RandomStream& gen) { return (gen() & 1ULL) != 0; }

}  // namespace crowdgame
