#pragma once

#include <cstdint>
#include <limits>

namespace mmw {

// SplitMix64 (Steele, Lea, Flood). Small state and cheap to seed, so every
// agent can own an independent substream per iteration and phase. Satisfies
// UniformRandomBitGenerator and plugs into <random> distributions.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

[[nodiscard]] constexpr std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept {
  SplitMix64 g(a ^ (b * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
  g();
  return g();
}

// Phases that draw random numbers. Values are part of the reproducibility
// contract; do not renumber.
enum class Phase : std::uint64_t {
  Init = 1,
  Individual = 2,
  Acceptance = 3,
  Volitive = 4,
  Velocity = 5,
};

// Independent stream for (master seed, iteration, phase, agent).
[[nodiscard]] constexpr SplitMix64 substream(std::uint64_t seed, std::uint64_t iteration, Phase phase,
                                             std::uint64_t agent) noexcept {
  auto s = mix_seed(seed, iteration);
  s = mix_seed(s, static_cast<std::uint64_t>(phase));
  s = mix_seed(s, agent);
  return SplitMix64(s);
}

// U[0, 1) with 53 random bits. Used instead of std::uniform_real_distribution
// so traces stay identical across standard library implementations.
[[nodiscard]] constexpr double uniform01(SplitMix64& g) noexcept {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

[[nodiscard]] constexpr double uniform(SplitMix64& g, double lo, double hi) noexcept {
  return lo + (hi - lo) * uniform01(g);
}

}  // namespace mmw
