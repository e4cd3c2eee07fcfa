// Deterministic random number generation. All stochastic behaviour in the
// library flows through this generator so that runs are bit-reproducible
// across platforms and standard libraries (std:: distributions are
// implementation-defined and must not be used for simulation state).
#ifndef WSNSENSE_RNG_HPP
#define WSNSENSE_RNG_HPP

#include <cmath>
#include <cstdint>

namespace wsnsense {

// SplitMix64 output mix (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

// Splittable seed derivation: seed_i = mix64(master + (i+1)*GOLDEN).
// Pure in (master, index), so extending a campaign never perturbs the
// seeds of runs already executed.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

// Fixed sub-stream tags (arbitrary large constants, disjoint from small
// run indices by construction).
namespace seed_tag {
constexpr std::uint64_t kPlacement = 0x7F4A7C15A0761D65ULL;
constexpr std::uint64_t kSinks = 0x452821E638D01377ULL;
constexpr std::uint64_t kStimuli = 0xBE5466CF34E90C6CULL;
constexpr std::uint64_t kSampler = 0xC0AC29B7C97C50DDULL;
}  // namespace seed_tag

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  // Uniform double in [0, 1), 53 usable mantissa bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform_real(double lo, double hi) {
    return lo + uniform01() * (hi - lo);
  }

  // Uniform integer in the inclusive range [lo, hi] (Lemire bounded draw).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const auto wide = static_cast<unsigned __int128>(next_u64()) * range;
    return lo + static_cast<std::int64_t>(wide >> 64);
  }

  // Poisson draw via Knuth's product method; adequate for the per-tick
  // stimulus counts this simulator deals in.
  long poisson(double mean) {
    if (mean <= 0.0) return 0;
    const double limit = std::exp(-mean);
    long count = 0;
    double product = uniform01();
    while (product > limit) {
      ++count;
      product *= uniform01();
    }
    return count;
  }

  // Standard normal (Box-Muller); used by test data generators.
  double normal01() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace wsnsense

#endif
