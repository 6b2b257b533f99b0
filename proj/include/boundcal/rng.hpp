#ifndef BOUNDCAL_RNG_HPP
#define BOUNDCAL_RNG_HPP

#include <cmath>
#include <cstdint>

namespace boundcal {

// xoshiro256++ seeded through splitmix64. Self-contained so that streams are
// bit-reproducible across compilers and standard libraries.
//
// Call order is part of every generator's contract: uniform01() consumes one
// 64-bit draw, normal() consumes two draws on every odd call (Box-Muller pair,
// second value cached), bounded() consumes one.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) word = splitmix64(x);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in {0, 1, ..., n-1} via the fixed-point multiply reduction.
  std::uint64_t bounded(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Standard normal deviate via the Box-Muller transform.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - uniform01();  // (0,1], keeps log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_[4] = {};
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace boundcal

#endif
