#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>

namespace catbreed {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic random stream.
///
/// The engine is std::mt19937_64 (its output sequence is fixed by the
/// standard); uniform and normal variates are derived from raw 64-bit
/// words rather than std:: distributions, so sequences are identical
/// across compilers. Independent streams for Monte Carlo workers come
/// from Rng::stream(master, index).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    engine_.seed(splitmix64(s));
  }

  static Rng stream(std::uint64_t master_seed, std::uint64_t stream_index) {
    std::uint64_t s = master_seed;
    (void)splitmix64(s);
    s ^= (stream_index + 1) * 0xD1B54A32D192ED03ULL;
    return Rng(splitmix64(s));
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; consumes two uniforms per call.
  double normal() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Index draw from unnormalized non-negative weights.
  std::size_t discrete(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) {
      total += w;
    }
    double u = uniform() * total;
    double acc = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
      acc += weights[j];
      if (u < acc) {
        return j;
      }
    }
    return weights.size() - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace catbreed
