#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace labbench {

// Deterministic random source. mt19937_64 output is pinned by the standard;
// the uniform/normal transforms are hand-rolled because the std distribution
// objects are implementation-defined and would break byte-level
// reproducibility of seeded runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller (one draw per call, cosine branch).
  double normal() {
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Independent stream for substream `index` of a base seed (splitmix64).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace labbench
