#pragma once

#include <cstdint>
#include <random>

namespace swbeam {

// splitmix64 finalizer; the basis of the seed-splitting scheme.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Derive an independent stream seed from a base seed. Chained derivations
// give every component of a run its own stream from one user-facing seed:
//   derive_seed(derive_seed(base, STREAM), replicate)
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return mix64(base + (stream + 1) * 0x9E3779B97F4A7C15ULL);
}

// Deterministic generator. The engine (mt19937_64) is fully specified by the
// standard; the distribution conversions are hand-rolled below because the
// std distributions are implementation-defined and would break byte-exact
// reproducibility across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1), 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double next_double(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // Uniform index in [0, bound), rejection-sampled to remove modulo bias.
  std::size_t next_index(std::size_t bound) {
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t threshold = (0 - b) % b;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) {
        return static_cast<std::size_t>(r % b);
      }
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace swbeam
