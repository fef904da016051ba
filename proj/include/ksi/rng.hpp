#pragma once

#include <cstdint>

namespace ksi {

// splitmix64: portable, tiny, well-mixed 64-bit generator. The whole
// project draws randomness through this one stream so that a graph is
// reproducible bit-for-bit from (model, params, seed) in any language.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits of mantissa.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound) by rejection, bias-free.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// Deterministic seed derivation: feed each component through the
// splitmix finalizer so (base, a, b) and (base, b, a) land far apart.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0) {
  SplitMix64 mix(base);
  std::uint64_t s = mix.next_u64();
  SplitMix64 mix_a(s ^ (a + 0x517cc1b727220a95ULL));
  s = mix_a.next_u64();
  SplitMix64 mix_b(s ^ (b + 0x2545f4914f6cdd1dULL));
  return mix_b.next_u64();
}

}  // namespace ksi
