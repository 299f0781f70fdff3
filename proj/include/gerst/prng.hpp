#pragma once

#include <cstdint>

namespace gerst {

// SplitMix64 (Steele, Lea, Vigna). Chosen as the reproducibility anchor:
// stateless seeding, identical streams on every platform. Every randomized
// check in the project derives its inputs from this generator, so a seed
// in a report replays the exact inputs.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish in [lo, hi] by reduction; the tiny modulo bias is
  // irrelevant here, determinism is the contract.
  std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(next() % span);
  }
};

// Derive an independent stream from a base seed and a stream index.
inline SplitMix64 seeded_stream(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  mix.next();
  return mix;
}

}  // namespace gerst
