#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace semicomm {

/// SplitMix64: tiny counter-based generator, bit-identical on every platform.
/// All sampling in this project goes through it so that seeded runs reproduce
/// byte-for-byte regardless of compiler or standard library.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound); bound > 0. Modulo bias is irrelevant
  /// here, determinism is what matters.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(unsigned percent) { return below(100) < percent; }
};

/// Order-sensitive key mixer for deriving independent streams from
/// (seed, theorem, size, trial-index)-style tuples.
std::uint64_t mix_keys(std::initializer_list<std::uint64_t> keys);

/// FNV-1a of a label, for inclusion in mix_keys.
std::uint64_t key_of(std::string_view label);

}  // namespace semicomm
