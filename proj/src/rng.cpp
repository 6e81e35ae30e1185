#include "semicomm/rng.hpp"

namespace semicomm {

std::uint64_t mix_keys(std::initializer_list<std::uint64_t> keys) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t k : keys) {
    h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    SplitMix64 s(h);
    h = s.next();
  }
  return h;
}

std::uint64_t key_of(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace semicomm
