#include "maxdeg/random.hpp"

#include <array>

namespace maxdeg {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng draw_stream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t mixed_index = index;
  std::uint64_t state = seed ^ splitmix64(mixed_index);
  std::array<std::uint32_t, 8> words{};
  for (std::size_t i = 0; i < words.size(); i += 2) {
    const std::uint64_t x = splitmix64(state);
    words[i] = static_cast<std::uint32_t>(x);
    words[i + 1] = static_cast<std::uint32_t>(x >> 32);
  }
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

}  // namespace maxdeg
