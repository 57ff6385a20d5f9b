#pragma once

// Deterministic per-draw random streams. Draw i of a batch seeded with
// `seed` always sees the same generator state, whichever worker runs it.

#include <cstdint>
#include <random>

namespace maxdeg {

using Rng = std::mt19937_64;

// One splitmix64 step; advances `state`.
std::uint64_t splitmix64(std::uint64_t& state);

// Generator for draw `index` under master seed `seed`.
Rng draw_stream(std::uint64_t seed, std::uint64_t index);

}  // namespace maxdeg
