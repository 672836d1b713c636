#pragma once

#include <cstdint>
#include <random>

namespace topo::detail {

// Uniform double in [0, 1) from the top 53 bits of a 64-bit Mersenne Twister
// draw. Unlike std::uniform_real_distribution this is identical across
// standard library implementations.
inline double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Independent substream `stream` of `seed`.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace topo::detail
