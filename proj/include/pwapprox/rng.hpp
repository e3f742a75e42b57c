#pragma once

#include <cstdint>

namespace pw {

// SplitMix64 finalizer. Pure integer arithmetic, identical on every platform.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Splittable stream: one 64-bit word keyed by (seed, index).
constexpr std::uint64_t keyed_u64(std::uint64_t seed, std::int64_t index) noexcept {
    return splitmix64(splitmix64(seed) ^ (static_cast<std::uint64_t>(index) * 0xD1B54A32D192ED03ULL));
}

// Map a 64-bit word to [0, 1) using the top 53 bits; exact binary arithmetic.
constexpr double u64_to_unit(std::uint64_t v) noexcept {
    return static_cast<double>(v >> 11) * 0x1.0p-53;
}

// Uniform value in [-1, 1) keyed by (seed, index).
constexpr double keyed_symmetric(std::uint64_t seed, std::int64_t index) noexcept {
    return 2.0 * u64_to_unit(keyed_u64(seed, index)) - 1.0;
}

} // namespace pw
