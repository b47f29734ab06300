#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace turnlab {

// 64-bit FNV-1a. Also used by the policy feature hasher, so the constants are
// part of the checkpoint-portable behavior and must not change.
std::uint64_t fnv1a64(const void * data, std::size_t len);
std::uint64_t fnv1a64(std::string_view s);

// Derive an independent stream seed from a parent seed and a label/index.
// splitmix64 finalizer; order-sensitive, so mix(a,b) != mix(b,a).
std::uint64_t seed_mix(std::uint64_t a, std::uint64_t b);
std::uint64_t seed_mix(std::uint64_t a, std::uint64_t b, std::uint64_t c);
std::uint64_t seed_mix(std::uint64_t a, std::string_view s);
std::uint64_t seed_mix(std::uint64_t a, std::string_view s, std::uint64_t b);

// Map raw 64 random bits to a double in [0, 1). Hand-rolled so sampled
// trajectories are identical across standard libraries.
inline double u01(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

} // namespace turnlab
