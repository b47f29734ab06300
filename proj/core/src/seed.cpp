#include "turnlab/seed.hpp"

namespace turnlab {

namespace {

constexpr std::uint64_t FNV_OFFSET = 14695981039346656037ull;
constexpr std::uint64_t FNV_PRIME  = 1099511628211ull;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t fnv1a64(const void * data, std::size_t len) {
    const auto * p = static_cast<const unsigned char *>(data);
    std::uint64_t h = FNV_OFFSET;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= FNV_PRIME;
    }
    return h;
}

std::uint64_t fnv1a64(std::string_view s) { return fnv1a64(s.data(), s.size()); }

std::uint64_t seed_mix(std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(a) ^ b);
}

std::uint64_t seed_mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return seed_mix(seed_mix(a, b), c);
}

std::uint64_t seed_mix(std::uint64_t a, std::string_view s) {
    return seed_mix(a, fnv1a64(s));
}

std::uint64_t seed_mix(std::uint64_t a, std::string_view s, std::uint64_t b) {
    return seed_mix(seed_mix(a, fnv1a64(s)), b);
}

} // namespace turnlab
