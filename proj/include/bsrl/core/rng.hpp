#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace bsrl {

// Deterministic seed derivation: every stochastic component gets a child
// seed computed from the run's root seed and the component's name, so any
// single component can be replayed in isolation.
//
// Scheme: FNV-1a over the component name, mixed with the root seed through
// splitmix64. Stable across platforms (no std:: hashing involved).

constexpr std::uint64_t fnv1a(std::string_view name) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : name) {
        h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
        h *= 1099511628211ULL;
    }
    return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t child_seed(std::uint64_t root, std::string_view component) {
    return splitmix64(root ^ fnv1a(component));
}

inline std::mt19937_64 make_rng(std::uint64_t root, std::string_view component) {
    return std::mt19937_64(child_seed(root, component));
}

}  // namespace bsrl
