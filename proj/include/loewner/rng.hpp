#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace loewner {

/// splitmix64 step; used to derive independent sub-seeds from one base seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Named sub-seed: all randomness in the library flows from one base seed
/// through (tag, index) derivations, so parallel trials stay reproducible.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, std::uint64_t index = 0) {
    std::uint64_t s = base ^ fnv1a(tag);
    splitmix64(s);
    s ^= 0x9e3779b97f4a7c15ULL * (index + 1);
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    return a ^ (b << 1);
}

inline std::mt19937_64 make_rng(std::uint64_t base, std::string_view tag, std::uint64_t index = 0) {
    return std::mt19937_64(derive_seed(base, tag, index));
}

}  // namespace loewner
