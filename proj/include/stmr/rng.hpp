#pragma once

#include <cstdint>
#include <random>

namespace stmr {

// Stream ids for substreams derived from the run seed. Per-agent noise streams
// use the agent index directly; auxiliary streams live far above any agent count.
inline constexpr std::uint64_t kInitStream = 1ull << 32;
inline constexpr std::uint64_t kCsSpeedStream = (1ull << 32) + 1;

// splitmix64 finalizer; decorrelates seed/stream pairs before feeding mt19937_64.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(mix_seed(seed, stream));
}

}
