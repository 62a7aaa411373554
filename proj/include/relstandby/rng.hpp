#pragma once

#include <cstdint>

namespace relstandby {

// splitmix64 finalizer; good bit mixing for counter-based substream seeding.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed for substream `stream` of the run keyed by `seed`. Substreams are
/// decorrelated by mixing the stream index through splitmix64 twice.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x123456789ABCDEFull));
}

}  // namespace relstandby
