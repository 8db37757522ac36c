#pragma once

#include <cstdint>

namespace bufsim {

// Simulation clock: integer nanoseconds. All timestamp math stays in int64
// so comparisons are exact and runs are reproducible across platforms.
using SimTime = int64_t;

constexpr SimTime kNsPerUs = 1'000;
constexpr SimTime kNsPerMs = 1'000'000;
constexpr SimTime kNsPerSec = 1'000'000'000;

constexpr SimTime usec(int64_t v) { return v * kNsPerUs; }
constexpr SimTime msec(int64_t v) { return v * kNsPerMs; }
constexpr SimTime sec(int64_t v) { return v * kNsPerSec; }

// Serialization delay of `bytes` on a link of `bits_per_sec`, rounded up so a
// link is never modeled faster than it is.
constexpr SimTime serialization_ns(int64_t bytes, int64_t bits_per_sec) {
    // bytes*8e9 fits int64 for bytes < 1.1e9; packets are <= MTU.
    return (bytes * 8 * kNsPerSec + bits_per_sec - 1) / bits_per_sec;
}

}  // namespace bufsim
