#pragma once

#include <cmath>
#include <cstdint>

namespace bufsim {

// splitmix64 finisher. Also used as the deterministic hash for ECMP and
// stream derivation, so that nothing depends on std::hash (which varies
// across standard libraries).
constexpr uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// xoshiro256** with per-(seed, stream) state derived through splitmix64.
// Identical (seed, stream) pairs give identical draw sequences everywhere;
// separate streams let workload, routing and transport jitter be
// reconfigured independently without perturbing each other.
class RngStream {
public:
    RngStream(uint64_t seed, uint64_t stream) {
        uint64_t x = seed ^ mix64(stream * 0xda942042e4dd58b5ULL + 1);
        for (auto& w : s_) {
            x = mix64(x);
            w = x;
        }
        // xoshiro must not start from the all-zero state
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[3] = 0x2545f4914f6cdd1dULL;
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // [0,1) with 53 random bits
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // unbiased [0,n)
    uint64_t uniform_int(uint64_t n) {
        const uint64_t threshold = -n % n;
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    double exponential(double mean) { return -mean * std::log1p(-uniform()); }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

// Fixed stream ids, one per randomness consumer.
namespace rng_stream {
constexpr uint64_t kWorkloadArrivals = 1;
constexpr uint64_t kWorkloadSizes = 2;
constexpr uint64_t kWorkloadEndpoints = 3;
constexpr uint64_t kIncast = 4;
constexpr uint64_t kFlowPorts = 5;
}  // namespace rng_stream

}  // namespace bufsim
