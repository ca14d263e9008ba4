#pragma once

#include <cstdint>
#include <string_view>

namespace tvo {

// Counter-based random numbers (Philox 4x32-10, Salmon et al. 2011).
//
// Every source of randomness in the library is a (key, stream) pair:
//   key    = derive_key(user seed, component label)
//   stream = path / episode / restart index
// Draws within a stream are indexed by a counter, so any worker can produce
// any path's numbers independently. Results are identical for any thread
// count and any scheduling order.

uint64_t fnv1a64(std::string_view s);
uint64_t splitmix64(uint64_t x);
uint64_t derive_key(uint64_t seed, std::string_view label);

// One 128-bit Philox block: counter (4x32) encrypted under key (2x32),
// 10 rounds. Fills out[4].
void philox4x32(const uint32_t counter[4], const uint32_t key[2], uint32_t out[4]);

// Inverse standard normal CDF (Wichura's AS 241, double precision).
double inverse_normal_cdf(double p);

// Sequential view over one stream. next() returns standard normals computed
// by inverse CDF from 53-bit uniforms; two draws per Philox block.
class NormalStream {
public:
    NormalStream(uint64_t key, uint64_t stream);

    double next_uniform();  // strictly inside (0, 1)
    double next();          // standard normal

    void skip(uint64_t draws);

private:
    void refill();

    uint32_t key_[2];
    uint32_t stream_[2];
    uint64_t draw_ = 0;
    uint64_t cached_block_ = ~uint64_t{0};
    double buf_[2] = {0.0, 0.0};
};

}  // namespace tvo
