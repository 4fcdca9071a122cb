#pragma once

#include <cstdint>

namespace bgp {

/// SplitMix64: a counter-based generator (state advances by a fixed odd
/// constant, output is a bijective scramble of the counter). Fixed algorithm,
/// identical streams on every platform; the basis of all scenario sampling.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform in [0, 1) with 53 random bits.
    double next_double();
    double uniform(double lo, double hi);

private:
    std::uint64_t state_;
};

/// Seed of the index-th substream of a master seed. Streams are decorrelated
/// by scrambling the (master, index) pair, so per-event sampling is
/// reproducible regardless of generation order.
std::uint64_t derive_stream(std::uint64_t master, std::uint64_t index);

/// Poisson sample by inversion (product of uniforms), split into chunks for
/// large means so the exp() term never underflows.
int sample_poisson(SplitMix64& rng, double mean);

}  // namespace bgp
