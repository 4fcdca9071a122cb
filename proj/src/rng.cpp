#include "bgp/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace bgp {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t scramble(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitMix64::next() {
    state_ += kGamma;
    return scramble(state_);
}

double SplitMix64::next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
}

std::uint64_t derive_stream(std::uint64_t master, std::uint64_t index) {
    return scramble(master + kGamma * (index + 1));
}

int sample_poisson(SplitMix64& rng, double mean) {
    if (mean < 0.0) throw std::invalid_argument("sample_poisson: negative mean");
    if (mean == 0.0) return 0;
    int total = 0;
    while (mean > 60.0) {
        total += sample_poisson(rng, 60.0);
        mean -= 60.0;
    }
    const double limit = std::exp(-mean);
    double product = 1.0;
    int k = 0;
    do {
        ++k;
        product *= rng.next_double();
    } while (product > limit);
    return total + k - 1;
}

}  // namespace bgp
