#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "bgp/engine.hpp"
#include "bgp/growth.hpp"

namespace bgp {

/// Axis-aligned observation window.
struct Window {
    double x0, y0, x1, y1;
    Window(double x0_, double y0_, double x1_, double y1_);
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }
};

/// Poisson nucleation: piecewise-constant temporal intensity (events per
/// unit time per unit window area), uniform spatial law, one germ template
/// translated to each sampled location.
struct NucleationSpec {
    std::vector<double> rate_breakpoints;  // m+1 increasing times covering [t0, T]
    std::vector<double> rates;             // m values, rate on (b_{k}, b_{k+1}]
    ConvexBody germ;

    static NucleationSpec constant(double rate, ConvexBody germ, double t0, double horizon);
    double max_rate() const;
    double rate_at(double t) const;
    void validate(double t0, double horizon) const;
};

/// Sampled by thinning: a Poisson(max_rate * span * area) number of
/// candidates, each drawn and accepted from its own substream
/// (derive_stream(seed, index + 1)); stream 0 draws the candidate count.
/// Deterministic per seed.
BirthSchedule sample_births(const NucleationSpec& spec, const Window& window,
                            double t0, double horizon, std::uint64_t seed);

enum class GrowthKind { kConstant, kPiecewiseRandom, kShrinkingAnisotropic };

/// Random growth process bounded by K (which must contain the origin):
/// either K itself, random scalings/clips of K per piece, or K intersected
/// with a shrinking axis-aligned box (anisotropic steps). The generated
/// process satisfies the growth assumptions by construction.
GrowthProcess sample_growth(GrowthKind kind, const ConvexBody& k, double t0,
                            double horizon, std::uint64_t seed, int pieces = 4);

struct PoissonBirthsConfig {
    NucleationSpec spec;
};
struct ExplicitBirthsConfig {
    std::vector<BirthEvent> events;
};
using BirthsConfig = std::variant<PoissonBirthsConfig, ExplicitBirthsConfig>;

struct PiecewiseGrowthConfig {
    std::vector<double> breakpoints;
    std::vector<ConvexBody> pieces;
    ConvexBody bound = ConvexBody::point({0.0, 0.0});
};
struct GeneratedGrowthConfig {
    GrowthKind kind = GrowthKind::kConstant;
    ConvexBody bound = ConvexBody::point({0.0, 0.0});
    int pieces = 4;
};
/// Left-continuous n-gon ball of time-varying radius; exercises the sampled
/// (quadrature) integration path. radius_fn is one of the named builtins
/// "constant", "linear", "cosine".
struct BallApproxGrowthConfig {
    std::string radius_fn;
    double r0 = 1.0;
    int n_sides = 32;
};
using GrowthConfig =
    std::variant<PiecewiseGrowthConfig, GeneratedGrowthConfig, BallApproxGrowthConfig>;

/// A reproducible experiment: window, time interval, seed, and the birth and
/// growth laws (explicit or generated).
struct Scenario {
    Window window;
    double t0;
    double horizon;
    std::uint64_t seed;
    BirthsConfig births;
    GrowthConfig growth;
};

struct RealizedScenario {
    BirthSchedule births;
    GrowthProcess growth;
};

/// Samples one scenario instance; pure function of the scenario contents.
RealizedScenario realize(const Scenario& scenario);

}  // namespace bgp
