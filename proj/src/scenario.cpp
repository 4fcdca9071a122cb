#include "bgp/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "bgp/rng.hpp"

namespace bgp {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

ConvexBody ball_body(int n_sides, double radius) {
    if (radius <= 0.0) return ConvexBody::point({0.0, 0.0});
    return regular_polygon(n_sides, radius);
}

double builtin_radius(const std::string& name, double r0, double t, double t0,
                      double horizon) {
    double u = (horizon > t0) ? (t - t0) / (horizon - t0) : 0.0;
    if (name == "constant") return r0;
    if (name == "linear") return r0 * (1.0 - 0.5 * u);
    if (name == "cosine") return r0 * (0.75 + 0.25 * std::cos(kTwoPi * u));
    throw std::invalid_argument("unknown radius_fn: " + name);
}

}  // namespace

Window::Window(double x0_, double y0_, double x1_, double y1_)
    : x0(x0_), y0(y0_), x1(x1_), y1(y1_) {
    if (!(x1 > x0) || !(y1 > y0)) {
        throw std::invalid_argument("Window: need x0 < x1 and y0 < y1");
    }
}

NucleationSpec NucleationSpec::constant(double rate, ConvexBody germ, double t0,
                                        double horizon) {
    NucleationSpec s{{t0, horizon}, {rate}, std::move(germ)};
    return s;
}

double NucleationSpec::max_rate() const {
    double m = 0.0;
    for (double r : rates) m = std::max(m, r);
    return m;
}

double NucleationSpec::rate_at(double t) const {
    if (t <= rate_breakpoints.front()) return rates.front();
    auto it = std::lower_bound(rate_breakpoints.begin(), rate_breakpoints.end(), t);
    std::size_t idx = static_cast<std::size_t>(it - rate_breakpoints.begin());
    if (idx == 0) idx = 1;
    if (idx >= rate_breakpoints.size()) idx = rate_breakpoints.size() - 1;
    return rates[idx - 1];
}

void NucleationSpec::validate(double t0, double horizon) const {
    if (rate_breakpoints.size() < 2 || rates.size() + 1 != rate_breakpoints.size()) {
        throw std::invalid_argument("NucleationSpec: breakpoints/rates sizes mismatch");
    }
    for (std::size_t i = 1; i < rate_breakpoints.size(); ++i) {
        if (!(rate_breakpoints[i] > rate_breakpoints[i - 1])) {
            throw std::invalid_argument("NucleationSpec: breakpoints must increase");
        }
    }
    if (std::abs(rate_breakpoints.front() - t0) > 1e-9 ||
        std::abs(rate_breakpoints.back() - horizon) > 1e-9) {
        throw std::invalid_argument("NucleationSpec: breakpoints must cover [t0, horizon]");
    }
    for (double r : rates) {
        if (r < 0.0) throw std::invalid_argument("NucleationSpec: negative intensity");
    }
}

BirthSchedule sample_births(const NucleationSpec& spec, const Window& window,
                            double t0, double horizon, std::uint64_t seed) {
    spec.validate(t0, horizon);
    const double lambda_max = spec.max_rate();
    const double mean = lambda_max * (horizon - t0) * window.area();

    SplitMix64 count_stream(derive_stream(seed, 0));
    const int candidates = sample_poisson(count_stream, mean);

    std::vector<BirthEvent> events;
    events.reserve(static_cast<std::size_t>(candidates));
    for (int i = 0; i < candidates; ++i) {
        SplitMix64 ev(derive_stream(seed, static_cast<std::uint64_t>(i) + 1));
        double t = ev.uniform(t0, horizon);
        double accept = ev.next_double();
        double x = ev.uniform(window.x0, window.x1);
        double y = ev.uniform(window.y0, window.y1);
        if (lambda_max > 0.0 && accept * lambda_max > spec.rate_at(t)) continue;
        events.push_back({t, translate(spec.germ, {x, y})});
    }
    return BirthSchedule(t0, horizon, std::move(events));
}

GrowthProcess sample_growth(GrowthKind kind, const ConvexBody& k, double t0,
                            double horizon, std::uint64_t seed, int pieces) {
    if (!contains_point(k, {0.0, 0.0}, kGeomEps)) {
        throw std::invalid_argument("sample_growth: bound K must contain the origin");
    }
    if (!(horizon > t0)) throw std::invalid_argument("sample_growth: need t0 < horizon");
    if (kind == GrowthKind::kConstant) return GrowthProcess::constant(k, t0, horizon);
    if (pieces < 1) throw std::invalid_argument("sample_growth: pieces must be >= 1");

    SplitMix64 break_stream(derive_stream(seed, 0));
    std::vector<double> breaks{t0};
    for (int j = 1; j < pieces; ++j) breaks.push_back(break_stream.uniform(t0, horizon));
    breaks.push_back(horizon);
    std::sort(breaks.begin(), breaks.end());
    // collapse near-equal breakpoints
    std::vector<double> bp{breaks.front()};
    for (double b : breaks) {
        if (b - bp.back() > 1e-9 * (horizon - t0)) bp.push_back(b);
    }
    if (bp.back() != horizon) bp.back() = horizon;

    std::vector<ConvexBody> bodies;
    bodies.reserve(bp.size() - 1);
    if (kind == GrowthKind::kPiecewiseRandom) {
        for (std::size_t j = 0; j + 1 < bp.size(); ++j) {
            SplitMix64 ps(derive_stream(seed, j + 1));
            if (ps.next_double() < 0.5) {
                bodies.push_back(scale(k, ps.uniform(0.25, 1.0)));
            } else {
                Vec2 u = Direction(ps.uniform(0.0, kTwoPi)).unit();
                double cap = support(k, u);
                double offset = ps.uniform(0.3, 0.9) * std::max(cap, 0.0);
                auto clipped = clip_halfplane(k, u, offset);
                bodies.push_back(clipped ? *clipped : scale(k, 0.5));
            }
        }
    } else {  // shrinking anisotropic: K meets a shrinking axis-aligned box
        const double reach = hausdorff_norm(k) + 1.0;
        double ax = 1.0, ay = 1.0;
        for (std::size_t j = 0; j + 1 < bp.size(); ++j) {
            SplitMix64 ps(derive_stream(seed, j + 1));
            ax = std::max(0.05, ax * ps.uniform(0.6, 1.0));
            ay = std::max(0.05, ay * ps.uniform(0.6, 1.0));
            ConvexBody body = k;
            for (const auto& [nx, ny, lim] :
                 {std::tuple{1.0, 0.0, ax * reach}, std::tuple{-1.0, 0.0, ax * reach},
                  std::tuple{0.0, 1.0, ay * reach}, std::tuple{0.0, -1.0, ay * reach}}) {
                auto clipped = clip_halfplane(body, {nx, ny}, lim);
                if (clipped) body = *clipped;
            }
            bodies.push_back(body);
        }
    }
    return GrowthProcess::piecewise_constant(bp, bodies, k);
}

RealizedScenario realize(const Scenario& scenario) {
    BirthSchedule births = std::visit(
        [&](const auto& cfg) -> BirthSchedule {
            using T = std::decay_t<decltype(cfg)>;
            if constexpr (std::is_same_v<T, PoissonBirthsConfig>) {
                return sample_births(cfg.spec, scenario.window, scenario.t0,
                                     scenario.horizon, scenario.seed);
            } else {
                return BirthSchedule(scenario.t0, scenario.horizon, cfg.events);
            }
        },
        scenario.births);

    GrowthProcess growth = std::visit(
        [&](const auto& cfg) -> GrowthProcess {
            using T = std::decay_t<decltype(cfg)>;
            if constexpr (std::is_same_v<T, PiecewiseGrowthConfig>) {
                return GrowthProcess::piecewise_constant(cfg.breakpoints, cfg.pieces,
                                                         cfg.bound);
            } else if constexpr (std::is_same_v<T, GeneratedGrowthConfig>) {
                return sample_growth(cfg.kind, cfg.bound, scenario.t0, scenario.horizon,
                                     derive_stream(scenario.seed, 0xB10Bu), cfg.pieces);
            } else {
                const double t0 = scenario.t0;
                const double horizon = scenario.horizon;
                if (cfg.r0 <= 0.0) {
                    throw std::invalid_argument("ball_approx: r0 must be > 0");
                }
                std::string fn = cfg.radius_fn;
                int sides = cfg.n_sides;
                double r0 = cfg.r0;
                builtin_radius(fn, r0, t0, t0, horizon);  // validates the name
                auto eval = [fn, r0, t0, horizon, sides](double t) {
                    return ball_body(sides, builtin_radius(fn, r0, t, t0, horizon));
                };
                double lipschitz = (fn == "constant") ? 0.0
                                   : (fn == "linear")
                                       ? 0.5 * r0 / (horizon - t0)
                                       : kTwoPi * 0.25 * r0 / (horizon - t0);
                return GrowthProcess::sampled(eval, t0, horizon, ball_body(sides, r0),
                                              lipschitz);
            }
        },
        scenario.growth);

    return {std::move(births), std::move(growth)};
}

}  // namespace bgp
