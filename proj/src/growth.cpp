#include "bgp/growth.hpp"

#include <algorithm>
#include <cmath>

namespace bgp {

namespace {

void require_origin(const ConvexBody& value, double time) {
    if (!contains_point(value, {0.0, 0.0}, kGeomEps)) {
        throw AssumptionError("A.3", time,
                              "A.3 violated: growth value at t=" + std::to_string(time) +
                                  " does not contain the origin");
    }
}

void require_bounded(const ConvexBody& value, const ConvexBody& bound, double time) {
    if (!contains_convex(bound, value, kGeomEps)) {
        throw AssumptionError("A.5", time,
                              "A.5 violated: growth value at t=" + std::to_string(time) +
                                  " is not contained in the bound K");
    }
}

}  // namespace

bool AssumptionReport::all_pass() const {
    for (const AssumptionCheck& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

std::vector<AssumptionCheck> AssumptionReport::failures() const {
    std::vector<AssumptionCheck> out;
    for (const AssumptionCheck& c : checks) {
        if (!c.pass) out.push_back(c);
    }
    return out;
}

GrowthProcess GrowthProcess::piecewise_constant(
    std::vector<double> breakpoints, std::vector<ConvexBody> pieces,
    ConvexBody bound, std::optional<ConvexBody> value_at_start) {
    if (breakpoints.size() < 2) {
        throw std::invalid_argument("piecewise_constant: need at least two breakpoints");
    }
    if (pieces.size() + 1 != breakpoints.size()) {
        throw std::invalid_argument(
            "piecewise_constant: pieces must be one fewer than breakpoints");
    }
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i] > breakpoints[i - 1])) {
            throw std::invalid_argument("piecewise_constant: breakpoints must increase");
        }
    }
    GrowthProcess g(std::move(bound), breakpoints.front(), breakpoints.back());
    g.breakpoints_ = std::move(breakpoints);
    g.pieces_ = std::move(pieces);
    g.value_at_start_ = std::move(value_at_start);
    return g;
}

GrowthProcess GrowthProcess::constant(const ConvexBody& k, double t0, double t1) {
    return piecewise_constant({t0, t1}, {k}, k, k);
}

GrowthProcess GrowthProcess::sampled(std::function<ConvexBody(double)> evaluate,
                                     double t0, double t1, ConvexBody bound,
                                     std::optional<double> lipschitz) {
    if (!(t0 < t1)) throw std::invalid_argument("sampled: need t0 < t1");
    if (!evaluate) throw std::invalid_argument("sampled: missing evaluator");
    GrowthProcess g(std::move(bound), t0, t1);
    g.evaluate_ = std::move(evaluate);
    g.lipschitz_ = lipschitz;
    return g;
}

ConvexBody GrowthProcess::value(double t) const {
    if (t < start_ - 1e-12 || t > end_ + 1e-12) {
        throw std::invalid_argument("GrowthProcess::value: time outside domain");
    }
    if (!is_piecewise()) return evaluate_(std::clamp(t, start_, end_));
    if (t <= start_) {
        return value_at_start_ ? *value_at_start_ : pieces_.front();
    }
    // piece j covers (breakpoints[j], breakpoints[j+1]]
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
    std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
    if (idx == 0) idx = 1;
    if (idx >= breakpoints_.size()) idx = breakpoints_.size() - 1;
    return pieces_[idx - 1];
}

ConvexBody aumann_integral(const GrowthProcess& g, const TimeInterval& iv,
                           const QuadratureOptions& opts) {
    if (iv.a < g.start_time() - 1e-12 || iv.b > g.end_time() + 1e-12) {
        throw std::invalid_argument("aumann_integral: interval outside process domain");
    }
    if (iv.length() == 0.0) return ConvexBody::point({0.0, 0.0});

    if (g.is_piecewise()) {
        ConvexBody acc = ConvexBody::point({0.0, 0.0});
        const std::vector<double>& bp = g.breakpoints();
        for (std::size_t j = 0; j + 1 < bp.size(); ++j) {
            double lo = std::max(iv.a, bp[j]);
            double hi = std::min(iv.b, bp[j + 1]);
            double len = hi - lo;
            if (len <= 0.0) continue;
            const ConvexBody& piece = g.pieces()[j];
            require_origin(piece, bp[j + 1]);
            require_bounded(piece, g.bound(), bp[j + 1]);
            acc = minkowski_sum(acc, scale(piece, len));
        }
        return acc;
    }

    // sampled growth: support quadrature on panels anchored to the global
    // window split, so integrals over nested intervals nest as sets
    if (opts.panels < 1) throw std::invalid_argument("aumann_integral: panels must be >= 1");
    if (opts.directions < 3) {
        throw std::invalid_argument("aumann_integral: need at least 3 directions");
    }
    DirectionGrid grid = uniform_directions(opts.directions);
    for (const Direction& u : edge_normals(g.bound())) grid.push_back(u);

    std::vector<double> acc(grid.size(), 0.0);
    const double span = g.end_time() - g.start_time();
    const double step = span / opts.panels;
    const int first = static_cast<int>(std::floor((iv.a - g.start_time()) / step));
    const int last = static_cast<int>(std::ceil((iv.b - g.start_time()) / step));
    for (int k = std::max(0, first); k < std::min(opts.panels, last); ++k) {
        double lo = std::max(iv.a, g.start_time() + k * step);
        double hi = std::min(iv.b, g.start_time() + (k + 1) * step);
        double len = hi - lo;
        if (len <= 1e-15 * span) continue;
        double mid = 0.5 * (lo + hi);
        ConvexBody v = g.value(mid);
        require_origin(v, mid);
        require_bounded(v, g.bound(), mid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            acc[i] += len * support(v, grid[i]);
        }
    }
    std::vector<SupportSample> samples;
    samples.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        samples.push_back({grid[i], acc[i]});
    }
    return from_support_samples(samples);
}

AssumptionReport check_assumptions(const GrowthProcess& g,
                                   const std::vector<double>& sample_times) {
    AssumptionReport report;
    for (double t : sample_times) {
        ConvexBody v = g.value(t);
        report.checks.push_back({"A.3", t, contains_point(v, {0.0, 0.0}, kGeomEps)});
        // A.4 holds structurally: every ConvexBody is convex by construction
        report.checks.push_back({"A.4", t, true});
        report.checks.push_back({"A.5", t, contains_convex(g.bound(), v, kGeomEps)});
    }
    return report;
}

bool integral_monotone_check(const GrowthProcess& g, const TimeInterval& inner,
                             const TimeInterval& outer, double tol) {
    if (inner.a < outer.a || inner.b > outer.b) {
        throw std::invalid_argument("integral_monotone_check: intervals not nested");
    }
    return contains_convex(aumann_integral(g, outer), aumann_integral(g, inner), tol);
}

}  // namespace bgp
