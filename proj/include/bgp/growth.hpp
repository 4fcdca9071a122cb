#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgp/geometry.hpp"

namespace bgp {

/// A closed time interval [a, b] inside the observation window.
struct TimeInterval {
    double a;
    double b;
    TimeInterval(double a_, double b_) : a(a_), b(b_) {
        if (!(a <= b)) throw std::invalid_argument("TimeInterval: a must be <= b");
    }
    double length() const { return b - a; }
};

/// A growth-process value violates one of the model assumptions
/// (A.3 origin membership, A.4 convexity, A.5 uniform bound).
class AssumptionError : public std::runtime_error {
public:
    AssumptionError(std::string label, double time, const std::string& what)
        : std::runtime_error(what), label_(std::move(label)), time_(time) {}
    const std::string& label() const { return label_; }
    double time() const { return time_; }

private:
    std::string label_;
    double time_;
};

struct AssumptionCheck {
    std::string label;  // "A.3", "A.4", "A.5"
    double time;
    bool pass;
};

struct AssumptionReport {
    std::vector<AssumptionCheck> checks;
    bool all_pass() const;
    std::vector<AssumptionCheck> failures() const;
};

/// Quadrature controls for integrals of sampled (non piecewise-constant)
/// growth. Panels are anchored to a uniform split of the whole observation
/// window so that integrals over nested intervals stay nested.
struct QuadratureOptions {
    int panels = 256;      // across [t0, T]
    int directions = 360;  // uniform support directions, plus K's edge normals
};

/// A left-continuous map from time to a convex body, together with its
/// uniform bound K. Piecewise-constant processes (value on (tau_{j-1}, tau_j]
/// given per piece) support exact integration; sampled processes are
/// integrated by quadrature and flagged approximate.
/// Assumption checks (A.3/A.5) are deferred to use sites so that invalid
/// processes can still be constructed and reported on.
class GrowthProcess {
public:
    static GrowthProcess piecewise_constant(
        std::vector<double> breakpoints, std::vector<ConvexBody> pieces,
        ConvexBody bound, std::optional<ConvexBody> value_at_start = std::nullopt);
    static GrowthProcess constant(const ConvexBody& k, double t0, double t1);
    static GrowthProcess sampled(std::function<ConvexBody(double)> evaluate,
                                 double t0, double t1, ConvexBody bound,
                                 std::optional<double> lipschitz = std::nullopt);

    /// Value at time t; the value at an interior breakpoint is the piece on
    /// the interval ending there (left continuity).
    ConvexBody value(double t) const;
    const ConvexBody& bound() const { return bound_; }
    double start_time() const { return start_; }
    double end_time() const { return end_; }
    bool is_piecewise() const { return !pieces_.empty(); }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<ConvexBody>& pieces() const { return pieces_; }
    std::optional<double> lipschitz() const { return lipschitz_; }

private:
    GrowthProcess(ConvexBody bound, double start, double end)
        : bound_(std::move(bound)), start_(start), end_(end) {}
    ConvexBody bound_;
    double start_;
    double end_;
    std::vector<double> breakpoints_;      // piecewise only
    std::vector<ConvexBody> pieces_;       // piecewise only
    std::optional<ConvexBody> value_at_start_;
    std::function<ConvexBody(double)> evaluate_;  // sampled only
    std::optional<double> lipschitz_;
};

/// The Aumann integral of g over iv as a convex body. Exact for
/// piecewise-constant growth (Minkowski sum of pieces scaled by overlap
/// lengths); support-function quadrature plus halfplane reconstruction for
/// sampled growth. The result always contains the origin and is contained in
/// (b-a)K. Throws AssumptionError when a touched value violates A.3 or A.5,
/// std::invalid_argument when iv leaves the process domain.
ConvexBody aumann_integral(const GrowthProcess& g, const TimeInterval& iv,
                           const QuadratureOptions& opts = {});

/// Per-assumption pass/fail of A.3, A.4, A.5 at each sampled time.
AssumptionReport check_assumptions(const GrowthProcess& g,
                                   const std::vector<double>& sample_times);

/// For nested intervals inner inside outer, checks that the integral over
/// the outer interval contains the integral over the inner one (it must,
/// since the values contain the origin). Throws when the intervals are not
/// nested.
bool integral_monotone_check(const GrowthProcess& g, const TimeInterval& inner,
                             const TimeInterval& outer, double tol = kGeomEps);

}  // namespace bgp
