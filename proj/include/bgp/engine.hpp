#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bgp/growth.hpp"
#include "bgp/region.hpp"

namespace bgp {

struct BirthEvent {
    double time;
    ConvexBody germ;
};

/// Timestamped germ bodies on [t0, horizon], sorted by time (ties keep input
/// order). The cumulative union up to t realizes the nucleation state B_t,
/// which is increasing by construction.
class BirthSchedule {
public:
    BirthSchedule(double t0, double horizon, std::vector<BirthEvent> events);
    static BirthSchedule empty(double t0, double horizon) {
        return BirthSchedule(t0, horizon, {});
    }

    double start_time() const { return t0_; }
    double horizon() const { return horizon_; }
    const std::vector<BirthEvent>& events() const { return events_; }
    std::size_t count_upto(double t) const;

    /// Union of all germs born at or before t (empty region before the first
    /// birth).
    Region cumulative(double t) const;
    /// Union of germs with birth time in (after, upto].
    Region increment(double after, double upto) const;

private:
    double t0_;
    double horizon_;
    std::vector<BirthEvent> events_;
};

/// A strictly increasing time grid; a single point represents the degenerate
/// partition of [t, t].
class Partition {
public:
    explicit Partition(std::vector<double> times);
    static Partition uniform(double a, double b, int cells);
    /// Starting grid for the limit construction at time t: {t0, t}, all birth
    /// times up to t, and (for piecewise growth) all growth breakpoints
    /// strictly inside, so that every partition cell meets a single piece.
    static Partition initial(const BirthSchedule& births, const GrowthProcess& growth,
                             double t);

    const std::vector<double>& times() const { return times_; }
    double front() const { return times_.front(); }
    double back() const { return times_.back(); }
    /// Largest gap between consecutive times (0 for a single point).
    double mesh() const;
    /// Dyadic refinement: the midpoint of every cell is inserted.
    Partition refined() const;
    /// Each cell split in three equal parts (used by the independence check).
    Partition refined_trisection() const;
    bool contains(double t) const;

private:
    std::vector<double> times_;
};

/// Dyadic refinement, as a free operation.
Partition refine(const Partition& p);

/// Lower partition sum: the t0 term (births at t0 dilated by the integral
/// over [t0, t]) plus, per cell, the germs born in (t_{i-1}, t_i] dilated by
/// the integral over [t_i, t]. Germs are dilated individually, which keeps
/// every component convex.
Region lower_sum(const BirthSchedule& births, const GrowthProcess& growth,
                 const Partition& pi);

/// Upper partition sum: as lower_sum with the integral starting at t_{i-1}.
Region upper_sum(const BirthSchedule& births, const GrowthProcess& growth,
                 const Partition& pi);

/// Convergence certificate of a limit computation.
struct Certificate {
    double t = 0.0;
    double mesh = 0.0;
    double gap = 0.0;    // measured Hausdorff distance between the sums
    double bound = 0.0;  // a-priori bound mesh * (|K|_h + 1)
    int depth = 0;       // refinement count
    bool converged = false;
    bool empty_region = false;   // no births up to t (state flagged in reports)
    bool approximate = false;    // sampled (quadrature-integrated) growth
};

/// Refinement budget exhausted before reaching the tolerance; carries the
/// best certificate achieved.
class RefinementBudgetError : public std::runtime_error {
public:
    RefinementBudgetError(const std::string& what, Certificate best_)
        : std::runtime_error(what), best(best_) {}
    Certificate best;
};

enum class RefinementScheme { kDyadic, kTrisection };

struct ThetaOptions {
    int max_depth = 20;
    RefinementScheme scheme = RefinementScheme::kDyadic;
    double gap_delta_factor = 0.1;  // gap sampling spacing = tol * factor
};

struct ThetaResult {
    Region region;
    Certificate certificate;
};

/// The evolved state at time t: refines the initial partition until the
/// measured gap between the lower and upper sums, or the a-priori bound
/// mesh * (|K|_h + 1), drops to tol. Returns the lower sum, which under- and
/// over-estimates sandwich within tol.
ThetaResult theta(const BirthSchedule& births, const GrowthProcess& growth,
                  double t, double tol, const ThetaOptions& opts = {});

/// One step of the discrete-time recursion: (prev dilated by the step's
/// growth body) united with the step's births. The growth body must contain
/// the origin.
Region discrete_step(const Region& prev, const ConvexBody& growth_step,
                     const Region& births);

struct TrajectorySnapshot {
    double t;
    Region region;
};

struct Trajectory {
    std::vector<TrajectorySnapshot> snapshots;
};

/// Folds discrete_step along the grid with growth bodies given by per-cell
/// integrals; yields the lower-sum state at every grid time.
Trajectory run_discrete(const BirthSchedule& births, const GrowthProcess& growth,
                        const Partition& grid);

struct SuiteCheck {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double limit = 0.0;
    std::string detail;
};

struct SuiteReport {
    std::vector<SuiteCheck> checks;
    bool all_pass() const;
};

/// Runs every structural property of the construction on one scenario across
/// a dyadic refinement chain of the given depth plus a trisection chain:
/// growth assumptions, sum sandwich, refinement monotonicity, the gap bound
/// and its decay, partition independence, limit consistency, and trajectory
/// monotonicity in time. Failures are report entries, not errors.
SuiteReport proposition_suite(const BirthSchedule& births, const GrowthProcess& growth,
                              double t, int depth);

}  // namespace bgp
