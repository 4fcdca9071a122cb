#include "bgp/engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace bgp {

namespace {

double region_scale(const Region& r) {
    double s = 1.0;
    for (const ConvexBody& c : r.components()) {
        s = std::max(s, hausdorff_norm(c));
    }
    return s;
}

void check_engine_inputs(const BirthSchedule& births, const GrowthProcess& growth,
                         const Partition& pi) {
    if (std::abs(births.start_time() - growth.start_time()) > 1e-9) {
        throw std::invalid_argument("birth schedule and growth process start apart");
    }
    if (std::abs(pi.front() - births.start_time()) > 1e-9) {
        throw std::invalid_argument("partition does not start at t0");
    }
    if (pi.back() > growth.end_time() + 1e-9) {
        throw std::invalid_argument("partition endpoint beyond the observation window");
    }
}

Region partition_sum(const BirthSchedule& births, const GrowthProcess& growth,
                     const Partition& pi, bool upper) {
    check_engine_inputs(births, growth, pi);
    const std::vector<double>& times = pi.times();
    const double t0 = times.front();
    const double t = times.back();

    std::map<double, ConvexBody> integral_cache;  // lower limit -> integral to t
    auto integral_from = [&](double from) -> const ConvexBody& {
        auto it = integral_cache.find(from);
        if (it == integral_cache.end()) {
            it = integral_cache.emplace(from, aumann_integral(growth, {from, t})).first;
        }
        return it->second;
    };

    std::vector<ConvexBody> comps;
    for (const BirthEvent& e : births.events()) {
        if (e.time > t) break;  // events sorted by time
        double from;
        if (e.time <= t0) {
            from = t0;  // the shared first term of both sums
        } else {
            auto it = std::lower_bound(times.begin(), times.end(), e.time);
            std::size_t idx = static_cast<std::size_t>(it - times.begin());
            from = upper ? times[idx - 1] : times[idx];
        }
        comps.push_back(minkowski_sum(e.germ, integral_from(from)));
    }
    return Region(std::move(comps));
}

double measure_gap(const Region& lower, const Region& upper, double delta) {
    return region_hausdorff(lower, upper, std::max(delta, 1e-12));
}

}  // namespace

BirthSchedule::BirthSchedule(double t0, double horizon, std::vector<BirthEvent> events)
    : t0_(t0), horizon_(horizon), events_(std::move(events)) {
    if (!(t0 <= horizon)) {
        throw std::invalid_argument("BirthSchedule: t0 must be <= horizon");
    }
    for (const BirthEvent& e : events_) {
        if (e.time < t0_ - 1e-12 || e.time > horizon_ + 1e-12) {
            throw std::invalid_argument("BirthSchedule: event outside [t0, horizon]");
        }
    }
    std::stable_sort(events_.begin(), events_.end(),
                     [](const BirthEvent& a, const BirthEvent& b) { return a.time < b.time; });
}

std::size_t BirthSchedule::count_upto(double t) const {
    std::size_t n = 0;
    for (const BirthEvent& e : events_) {
        if (e.time > t) break;
        ++n;
    }
    return n;
}

Region BirthSchedule::cumulative(double t) const {
    std::vector<ConvexBody> comps;
    for (const BirthEvent& e : events_) {
        if (e.time > t) break;
        comps.push_back(e.germ);
    }
    return Region(std::move(comps));
}

Region BirthSchedule::increment(double after, double upto) const {
    std::vector<ConvexBody> comps;
    for (const BirthEvent& e : events_) {
        if (e.time > upto) break;
        if (e.time > after) comps.push_back(e.germ);
    }
    return Region(std::move(comps));
}

Partition::Partition(std::vector<double> times) : times_(std::move(times)) {
    if (times_.empty()) throw std::invalid_argument("Partition: no times");
    for (std::size_t i = 1; i < times_.size(); ++i) {
        if (!(times_[i] > times_[i - 1])) {
            throw std::invalid_argument("Partition: times must strictly increase");
        }
    }
}

Partition Partition::uniform(double a, double b, int cells) {
    if (cells < 1) throw std::invalid_argument("Partition::uniform: cells must be >= 1");
    if (!(a < b)) throw std::invalid_argument("Partition::uniform: need a < b");
    std::vector<double> ts;
    ts.reserve(static_cast<std::size_t>(cells) + 1);
    for (int k = 0; k <= cells; ++k) {
        ts.push_back(k == cells ? b : a + (b - a) * k / cells);
    }
    return Partition(std::move(ts));
}

Partition Partition::initial(const BirthSchedule& births, const GrowthProcess& growth,
                             double t) {
    const double t0 = births.start_time();
    if (t < t0 - 1e-12) throw std::invalid_argument("Partition::initial: t before t0");
    std::vector<double> ts{t0};
    if (t > t0) ts.push_back(t);
    for (const BirthEvent& e : births.events()) {
        if (e.time > t0 && e.time < t) ts.push_back(e.time);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    if (growth.is_piecewise()) {
        const double min_sep = 1e-12 * (t - t0 + 1.0);
        for (double bp : growth.breakpoints()) {
            if (!(bp > t0 && bp < t)) continue;
            auto it = std::lower_bound(ts.begin(), ts.end(), bp);
            bool near = (it != ts.end() && *it - bp < min_sep) ||
                        (it != ts.begin() && bp - *(it - 1) < min_sep);
            if (!near) ts.insert(it, bp);
        }
    }
    return Partition(std::move(ts));
}

double Partition::mesh() const {
    double m = 0.0;
    for (std::size_t i = 1; i < times_.size(); ++i) {
        m = std::max(m, times_[i] - times_[i - 1]);
    }
    return m;
}

Partition Partition::refined() const {
    std::vector<double> out;
    out.reserve(2 * times_.size());
    for (std::size_t i = 0; i < times_.size(); ++i) {
        out.push_back(times_[i]);
        if (i + 1 < times_.size()) {
            double mid = 0.5 * (times_[i] + times_[i + 1]);
            if (mid > times_[i] && mid < times_[i + 1]) out.push_back(mid);
        }
    }
    return Partition(std::move(out));
}

Partition Partition::refined_trisection() const {
    std::vector<double> out;
    out.reserve(3 * times_.size());
    for (std::size_t i = 0; i < times_.size(); ++i) {
        out.push_back(times_[i]);
        if (i + 1 < times_.size()) {
            double a = times_[i], b = times_[i + 1];
            double p = a + (b - a) / 3.0;
            double q = a + 2.0 * (b - a) / 3.0;
            if (p > a && p < b) out.push_back(p);
            if (q > std::max(a, p) && q < b) out.push_back(q);
        }
    }
    return Partition(std::move(out));
}

bool Partition::contains(double t) const {
    return std::binary_search(times_.begin(), times_.end(), t);
}

Partition refine(const Partition& p) { return p.refined(); }

Region lower_sum(const BirthSchedule& births, const GrowthProcess& growth,
                 const Partition& pi) {
    return partition_sum(births, growth, pi, /*upper=*/false);
}

Region upper_sum(const BirthSchedule& births, const GrowthProcess& growth,
                 const Partition& pi) {
    return partition_sum(births, growth, pi, /*upper=*/true);
}

ThetaResult theta(const BirthSchedule& births, const GrowthProcess& growth, double t,
                  double tol, const ThetaOptions& opts) {
    if (!(tol > 0.0)) throw std::invalid_argument("theta: tolerance must be > 0");
    if (t < growth.start_time() - 1e-12 || t > growth.end_time() + 1e-12) {
        throw std::invalid_argument("theta: time outside the observation window");
    }
    if (opts.max_depth < 0) throw std::invalid_argument("theta: negative depth budget");

    Partition pi = Partition::initial(births, growth, t);
    // The initial partition contains every birth time, so the lower sum does
    // not change under refinement; only the upper sum contracts.
    const Region lower = lower_sum(births, growth, pi);
    const double knorm = hausdorff_norm(growth.bound());

    Certificate best;
    for (int depth = 0; depth <= opts.max_depth; ++depth) {
        Region upper = upper_sum(births, growth, pi);
        double mesh = pi.mesh();
        double bound = mesh * (knorm + 1.0);
        double gap = measure_gap(lower, upper, tol * opts.gap_delta_factor);
        Certificate cert{t, mesh, gap, bound, depth,
                         gap <= tol || bound <= tol, lower.is_empty(),
                         !growth.is_piecewise()};
        if (cert.converged) return {lower, cert};
        best = cert;
        pi = (opts.scheme == RefinementScheme::kDyadic) ? pi.refined()
                                                        : pi.refined_trisection();
    }
    std::ostringstream msg;
    msg << "theta: refinement budget exhausted at depth " << opts.max_depth
        << " (gap " << best.gap << ", tol " << tol << ")";
    throw RefinementBudgetError(msg.str(), best);
}

Region discrete_step(const Region& prev, const ConvexBody& growth_step,
                     const Region& births) {
    if (!contains_point(growth_step, {0.0, 0.0}, kGeomEps)) {
        throw std::invalid_argument("discrete_step: growth body must contain the origin");
    }
    return region_union(dilate(prev, growth_step), births);
}

Trajectory run_discrete(const BirthSchedule& births, const GrowthProcess& growth,
                        const Partition& grid) {
    check_engine_inputs(births, growth, grid);
    const std::vector<double>& times = grid.times();
    Trajectory traj;
    Region state = births.cumulative(times.front());
    traj.snapshots.push_back({times.front(), state});
    for (std::size_t k = 1; k < times.size(); ++k) {
        ConvexBody gk = aumann_integral(growth, {times[k - 1], times[k]});
        Region bk = births.increment(times[k - 1], times[k]);
        state = discrete_step(state, gk, bk);
        traj.snapshots.push_back({times[k], state});
    }
    return traj;
}

bool SuiteReport::all_pass() const {
    for (const SuiteCheck& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

SuiteReport proposition_suite(const BirthSchedule& births, const GrowthProcess& growth,
                              double t, int depth) {
    if (depth < 1) throw std::invalid_argument("proposition_suite: depth must be >= 1");
    SuiteReport rep;

    Partition pi0 = Partition::initial(births, growth, t);
    std::vector<double> probes = pi0.times();
    for (std::size_t i = 0; i + 1 < pi0.times().size(); ++i) {
        probes.push_back(0.5 * (pi0.times()[i] + pi0.times()[i + 1]));
    }
    AssumptionReport assumptions = check_assumptions(growth, probes);
    {
        std::string detail;
        auto fails = assumptions.failures();
        if (!fails.empty()) {
            std::ostringstream os;
            os << fails.front().label << " fails at t=" << fails.front().time;
            detail = os.str();
        }
        rep.checks.push_back({"growth_assumptions", assumptions.all_pass(),
                              static_cast<double>(fails.size()), 0.0, detail});
    }
    if (!assumptions.all_pass()) return rep;  // integrals below would throw

    // dyadic chain of sums
    std::vector<Region> lows, ups;
    std::vector<double> meshes;
    Partition pi = pi0;
    for (int j = 0; j <= depth; ++j) {
        lows.push_back(lower_sum(births, growth, pi));
        ups.push_back(upper_sum(births, growth, pi));
        meshes.push_back(pi.mesh());
        if (j < depth) pi = pi.refined();
    }
    const double knorm = hausdorff_norm(growth.bound());
    const double scale = region_scale(ups.front());
    const double subset_tol = 1e-9 * scale;

    {
        bool ok = true;
        for (std::size_t j = 0; j < lows.size(); ++j) {
            ok = ok && region_subset(lows[j], ups[j], subset_tol);
        }
        rep.checks.push_back({"sum_sandwich", ok, 0.0, subset_tol, ""});
    }
    {
        bool lo_ok = true, up_ok = true;
        for (std::size_t j = 0; j + 1 < lows.size(); ++j) {
            lo_ok = lo_ok && region_subset(lows[j], lows[j + 1], subset_tol);
            up_ok = up_ok && region_subset(ups[j + 1], ups[j], subset_tol);
        }
        rep.checks.push_back({"refinement_monotone_lower", lo_ok, 0.0, subset_tol, ""});
        rep.checks.push_back({"refinement_monotone_upper", up_ok, 0.0, subset_tol, ""});
    }
    {
        bool bound_ok = true, decreasing = true;
        double worst_ratio = 0.0;
        std::vector<double> gaps;
        for (std::size_t j = 0; j < lows.size(); ++j) {
            double bound = meshes[j] * (knorm + 1.0);
            double gap = measure_gap(lows[j], ups[j], bound / 200.0);
            gaps.push_back(gap);
            if (gap > bound) bound_ok = false;
            if (bound > 0.0) worst_ratio = std::max(worst_ratio, gap / bound);
        }
        for (std::size_t j = 0; j + 1 < gaps.size(); ++j) {
            if (gaps[j + 1] > gaps[j] + 1e-12 * scale) decreasing = false;
        }
        rep.checks.push_back({"gap_bound", bound_ok, worst_ratio, 1.0, ""});
        rep.checks.push_back({"gap_decreasing", decreasing, gaps.back(), gaps.front(), ""});
    }
    {
        // earlier-time sums are contained in later-time sums over an extended grid
        bool ok = true;
        const double t0 = births.start_time();
        double s = t0 + 0.5 * (t - t0);
        if (s > t0 && s < t) {
            Partition pis = Partition::initial(births, growth, s);
            std::vector<double> ext = pis.times();
            for (double x : pi0.times()) {
                if (x > s) ext.push_back(x);
            }
            std::sort(ext.begin(), ext.end());
            ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
            Partition pit{std::move(ext)};
            ok = region_subset(lower_sum(births, growth, pis),
                               lower_sum(births, growth, pit), subset_tol) &&
                 region_subset(upper_sum(births, growth, pis),
                               upper_sum(births, growth, pit), subset_tol);
        }
        rep.checks.push_back({"time_monotone_sums", ok, 0.0, subset_tol, ""});
    }
    try {
        ThetaOptions dy;
        ThetaOptions tri;
        tri.scheme = RefinementScheme::kTrisection;
        ThetaResult a = theta(births, growth, t, 1e-4, dy);
        ThetaResult b = theta(births, growth, t, 1e-4, tri);
        double d = region_hausdorff(a.region, b.region, 1e-5);
        rep.checks.push_back({"partition_independence", d <= 2.2e-4, d, 2.2e-4, ""});

        ThetaResult coarse = theta(births, growth, t, 1e-3, dy);
        ThetaResult fine = theta(births, growth, t, 1e-4, dy);
        double dc = region_hausdorff(coarse.region, fine.region, 1e-5);
        rep.checks.push_back({"limit_consistency", dc <= 1.1e-3, dc, 1.1e-3, ""});
    } catch (const RefinementBudgetError& e) {
        rep.checks.push_back({"partition_independence", false, e.best.gap, 2.2e-4,
                              "refinement budget exhausted"});
    }
    {
        bool ok = true;
        if (t > births.start_time()) {
            Trajectory traj = run_discrete(births, growth,
                                           Partition::uniform(births.start_time(), t, 8));
            for (std::size_t k = 0; k + 1 < traj.snapshots.size(); ++k) {
                ok = ok && region_subset(traj.snapshots[k].region,
                                         traj.snapshots[k + 1].region, 1e-6);
            }
            Region prev = Region::empty();
            for (int q = 1; q <= 4; ++q) {
                double tq = births.start_time() + 0.25 * q * (t - births.start_time());
                Region cur = theta(births, growth, tq, 1e-3).region;
                if (q > 1) ok = ok && region_subset(prev, cur, 1e-6);
                prev = cur;
            }
        }
        rep.checks.push_back({"time_monotone_trajectory", ok, 0.0, 1e-6, ""});
    }
    return rep;
}

}  // namespace bgp
