#include "bgp/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bgp {

namespace {

bool body_less(const ConvexBody& a, const ConvexBody& b) {
    const auto& va = a.vertices();
    const auto& vb = b.vertices();
    const std::size_t n = std::min(va.size(), vb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (va[i].x != vb[i].x) return va[i].x < vb[i].x;
        if (va[i].y != vb[i].y) return va[i].y < vb[i].y;
    }
    return va.size() < vb.size();
}

std::vector<ConvexBody> prune(std::vector<ConvexBody> comps, double tol) {
    std::vector<bool> dead(comps.size(), false);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (dead[i]) continue;
        for (std::size_t j = 0; j < comps.size(); ++j) {
            if (i == j || dead[j] || dead[i]) continue;
            if (contains_convex(comps[j], comps[i], tol)) {
                // mutual containment (equal bodies): keep the lower index
                if (contains_convex(comps[i], comps[j], tol) && i < j) continue;
                dead[i] = true;
            }
        }
    }
    std::vector<ConvexBody> out;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (!dead[i]) out.push_back(std::move(comps[i]));
    }
    std::sort(out.begin(), out.end(), body_less);
    return out;
}

// max over vertices of u of dist(., single convex target); exact because the
// point-to-convex-set distance is convex.
double directed_convex(const ConvexBody& u, const ConvexBody& target) {
    double worst = 0.0;
    for (const Vec2& v : u.vertices()) {
        worst = std::max(worst, point_distance(v, target));
    }
    return worst;
}

double component_sup_sampled(const ConvexBody& comp, const Region& target,
                             double delta) {
    double worst = 0.0;
    const std::vector<Vec2>& v = comp.vertices();
    for (const Vec2& p : v) worst = std::max(worst, distance_to_region(p, target));
    worst = std::max(worst, distance_to_region(comp.vertex_centroid(), target));
    std::size_t edges = v.size() == 1 ? 0 : (v.size() == 2 ? 1 : v.size());
    for (std::size_t i = 0; i < edges; ++i) {
        Vec2 s = v[i], e = v[(i + 1) % v.size()];
        double len = norm(e - s);
        int steps = std::max(1, static_cast<int>(std::ceil(len / delta)));
        for (int k = 1; k < steps; ++k) {
            Vec2 p = s + (static_cast<double>(k) / steps) * (e - s);
            worst = std::max(worst, distance_to_region(p, target));
        }
    }
    return worst;
}

}  // namespace

Region::Region(std::vector<ConvexBody> components, double tol)
    : components_(prune(std::move(components), tol)) {}

Region Region::single(ConvexBody c) {
    Region r;
    r.components_.push_back(std::move(c));
    return r;
}

Region region_union(const Region& a, const Region& b) {
    std::vector<ConvexBody> comps = a.components();
    comps.insert(comps.end(), b.components().begin(), b.components().end());
    return Region(std::move(comps));
}

Region dilate(const Region& r, const ConvexBody& g) {
    std::vector<ConvexBody> comps;
    comps.reserve(r.size());
    for (const ConvexBody& c : r.components()) comps.push_back(minkowski_sum(c, g));
    return Region(std::move(comps));
}

double distance_to_region(Vec2 p, const Region& r) {
    if (r.is_empty()) return std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    for (const ConvexBody& c : r.components()) {
        best = std::min(best, point_distance(p, c));
        if (best == 0.0) break;
    }
    return best;
}

bool region_contains_point(const Region& r, Vec2 p, double tol) {
    return distance_to_region(p, r) <= tol;
}

double directed_hausdorff(const Region& a, const Region& b, double delta) {
    if (delta <= 0.0) throw std::invalid_argument("directed_hausdorff: delta must be > 0");
    if (a.is_empty()) return 0.0;
    if (b.is_empty()) return std::numeric_limits<double>::infinity();

    double worst = 0.0;
    for (const ConvexBody& comp : a.components()) {
        // lower estimate from vertices and centroid
        double lb = 0.0;
        for (const Vec2& v : comp.vertices()) {
            lb = std::max(lb, distance_to_region(v, b));
        }
        lb = std::max(lb, distance_to_region(comp.vertex_centroid(), b));
        // certified upper estimate: nearest single component bounds the sup
        double ub = std::numeric_limits<double>::infinity();
        for (const ConvexBody& t : b.components()) {
            ub = std::min(ub, directed_convex(comp, t));
        }
        if (ub - lb <= delta) {
            worst = std::max(worst, lb);
        } else {
            worst = std::max(worst, component_sup_sampled(comp, b, delta));
        }
    }
    return worst;
}

double region_hausdorff(const Region& a, const Region& b, double delta) {
    return std::max(directed_hausdorff(a, b, delta), directed_hausdorff(b, a, delta));
}

bool region_subset(const Region& a, const Region& b, double tol) {
    if (tol < 0.0) throw std::invalid_argument("region_subset: negative tolerance");
    if (a.is_empty()) return true;
    if (b.is_empty()) return false;
    bool all_single = true;
    for (const ConvexBody& c : a.components()) {
        bool found = false;
        for (const ConvexBody& t : b.components()) {
            if (contains_convex(t, c, std::max(tol, kGeomEps))) {
                found = true;
                break;
            }
        }
        if (!found) {
            all_single = false;
            break;
        }
    }
    if (all_single) return true;
    if (tol == 0.0) return false;
    return directed_hausdorff(a, b, 0.5 * tol) <= tol;
}

}  // namespace bgp
