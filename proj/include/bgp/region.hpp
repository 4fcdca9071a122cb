#pragma once

#include <vector>

#include "bgp/geometry.hpp"

namespace bgp {

/// A finite union of convex bodies. Canonical form: no component contained in
/// another single component, components sorted lexicographically by vertex
/// list. The empty region (no components) is the explicit "nothing born yet"
/// state.
class Region {
public:
    Region() = default;
    explicit Region(std::vector<ConvexBody> components, double tol = kGeomEps);
    static Region empty() { return Region(); }
    static Region single(ConvexBody c);

    bool is_empty() const { return components_.empty(); }
    std::size_t size() const { return components_.size(); }
    const std::vector<ConvexBody>& components() const { return components_; }

    friend bool operator==(const Region& a, const Region& b) {
        return a.components_ == b.components_;
    }

private:
    std::vector<ConvexBody> components_;
};

/// Exact set union (concatenate, then prune dominated components).
Region region_union(const Region& a, const Region& b);

/// Minkowski-dilates every component by g; exact by distributivity of the
/// sum over unions.
Region dilate(const Region& r, const ConvexBody& g);

/// Distance from p to the nearest component (+infinity for the empty region).
double distance_to_region(Vec2 p, const Region& r);

bool region_contains_point(const Region& r, Vec2 p, double tol = kGeomEps);

/// One-sided Hausdorff term sup_{x in a} dist(x, b), approximated from below
/// by boundary samples at spacing <= delta (plus vertices and centroids) and
/// certified from above by per-component convex distances. The returned
/// value v satisfies v <= true <= v + delta. delta must be positive.
double directed_hausdorff(const Region& a, const Region& b, double delta);

/// max of the two directed values; same delta certificate.
double region_hausdorff(const Region& a, const Region& b, double delta);

/// true iff a is contained in b within tol. Fast path: every component of a
/// inside a single component of b; otherwise directed_hausdorff at
/// delta = tol/2 must not exceed tol. With tol == 0 only the fast path runs.
bool region_subset(const Region& a, const Region& b, double tol);

}  // namespace bgp
