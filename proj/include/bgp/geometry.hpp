#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bgp {

/// Default geometric tolerance (length units) for collinearity, containment
/// and vertex dedup. Every operation that needs a tolerance takes it as a
/// defaulted parameter, so callers can tighten or loosen per call.
inline constexpr double kGeomEps = 1e-9;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 v);
inline double norm2(Vec2 v) { return dot(v, v); }
/// CCW perpendicular (rotate +90 degrees).
inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

/// A unit vector on the circle of directions; the argument of every support
/// function evaluation.
class Direction {
public:
    explicit Direction(double angle_radians);
    /// Normalizes v. Throws std::invalid_argument if v is (near) zero.
    static Direction from_vector(Vec2 v);
    Vec2 unit() const { return u_; }
    /// Angle in [0, 2*pi).
    double angle() const;

private:
    explicit Direction(Vec2 unit_vector) : u_(unit_vector) {}
    Vec2 u_;
};

using DirectionGrid = std::vector<Direction>;

/// A compact convex set in the plane stored as its extreme points in
/// counter-clockwise order, first vertex lowest-then-leftmost. Points
/// (1 vertex) and segments (2 vertices) are first-class degenerate bodies.
/// Values are immutable; equal bodies compare structurally equal.
class ConvexBody {
public:
    static ConvexBody point(Vec2 p);
    static ConvexBody segment(Vec2 a, Vec2 b);
    /// Convex hull of an arbitrary point set (deduped and canonicalized).
    /// Throws std::invalid_argument on an empty set.
    static ConvexBody hull_of(std::vector<Vec2> pts, double tol = kGeomEps);

    const std::vector<Vec2>& vertices() const { return verts_; }
    std::size_t vertex_count() const { return verts_.size(); }
    bool is_point() const { return verts_.size() == 1; }
    bool is_segment() const { return verts_.size() == 2; }
    bool is_degenerate() const { return verts_.size() < 3; }
    /// Average of the vertices (used for markers and interior probes).
    Vec2 vertex_centroid() const;

    friend bool operator==(const ConvexBody& a, const ConvexBody& b) {
        return a.verts_ == b.verts_;
    }

private:
    explicit ConvexBody(std::vector<Vec2> canonical) : verts_(std::move(canonical)) {}
    std::vector<Vec2> verts_;

    friend ConvexBody minkowski_sum(const ConvexBody&, const ConvexBody&);
    friend ConvexBody scale(const ConvexBody&, double);
    friend ConvexBody translate(const ConvexBody&, Vec2);
};

/// sup over the body of <v, u>. Exact for polygons (max over vertices).
double support(const ConvexBody& body, const Direction& u);
/// Same, for a not necessarily unit direction vector.
double support(const ConvexBody& body, Vec2 u);

/// Exact Minkowski sum, computed by merging the two edge sequences in
/// angular order. support(result, u) == support(a, u) + support(b, u).
ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b);

/// {factor * a : a in body}. factor == 0 collapses to the origin;
/// negative factors are rejected.
ConvexBody scale(const ConvexBody& body, double factor);

ConvexBody translate(const ConvexBody& body, Vec2 offset);

/// Euclidean distance from p to the body (0 if inside).
double point_distance(Vec2 p, const ConvexBody& body);

bool contains_point(const ConvexBody& body, Vec2 p, double tol = kGeomEps);

/// true iff inner is a subset of outer within tol (vertex test; valid by
/// convexity).
bool contains_convex(const ConvexBody& outer, const ConvexBody& inner,
                     double tol = kGeomEps);

/// Exact Hausdorff distance between convex polygons. The sup of the
/// point-to-set distance over a convex polygon is attained at a vertex.
double hausdorff(const ConvexBody& a, const ConvexBody& b);

/// Hausdorff distance from the origin, i.e. the farthest-point norm.
double hausdorff_norm(const ConvexBody& body);

/// max over the grid of |support(a,u) - support(b,u)|; equals hausdorff(a,b)
/// when the grid contains both bodies' edge normals plus the per-arc
/// maximizing directions (see hausdorff_direction_grid). Empty grid rejected.
double hausdorff_dual(const ConvexBody& a, const ConvexBody& b,
                      const DirectionGrid& grid);

/// n evenly spaced directions starting at angle 0.
DirectionGrid uniform_directions(int n);

/// Outward unit normals of the body's edges (empty for a point body).
DirectionGrid edge_normals(const ConvexBody& body);

/// Edge normals of both bodies plus, per arc between consecutive normals,
/// the directions maximizing |support(a,.) - support(b,.)| on that arc.
/// hausdorff_dual over this grid reproduces hausdorff(a, b) exactly.
DirectionGrid hausdorff_direction_grid(const ConvexBody& a, const ConvexBody& b);

/// body intersected with the halfplane {x : <x,normal> <= offset};
/// nullopt when the intersection is empty.
std::optional<ConvexBody> clip_halfplane(const ConvexBody& body, Vec2 normal,
                                         double offset, double tol = kGeomEps);

/// Regular polygon centered at the origin, first vertex at angle 0.
ConvexBody regular_polygon(int sides, double radius);

struct SupportSample {
    Direction direction;
    double value;
};

/// The halfplane system of a support-sample set has empty intersection.
class InfeasibleSupportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Intersection of the halfplanes {x : <x,u_i> <= h_i}: the largest convex
/// body with the given support bounds. Throws std::invalid_argument when the
/// directions leave the intersection unbounded (an angular gap of pi or
/// more), InfeasibleSupportError when it is empty.
ConvexBody from_support_samples(const std::vector<SupportSample>& samples,
                                double tol = kGeomEps);

}  // namespace bgp
