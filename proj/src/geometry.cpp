#include "bgp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bgp {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Lowest-then-leftmost comparison: the canonical first vertex minimizes (y, x).
bool canonical_less(Vec2 a, Vec2 b) {
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
}

void rotate_to_canonical_start(std::vector<Vec2>& v) {
    auto it = std::min_element(v.begin(), v.end(), canonical_less);
    std::rotate(v.begin(), it, v.end());
}

// Drops duplicate and collinear vertices from a CCW convex vertex cycle.
// Tolerance is interpreted as a perpendicular distance in length units.
std::vector<Vec2> cleanup_convex_cycle(std::vector<Vec2> pts, double tol) {
    // consecutive dedup, including the wrap pair
    std::vector<Vec2> dd;
    dd.reserve(pts.size());
    for (const Vec2& p : pts) {
        if (dd.empty() || norm(p - dd.back()) > tol) dd.push_back(p);
    }
    while (dd.size() > 1 && norm(dd.front() - dd.back()) <= tol) dd.pop_back();
    if (dd.size() <= 2) {
        rotate_to_canonical_start(dd);
        return dd;
    }

    // collinear removal on the cycle; repeat until stable (removals can
    // expose new collinear triples)
    bool changed = true;
    while (changed && dd.size() > 2) {
        changed = false;
        std::vector<Vec2> out;
        out.reserve(dd.size());
        const std::size_t n = dd.size();
        for (std::size_t i = 0; i < n; ++i) {
            Vec2 prev = dd[(i + n - 1) % n];
            Vec2 cur = dd[i];
            Vec2 next = dd[(i + 1) % n];
            double turn = cross(cur - prev, next - cur);
            double span = norm(next - prev);
            if (turn <= tol * std::max(1e-30, span)) {
                changed = true;  // drop cur
            } else {
                out.push_back(cur);
            }
        }
        if (out.size() < 1) {  // fully collapsed: keep one point
            out.push_back(dd.front());
        }
        dd = std::move(out);
    }
    if (dd.size() == 2 && norm(dd[0] - dd[1]) <= tol) dd.pop_back();
    rotate_to_canonical_start(dd);
    return dd;
}

// Affine maps of canonical vertex cycles can round two near-tied vertices
// into exact duplicates, or move the (y, x)-minimum to a different index.
// Restores both invariants without touching the cyclic order.
std::vector<Vec2> recanonicalize(std::vector<Vec2> v) {
    std::vector<Vec2> out;
    out.reserve(v.size());
    for (const Vec2& p : v) {
        if (out.empty() || !(p == out.back())) out.push_back(p);
    }
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    rotate_to_canonical_start(out);
    return out;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 ab = b - a;
    double len2 = norm2(ab);
    if (len2 == 0.0) return norm(p - a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return norm(p - (a + t * ab));
}

// Angular half classes: [0, pi) -> 0, [pi, 2*pi) -> 1.
int angular_half(Vec2 d) {
    if (d.y != 0.0) return d.y > 0.0 ? 0 : 1;
    return d.x > 0.0 ? 0 : 1;
}

// -1 if a strictly precedes b in angular order from 0, +1 if b precedes a,
// 0 if the directions coincide.
int angular_compare(Vec2 a, Vec2 b) {
    int ha = angular_half(a), hb = angular_half(b);
    if (ha != hb) return ha < hb ? -1 : 1;
    double c = cross(a, b);
    double scale = norm(a) * norm(b);
    if (std::abs(c) <= 1e-12 * scale && dot(a, b) > 0.0) return 0;
    if (c > 0.0) return -1;
    if (c < 0.0) return 1;
    return 0;
}

double angle_of(Vec2 v) {
    double a = std::atan2(v.y, v.x);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    return a;
}

std::size_t support_argmax(const std::vector<Vec2>& verts, Vec2 u) {
    std::size_t best = 0;
    double best_val = dot(verts[0], u);
    for (std::size_t i = 1; i < verts.size(); ++i) {
        double v = dot(verts[i], u);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    return best;
}

}  // namespace

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

Direction::Direction(double angle_radians)
    : u_{std::cos(angle_radians), std::sin(angle_radians)} {}

Direction Direction::from_vector(Vec2 v) {
    double n = norm(v);
    if (n < 1e-300) throw std::invalid_argument("Direction: zero vector");
    return Direction(Vec2{v.x / n, v.y / n});
}

double Direction::angle() const { return angle_of(u_); }

ConvexBody ConvexBody::point(Vec2 p) { return ConvexBody({p}); }

ConvexBody ConvexBody::segment(Vec2 a, Vec2 b) {
    return hull_of({a, b});
}

ConvexBody ConvexBody::hull_of(std::vector<Vec2> pts, double tol) {
    if (pts.empty()) throw std::invalid_argument("hull_of: empty point set");
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) return ConvexBody({pts[0]});

    // monotone chain; strictly convex turns only, near-collinear points
    // removed by the cycle cleanup afterwards
    auto build = [&](auto begin, auto end) {
        std::vector<Vec2> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   cross(chain[chain.size() - 1] - chain[chain.size() - 2],
                         *it - chain[chain.size() - 1]) <= 0.0) {
                chain.pop_back();
            }
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<Vec2> lower = build(pts.begin(), pts.end());
    std::vector<Vec2> upper = build(pts.rbegin(), pts.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return ConvexBody(cleanup_convex_cycle(std::move(lower), tol));
}

Vec2 ConvexBody::vertex_centroid() const {
    Vec2 c{0.0, 0.0};
    for (const Vec2& v : verts_) c = c + v;
    return {c.x / static_cast<double>(verts_.size()),
            c.y / static_cast<double>(verts_.size())};
}

double support(const ConvexBody& body, Vec2 u) {
    double best = -std::numeric_limits<double>::infinity();
    for (const Vec2& v : body.vertices()) best = std::max(best, dot(v, u));
    return best;
}

double support(const ConvexBody& body, const Direction& u) {
    return support(body, u.unit());
}

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b) {
    if (a.is_point()) return translate(b, a.vertices()[0]);
    if (b.is_point()) return translate(a, b.vertices()[0]);

    const std::vector<Vec2>& va = a.vertices();
    const std::vector<Vec2>& vb = b.vertices();
    const std::size_t n = va.size(), m = vb.size();
    auto edge = [](const std::vector<Vec2>& v, std::size_t k) {
        return v[(k + 1) % v.size()] - v[k % v.size()];
    };

    std::vector<Vec2> sum;
    sum.reserve(n + m + 1);
    std::size_t i = 0, j = 0;
    while (i < n || j < m) {
        sum.push_back(va[i % n] + vb[j % m]);
        if (i >= n) {
            ++j;
            continue;
        }
        if (j >= m) {
            ++i;
            continue;
        }
        int cmp = angular_compare(edge(va, i), edge(vb, j));
        if (cmp < 0) {
            ++i;
        } else if (cmp > 0) {
            ++j;
        } else {
            ++i;
            ++j;
        }
    }
    return ConvexBody(cleanup_convex_cycle(std::move(sum), kGeomEps));
}

ConvexBody scale(const ConvexBody& body, double factor) {
    if (factor < 0.0) throw std::invalid_argument("scale: negative factor");
    if (factor == 0.0) return ConvexBody::point({0.0, 0.0});
    std::vector<Vec2> v;
    v.reserve(body.vertex_count());
    for (const Vec2& p : body.vertices()) v.push_back(factor * p);
    return ConvexBody(recanonicalize(std::move(v)));
}

ConvexBody translate(const ConvexBody& body, Vec2 offset) {
    std::vector<Vec2> v;
    v.reserve(body.vertex_count());
    for (const Vec2& p : body.vertices()) v.push_back(p + offset);
    return ConvexBody(recanonicalize(std::move(v)));
}

double point_distance(Vec2 p, const ConvexBody& body) {
    const std::vector<Vec2>& v = body.vertices();
    if (v.size() == 1) return norm(p - v[0]);
    if (v.size() >= 3) {
        bool inside = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            Vec2 e = v[(i + 1) % v.size()] - v[i];
            if (cross(e, p - v[i]) < 0.0) {
                inside = false;
                break;
            }
        }
        if (inside) return 0.0;
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        best = std::min(best, point_segment_distance(p, v[i], v[(i + 1) % v.size()]));
        if (v.size() == 2) break;  // single edge
    }
    return best;
}

bool contains_point(const ConvexBody& body, Vec2 p, double tol) {
    return point_distance(p, body) <= tol;
}

bool contains_convex(const ConvexBody& outer, const ConvexBody& inner, double tol) {
    for (const Vec2& v : inner.vertices()) {
        if (point_distance(v, outer) > tol) return false;
    }
    return true;
}

double hausdorff(const ConvexBody& a, const ConvexBody& b) {
    double d = 0.0;
    for (const Vec2& v : a.vertices()) d = std::max(d, point_distance(v, b));
    for (const Vec2& v : b.vertices()) d = std::max(d, point_distance(v, a));
    return d;
}

double hausdorff_norm(const ConvexBody& body) {
    double d = 0.0;
    for (const Vec2& v : body.vertices()) d = std::max(d, norm(v));
    return d;
}

double hausdorff_dual(const ConvexBody& a, const ConvexBody& b,
                      const DirectionGrid& grid) {
    if (grid.empty()) throw std::invalid_argument("hausdorff_dual: empty grid");
    double best = 0.0;
    for (const Direction& u : grid) {
        best = std::max(best, std::abs(support(a, u) - support(b, u)));
    }
    return best;
}

DirectionGrid uniform_directions(int n) {
    if (n < 1) throw std::invalid_argument("uniform_directions: n must be >= 1");
    DirectionGrid g;
    g.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) g.push_back(Direction(kTwoPi * k / n));
    return g;
}

DirectionGrid edge_normals(const ConvexBody& body) {
    DirectionGrid g;
    const std::vector<Vec2>& v = body.vertices();
    if (v.size() < 2) return g;
    const std::size_t edges = v.size() == 2 ? 2 : v.size();
    for (std::size_t i = 0; i < edges; ++i) {
        Vec2 e = v[(i + 1) % v.size()] - v[i % v.size()];
        // outward normal of a CCW edge
        g.push_back(Direction::from_vector({e.y, -e.x}));
    }
    return g;
}

DirectionGrid hausdorff_direction_grid(const ConvexBody& a, const ConvexBody& b) {
    std::vector<double> breaks;
    for (const Direction& d : edge_normals(a)) breaks.push_back(d.angle());
    for (const Direction& d : edge_normals(b)) breaks.push_back(d.angle());
    if (breaks.empty()) breaks.push_back(0.0);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end(),
                             [](double x, double y) { return std::abs(x - y) <= 1e-13; }),
                 breaks.end());

    DirectionGrid grid;
    for (double t : breaks) grid.push_back(Direction(t));

    const std::size_t n = breaks.size();
    for (std::size_t i = 0; i < n; ++i) {
        double lo = breaks[i];
        double hi = (i + 1 < n) ? breaks[i + 1] : breaks[0] + kTwoPi;
        if (hi - lo <= 1e-13) continue;
        double mid = 0.5 * (lo + hi);
        Vec2 va = a.vertices()[support_argmax(a.vertices(), Direction(mid).unit())];
        Vec2 vb = b.vertices()[support_argmax(b.vertices(), Direction(mid).unit())];
        Vec2 w = va - vb;
        if (norm(w) < 1e-300) continue;
        for (Vec2 cand : {w, -1.0 * w}) {
            double phi = angle_of(cand);
            // test membership of phi in the open arc (lo, hi), modulo 2*pi
            double shifted = phi;
            while (shifted < lo) shifted += kTwoPi;
            if (shifted > lo && shifted < hi) grid.push_back(Direction(phi));
        }
    }
    return grid;
}

std::optional<ConvexBody> clip_halfplane(const ConvexBody& body, Vec2 normal,
                                         double offset, double tol) {
    double nn = norm(normal);
    if (nn < 1e-300) throw std::invalid_argument("clip_halfplane: zero normal");
    const std::vector<Vec2>& v = body.vertices();
    std::vector<Vec2> out;
    const std::size_t n = v.size();
    if (n == 1) {
        if (dot(v[0], normal) <= offset + tol * nn) return body;
        return std::nullopt;
    }
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 p = v[i];
        Vec2 q = v[(i + 1) % n];
        double dp = dot(p, normal) - offset;
        double dq = dot(q, normal) - offset;
        if (dp <= 0.0) out.push_back(p);
        if ((dp < 0.0 && dq > 0.0) || (dp > 0.0 && dq < 0.0)) {
            double t = dp / (dp - dq);
            out.push_back(p + t * (q - p));
        }
        if (n == 2) {  // a segment has one geometric edge
            if (dq <= 0.0) out.push_back(q);
            break;
        }
    }
    if (out.empty()) return std::nullopt;
    return ConvexBody::hull_of(std::move(out), tol);
}

ConvexBody regular_polygon(int sides, double radius) {
    if (sides < 3) throw std::invalid_argument("regular_polygon: need >= 3 sides");
    if (radius < 0.0) throw std::invalid_argument("regular_polygon: negative radius");
    if (radius == 0.0) return ConvexBody::point({0.0, 0.0});
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(sides));
    for (int k = 0; k < sides; ++k) {
        double a = kTwoPi * k / sides;
        pts.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    return ConvexBody::hull_of(std::move(pts));
}

ConvexBody from_support_samples(const std::vector<SupportSample>& samples,
                                double tol) {
    if (samples.empty()) {
        throw std::invalid_argument("from_support_samples: no samples");
    }

    // Unbounded iff some open halfplane of directions is sample-free, i.e.
    // the largest angular gap between consecutive directions reaches pi.
    std::vector<double> angles;
    angles.reserve(samples.size());
    for (const SupportSample& s : samples) angles.push_back(s.direction.angle());
    std::sort(angles.begin(), angles.end());
    double max_gap = angles.front() + kTwoPi - angles.back();
    for (std::size_t i = 1; i < angles.size(); ++i) {
        max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
    }
    if (max_gap >= 3.14159265358979 - 1e-9) {
        throw std::invalid_argument(
            "from_support_samples: directions span less than a halfturn, "
            "intersection unbounded");
    }

    double h_scale = 1.0;
    for (const SupportSample& s : samples) h_scale = std::max(h_scale, std::abs(s.value));
    const double feas = tol * h_scale;

    std::vector<Vec2> candidates;
    const std::size_t n = samples.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec2 ui = samples[i].direction.unit();
            Vec2 uj = samples[j].direction.unit();
            double det = cross(ui, uj);
            if (std::abs(det) < 1e-12) continue;
            // solve <x,ui> = hi, <x,uj> = hj
            double hi = samples[i].value, hj = samples[j].value;
            Vec2 x{(hi * uj.y - hj * ui.y) / det, (hj * ui.x - hi * uj.x) / det};
            bool ok = true;
            for (std::size_t k = 0; k < n; ++k) {
                if (dot(x, samples[k].direction.unit()) > samples[k].value + feas) {
                    ok = false;
                    break;
                }
            }
            if (ok) candidates.push_back(x);
        }
    }
    if (candidates.empty()) {
        throw InfeasibleSupportError(
            "from_support_samples: halfplane intersection is empty");
    }
    return ConvexBody::hull_of(std::move(candidates), tol);
}

}  // namespace bgp
