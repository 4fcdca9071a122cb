#include <cmath>
#include <random>

#include "bgp/growth.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bgp;

namespace {

ConvexBody box(double x0, double y0, double x1, double y1) {
    return ConvexBody::hull_of({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

// random piecewise-constant process bounded by k (pieces are scalings of k)
GrowthProcess random_piecewise(std::mt19937_64& rng, const ConvexBody& k, double t0,
                               double t1) {
    std::uniform_int_distribution<int> npieces(1, 5);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    int m = npieces(rng);
    std::vector<double> bp{t0};
    for (int i = 1; i < m; ++i) bp.push_back(t0 + (t1 - t0) * u01(rng));
    bp.push_back(t1);
    std::sort(bp.begin(), bp.end());
    std::vector<double> clean{bp.front()};
    for (double b : bp) {
        if (b - clean.back() > 1e-6) clean.push_back(b);
    }
    if (clean.back() != t1) clean.back() = t1;
    std::vector<ConvexBody> pieces;
    for (std::size_t j = 0; j + 1 < clean.size(); ++j) {
        pieces.push_back(scale(k, 0.2 + 0.8 * u01(rng)));
    }
    return GrowthProcess::piecewise_constant(clean, pieces, k);
}

}  // namespace

TEST_CASE("time interval validation") {
    CHECK_THROWS_AS(TimeInterval(1.0, 0.5), std::invalid_argument);
    CHECK(TimeInterval(0.5, 0.5).length() == 0.0);
}

TEST_CASE("piecewise construction and left continuity") {
    ConvexBody k = box(-1, -1, 1, 1);
    ConvexBody half = scale(k, 0.5);
    GrowthProcess g = GrowthProcess::piecewise_constant({0.0, 1.0, 2.0}, {k, half}, k);
    CHECK(g.value(0.0) == k);   // start value defaults to the first piece
    CHECK(g.value(0.5) == k);
    CHECK(g.value(1.0) == k);   // value at a breakpoint is the piece ending there
    CHECK(g.value(1.5) == half);
    CHECK(g.value(2.0) == half);
    CHECK_THROWS_AS(g.value(2.5), std::invalid_argument);

    CHECK_THROWS_AS(GrowthProcess::piecewise_constant({0.0}, {}, k),
                    std::invalid_argument);
    CHECK_THROWS_AS(GrowthProcess::piecewise_constant({0.0, 1.0}, {k, k}, k),
                    std::invalid_argument);
    CHECK_THROWS_AS(GrowthProcess::piecewise_constant({0.0, 0.0}, {k}, k),
                    std::invalid_argument);
}

TEST_CASE("aumann integral of constant growth") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 30; ++i) {
        ConvexBody k = oracle::random_body_with_origin(rng, 2.0);
        GrowthProcess g = GrowthProcess::constant(k, 0.0, 3.0);
        std::uniform_real_distribution<double> ab(0.0, 3.0);
        double a = ab(rng), b = ab(rng);
        if (a > b) std::swap(a, b);
        ConvexBody integral = aumann_integral(g, {a, b});
        CHECK(hausdorff(integral, scale(k, b - a)) <= 1e-9);
    }
}

TEST_CASE("aumann integral of a zero-length interval is the origin") {
    ConvexBody k = box(-1, -1, 1, 1);
    GrowthProcess g = GrowthProcess::constant(k, 0.0, 2.0);
    CHECK(aumann_integral(g, {1.0, 1.0}) == ConvexBody::point({0, 0}));
}

TEST_CASE("aumann integral of two-piece growth") {
    // square on (0,1], flat segment on (1,2]: the integral over [0,2] is
    // the square stretched horizontally
    ConvexBody sq = box(-1, -1, 1, 1);
    ConvexBody seg = ConvexBody::segment({-1, 0}, {1, 0});
    GrowthProcess g = GrowthProcess::piecewise_constant({0.0, 1.0, 2.0}, {sq, seg}, sq);
    ConvexBody integral = aumann_integral(g, {0.0, 2.0});
    CHECK(integral == box(-2, -1, 2, 1));

    // support-function quadrature oracle over a dense grid
    for (const Direction& u : uniform_directions(360)) {
        double expected = 1.0 * support(sq, u) + 1.0 * support(seg, u);
        CHECK(std::abs(support(integral, u) - expected) <= 1e-9);
    }
}

TEST_CASE("aumann integral rejects invalid input") {
    ConvexBody k = box(-1, -1, 1, 1);
    GrowthProcess g = GrowthProcess::constant(k, 0.0, 1.0);
    CHECK_THROWS_AS(aumann_integral(g, {0.0, 2.0}), std::invalid_argument);

    ConvexBody shifted = box(1, 1, 2, 2);  // origin outside
    GrowthProcess bad3 = GrowthProcess::piecewise_constant({0.0, 1.0}, {shifted}, shifted);
    try {
        aumann_integral(bad3, {0.0, 1.0});
        FAIL("expected AssumptionError");
    } catch (const AssumptionError& e) {
        CHECK(e.label() == "A.3");
    }

    ConvexBody small = box(-0.1, -0.1, 0.1, 0.1);
    GrowthProcess bad5 = GrowthProcess::piecewise_constant({0.0, 1.0}, {k}, small);
    try {
        aumann_integral(bad5, {0.0, 1.0});
        FAIL("expected AssumptionError");
    } catch (const AssumptionError& e) {
        CHECK(e.label() == "A.5");
    }
}

TEST_CASE("assumption report") {
    ConvexBody k = box(-1, -1, 1, 1);
    GrowthProcess good = GrowthProcess::constant(k, 0.0, 1.0);
    AssumptionReport rep = check_assumptions(good, {0.0, 0.5, 1.0});
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() == 9);  // three labels at three times

    ConvexBody shifted = box(1, 1, 2, 2);
    GrowthProcess bad = GrowthProcess::piecewise_constant({0.0, 1.0}, {shifted}, shifted);
    AssumptionReport rep2 = check_assumptions(bad, {0.5});
    CHECK_FALSE(rep2.all_pass());
    auto fails = rep2.failures();
    REQUIRE(fails.size() == 1);
    CHECK(fails[0].label == "A.3");

    ConvexBody toobig = box(-2, -2, 2, 2);
    GrowthProcess bad5 = GrowthProcess::piecewise_constant({0.0, 1.0, 2.0}, {k, toobig}, k);
    AssumptionReport rep3 = check_assumptions(bad5, {0.5, 1.5});
    auto fails3 = rep3.failures();
    REQUIRE(fails3.size() == 1);
    CHECK(fails3[0].label == "A.5");
    CHECK(fails3[0].time == 1.5);
}

TEST_CASE("integral monotone in the interval") {
    ConvexBody k = box(-1, -1, 1, 1);
    GrowthProcess g = GrowthProcess::constant(k, 0.0, 2.0);
    CHECK(integral_monotone_check(g, {0.2, 0.8}, {0.2, 0.8}));
    CHECK(integral_monotone_check(g, {0.0, 1.0}, {0.0, 2.0}));
    CHECK_THROWS_AS(integral_monotone_check(g, {0.0, 2.0}, {0.5, 1.0}),
                    std::invalid_argument);

    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int i = 0; i < 300; ++i) {
        ConvexBody kk = oracle::random_body_with_origin(rng, 1.5);
        GrowthProcess gg = random_piecewise(rng, kk, 0.0, 2.0);
        double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        double lo = std::min({a, b, c, d}), hi = std::max({a, b, c, d});
        std::vector<double> mids{a, b, c, d};
        std::sort(mids.begin(), mids.end());
        CHECK(integral_monotone_check(gg, {mids[1], mids[2]}, {lo, hi}));
    }
}

TEST_CASE("integral additivity over adjacent intervals") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        ConvexBody k = oracle::random_body_with_origin(rng, 1.5);
        GrowthProcess g = random_piecewise(rng, k, 0.0, 2.0);
        double a = u(rng), b = u(rng), c = u(rng);
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        ConvexBody whole = aumann_integral(g, {a, c});
        ConvexBody parts = minkowski_sum(aumann_integral(g, {a, b}),
                                         aumann_integral(g, {b, c}));
        CHECK(hausdorff(whole, parts) <= 1e-9);
    }
}

TEST_CASE("integral containment bounds") {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 100; ++i) {
        ConvexBody k = oracle::random_body_with_origin(rng, 1.5);
        GrowthProcess g = random_piecewise(rng, k, 0.0, 2.0);
        std::uniform_real_distribution<double> u(0.0, 2.0);
        double a = u(rng), b = u(rng);
        if (a > b) std::swap(a, b);
        ConvexBody integral = aumann_integral(g, {a, b});
        CHECK(contains_point(integral, {0, 0}, 1e-9));
        CHECK(contains_convex(scale(k, b - a), integral, 1e-9));
    }
}

TEST_CASE("integral is lipschitz in the endpoint") {
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        ConvexBody k = oracle::random_body_with_origin(rng, 1.5);
        GrowthProcess g = random_piecewise(rng, k, 0.0, 2.0);
        double a = u(rng), b = u(rng), b2 = u(rng);
        double lo = std::min({a, b, b2});
        a = lo;
        ConvexBody i1 = aumann_integral(g, {a, b});
        ConvexBody i2 = aumann_integral(g, {a, b2});
        CHECK(hausdorff(i1, i2) <= std::abs(b - b2) * hausdorff_norm(k) + 1e-12);
    }
}

TEST_CASE("sampled growth integrates by quadrature") {
    ConvexBody k = ConvexBody::hull_of({{-1, -0.5}, {1.2, -0.4}, {0.8, 1.0}, {-0.6, 0.9}});
    REQUIRE(contains_point(k, {0, 0}));
    GrowthProcess g = GrowthProcess::sampled([&](double) { return k; }, 0.0, 2.0, k);
    QuadratureOptions opts;
    opts.panels = 64;
    opts.directions = 90;
    ConvexBody integral = aumann_integral(g, {0.25, 1.75}, opts);
    CHECK(hausdorff(integral, scale(k, 1.5)) <= 1e-9);

    // shrinking n-gon: reconstruction circumscribes and matches quadrature
    // values in every sample direction
    auto shrink = [](double t) { return regular_polygon(12, 1.0 - 0.3 * t); };
    GrowthProcess s =
        GrowthProcess::sampled(shrink, 0.0, 1.0, regular_polygon(12, 1.0), 0.3);
    ConvexBody si = aumann_integral(s, {0.0, 1.0}, opts);
    DirectionGrid grid = uniform_directions(opts.directions);
    for (const Direction& u : edge_normals(s.bound())) grid.push_back(u);
    const int panels = opts.panels;
    for (const Direction& u : grid) {
        double quad = 0.0;
        for (int p = 0; p < panels; ++p) {
            double mid = (p + 0.5) / panels;
            quad += support(shrink(mid), u) / panels;
        }
        CHECK(std::abs(support(si, u) - quad) <= 1e-9);
    }
    // midpoint evaluation stays inside the bound
    CHECK(contains_convex(scale(s.bound(), 1.0), si, 1e-9));

    // quadrature respects assumption checks
    auto escape = [](double t) {
        return t < 0.5 ? regular_polygon(8, 1.0)
                       : translate(regular_polygon(8, 1.0), {5.0, 0.0});
    };
    GrowthProcess bad =
        GrowthProcess::sampled(escape, 0.0, 1.0, regular_polygon(8, 1.0));
    CHECK_THROWS_AS(aumann_integral(bad, {0.0, 1.0}, opts), AssumptionError);
}

TEST_CASE("sampled integrals nest across nested intervals") {
    auto wobble = [](double t) { return regular_polygon(10, 0.6 + 0.4 * std::sin(3.0 * t)); };
    GrowthProcess g = GrowthProcess::sampled(wobble, 0.0, 2.0, regular_polygon(10, 1.0));
    QuadratureOptions opts;
    opts.panels = 64;
    opts.directions = 60;
    ConvexBody outer = aumann_integral(g, {0.3, 1.9}, opts);
    ConvexBody inner = aumann_integral(g, {0.7, 1.4}, opts);
    CHECK(contains_convex(outer, inner, 1e-9));
}
