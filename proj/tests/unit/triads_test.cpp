#include "support.hpp"

#include <steinerhat/hat.hpp>
#include <steinerhat/triads.hpp>
#include <steinerhat/triangle_centers.hpp>

#include <cmath>

using namespace steinerhat;
using steinerhat::testing::near;
using steinerhat::testing::throws_code;

namespace {

const Ellipse kE(2.0, 1.0);
const double kSqrt3 = std::sqrt(3.0);

double grid(int k, int n) { return kTwoPi * k / n; }

Triangle equilateral() { return Triangle({1.0, 0.0}, {-0.5, kSqrt3 / 2.0}, {-0.5, -kSqrt3 / 2.0}); }

struct Frames {
    HatFrame f;
    Triangle t, tp, tpp;
};

Frames frames(double u, const Ellipse& e = kE) {
    const HatFrame f = build_hat_frame(e, BoundaryParam(u));
    return {f, preimage_triangle(f), cusp_triangle(f), osculating_triangle(f)};
}

TEST(Centers, EquilateralCentersCoincide) {
    const Triangle t = equilateral();
    for (int k : {2, 3, 4, 5, 20}) EXPECT_TRUE(near(triangle_center(t, k), {0.0, 0.0}, 1e-14)) << "X" << k;
}

TEST(Centers, SupportedSetAndErrors) {
    EXPECT_EQ(CenterIndex::supported().size(), 21u);
    EXPECT_TRUE(CenterIndex::is_supported(671));
    EXPECT_FALSE(CenterIndex::is_supported(7));
    EXPECT_TRUE(throws_code([] { (void)CenterIndex(7); }, ErrorCode::UnsupportedCenter));
    const Triangle flat({0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0});
    EXPECT_TRUE(throws_code([&] { (void)triangle_center(flat, 2); }, ErrorCode::DegenerateTriangle));
}

TEST(Centers, ClassicalDefinitions) {
    const Triangle t({0.3, -0.2}, {4.1, 0.5}, {1.2, 2.7});
    const Point2 x3 = triangle_center(t, 3), x4 = triangle_center(t, 4);
    EXPECT_TRUE(near(triangle_center(t, 2), t.centroid(), 1e-14));
    EXPECT_NEAR(distance(x3, t[0]), distance(x3, t[1]), 1e-12);
    EXPECT_NEAR(distance(x3, t[0]), distance(x3, t[2]), 1e-12);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(dot(x4 - t[i], t[(i + 1) % 3] - t[(i + 2) % 3]), 0.0, 1e-12);
    EXPECT_TRUE(near(triangle_center(t, 5), midpoint(x3, x4), 1e-12));
    // Reflection constructions, cross-checking the barycentric table.
    const Point2 x2 = triangle_center(t, 2);
    EXPECT_TRUE(near(triangle_center(t, 671), reflect(triangle_center(t, 99), x2), 1e-10));
    EXPECT_TRUE(near(triangle_center(t, 376), reflect(x2, x3), 1e-10));
    EXPECT_TRUE(near(triangle_center(t, 20), reflect(x4, x3), 1e-10));
}

TEST(Centers, PreimageTriangle) {
    for (int k = 0; k < 64; ++k) {
        const double u = grid(k, 64) + 0.02;
        const auto [f, t, tp, tpp] = frames(u);
        EXPECT_TRUE(near(triangle_center(t, 2), {0.0, 0.0}, 1e-12));
        const Point2 x3{kE.c2() / 4.0 * std::cos(u) / kE.a(), -kE.c2() / 4.0 * std::sin(u) / kE.b()};
        EXPECT_TRUE(near(triangle_center(t, 3), x3, 1e-12));
        EXPECT_TRUE(near(triangle_center(t, 99), f.m, 1e-10));
        EXPECT_TRUE(near(triangle_center(t, 671), reflect(f.m, triangle_center(t, 2)), 1e-10));
    }
}

TEST(Areas, ClosedFormsAndInvariance) {
    const double a_t = 3.0 * kSqrt3 / 2.0, a_tp = 243.0 * kSqrt3 / 32.0;
    EXPECT_NEAR(preimage_triangle_area(kE), a_t, 1e-14);
    EXPECT_NEAR(cusp_triangle_area(kE), a_tp, 1e-13);
    EXPECT_NEAR(osculating_triangle_area(kE), a_tp / 4.0, 1e-13);
    for (int k = 0; k < 64; ++k) {
        const auto [f, t, tp, tpp] = frames(grid(k, 64));
        EXPECT_NEAR(triangle_area(t) / a_t, 1.0, 1e-9);
        EXPECT_NEAR(triangle_area(tp) / a_tp, 1.0, 1e-9);
        EXPECT_NEAR(triangle_area(tpp) / (a_tp / 4.0), 1.0, 1e-9);
    }
}

TEST(SteinerEllipses, CircumellipseOfPreimagesIsE) {
    const ConicImplicit expected = ConicImplicit(1.0 / 4.0, 0.0, 1.0, 0.0, 0.0, -1.0).normalized();
    for (int k = 0; k < 16; ++k) {
        const auto [f, t, tp, tpp] = frames(grid(k, 16) + 0.1);
        const auto got = steiner_circumellipse(t).normalized().coefficients();
        for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(got[i], expected.coefficients()[i], 1e-10);
    }
}

TEST(SteinerEllipses, CuspTriangleAndHalfScale) {
    const double major = 3.0 * kE.c2() / (2.0 * kE.b()), minor = 3.0 * kE.c2() / (2.0 * kE.a());
    for (int k = 0; k < 16; ++k) {
        const double u = grid(k, 16) + 0.1;
        const auto [f, t, tp, tpp] = frames(u);
        const auto ep = steiner_circumellipse(tp).semi_axes();
        const auto epp = steiner_circumellipse(tpp).semi_axes();
        ASSERT_TRUE(ep && epp);
        EXPECT_NEAR(ep->major, major, 1e-10);
        EXPECT_NEAR(ep->minor, minor, 1e-10);
        // Rotated 90 degrees relative to E: the major axis is vertical.
        EXPECT_NEAR(std::abs(ep->major_direction.y), 1.0, 1e-9);
        EXPECT_NEAR(epp->major, major / 2.0, 1e-10);
        EXPECT_NEAR(epp->minor, minor / 2.0, 1e-10);
        const ConicImplicit closed = cusp_steiner_ellipse_conic(kE, BoundaryParam(u));
        for (const auto& p : {tp[0], tp[1], tp[2]}) EXPECT_LT(std::abs(closed(p)) / closed.monomial_scale(p), 1e-12);
    }
}

TEST(SteinerEllipses, AreaRatioAndCongruence) {
    for (double a : {1.3, 2.0, 3.0}) {
        const Ellipse e(a, 1.0);
        const auto area = cusp_steiner_ellipse_conic(e, BoundaryParam(0.6)).area();
        ASSERT_TRUE(area.has_value());
        EXPECT_NEAR(*area / e.area(), 9.0 * e.c4() / (4.0 * a * a), 1e-12);
    }
    const Ellipse congruent((1.0 + std::sqrt(10.0)) / 3.0, 1.0);
    EXPECT_NEAR(*cusp_steiner_ellipse_conic(congruent, BoundaryParam(0.2)).area() / congruent.area(), 1.0, 1e-9);
}

TEST(SteinerEllipses, InellipseIsHalfSizeCaustic) {
    for (int k = 0; k < 32; ++k) {
        const auto [f, t, tp, tpp] = frames(grid(k, 32) + 0.05);
        const ConicImplicit in = steiner_inellipse(t);
        const auto ax = in.semi_axes();
        ASSERT_TRUE(ax.has_value());
        EXPECT_NEAR(ax->major, kE.a() / 2.0, 1e-10);
        EXPECT_NEAR(ax->minor, kE.b() / 2.0, 1e-10);
        EXPECT_NEAR(std::abs(ax->major_direction.x), 1.0, 1e-9);
        for (std::size_t i = 0; i < 3; ++i) {
            const Point2 mid = midpoint(t[i], t[(i + 1) % 3]);
            EXPECT_LT(std::abs(in(mid)) / in.monomial_scale(mid), 1e-10);
            EXPECT_LT(std::abs(tangency_defect(in, LineEq::through(t[i], t[(i + 1) % 3]))), 1e-9);
        }
    }
}

TEST(SteinerEllipses, EquilateralInellipseIsIncircle) {
    const auto ax = steiner_inellipse(equilateral()).semi_axes();
    ASSERT_TRUE(ax.has_value());
    EXPECT_NEAR(ax->major, 0.5, 1e-12);
    EXPECT_NEAR(ax->minor, 0.5, 1e-12);
    const Triangle flat({0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0});
    EXPECT_TRUE(throws_code([&] { (void)steiner_inellipse(flat); }, ErrorCode::DegenerateTriangle));
    EXPECT_TRUE(throws_code([&] { (void)steiner_circumellipse(flat); }, ErrorCode::DegenerateTriangle));
}

TEST(Poncelet, SidesTouchFixedCaustic) {
    const ConicImplicit caustic(4.0 / (kE.a() * kE.a()), 0.0, 4.0 / (kE.b() * kE.b()), 0.0, 0.0, -1.0);
    for (int k = 0; k < 256; ++k) {
        const auto [f, t, tp, tpp] = frames(grid(k, 256));
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_LT(std::abs(tangency_defect(caustic, LineEq::through(t[i], t[(i + 1) % 3]))), 1e-9);
        }
    }
}

TEST(CircumcircleKp, ThroughCuspsWithSteinerPoint) {
    for (int k = 0; k < 64; ++k) {
        const double u = grid(k, 64) + 0.01;
        const auto [f, t, tp, tpp] = frames(u);
        const Circle kp = circumcircle_Kp(kE, BoundaryParam(u));
        const ConicImplicit kq = circumcircle_Kp_conic(kE, BoundaryParam(u));
        const Circle fit = circle_through(tp[0], tp[1], tp[2]);
        EXPECT_TRUE(near(kp.center, fit.center, 1e-9));
        EXPECT_NEAR(kp.radius, fit.radius, 1e-9);
        for (const auto& p : {tp[0], tp[1], tp[2]}) EXPECT_LT(std::abs(kq(p)) / kq.monomial_scale(p), 1e-9);
        const Point2 x99 = cusp_steiner_point(kE, BoundaryParam(u));
        const double a = kE.a(), b = kE.b();
        EXPECT_TRUE(near(x99, {(a * a - 2 * b * b) * std::cos(u) / a, -(2 * a * a - b * b) * std::sin(u) / b}, 1e-12));
        EXPECT_LT(kp.distance_to(x99), 1e-9);
        const ConicImplicit ep = cusp_steiner_ellipse_conic(kE, BoundaryParam(u));
        EXPECT_LT(std::abs(ep(x99)) / ep.monomial_scale(x99), 1e-9);
        EXPECT_TRUE(near(triangle_center(tp, 99), x99, 1e-8));
        EXPECT_GT(distance(kp.center, circle_K(kE, BoundaryParam(u)).center), 1e-3);
    }
}

TEST(Perspectivity, KnownPerspectors) {
    for (int k = 0; k < 64; ++k) {
        const auto [f, t, tp, tpp] = frames(grid(k, 64) + 0.03);
        EXPECT_TRUE(near(perspector(t, tp).point, f.c2, 1e-9));
        EXPECT_TRUE(near(perspector(t, tpp).point, triangle_center(t, 4), 1e-9));
        EXPECT_TRUE(near(perspector(tp, tpp).point, f.m, 1e-9));
        for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(near(tp[i], 2.0 * tpp[i] - f.m, 1e-10));
    }
}

TEST(Perspectivity, Failures) {
    const Triangle a({0, 0}, {4, 0}, {1, 3});
    const Triangle shifted({1, 1}, {5, 1}, {2, 4});
    EXPECT_TRUE(throws_code([&] { (void)perspector(a, shifted); }, ErrorCode::ParallelCevians));
    const Triangle random({0.5, 2.0}, {3.0, -1.0}, {-2.0, 0.7});
    EXPECT_TRUE(throws_code([&] { (void)perspector(a, random); }, ErrorCode::NotPerspective));
    const Triangle scaled({-1, -1}, {7, -1}, {1, 5});
    EXPECT_TRUE(throws_code([&] { (void)perspectrix(a, scaled); }, ErrorCode::SidesParallel));
}

TEST(Orthology, CentersOfTheTriads) {
    for (int k = 0; k < 64; ++k) {
        const auto [f, t, tp, tpp] = frames(grid(k, 64) + 0.07);
        const Point2 x4 = triangle_center(t, 4), x671 = triangle_center(t, 671);
        const auto [o1, o2] = orthology_centers(t, tp);
        EXPECT_TRUE(near(o1.point, x671, 1e-8));
        EXPECT_TRUE(near(o2.point, reflect(f.m, x4), 1e-8));
        EXPECT_TRUE(near(reflection_of_pole_about_orthocenter(f), reflect(f.m, x4), 1e-12));
        const auto [q1, q2] = orthology_centers(t, tpp);
        EXPECT_TRUE(near(q1.point, x671, 1e-8));
        EXPECT_TRUE(near(q2.point, x4, 1e-8));
    }
}

TEST(Orthology, PedalAndAntipedalAreNotOrthologic) {
    auto g = steinerhat::testing::rng(20);
    int checked = 0;
    for (int k = 0; k < 20; ++k) {
        const auto rnd = [&] { return Point2{steinerhat::testing::uniform(g, -3, 3), steinerhat::testing::uniform(g, -3, 3)}; };
        const Triangle abc(rnd(), rnd(), rnd());
        const Point2 p = rnd();
        if (triangle_area(abc) < 1.0) continue;
        std::array<Point2, 3> pedal{}, antipedal{};
        std::array<LineEq, 3> perps{LineEq::with_normal(abc[0] - p, abc[0]), LineEq::with_normal(abc[1] - p, abc[1]),
                                    LineEq::with_normal(abc[2] - p, abc[2])};
        bool ok = true;
        for (std::size_t i = 0; i < 3; ++i) {
            const Point2 b = abc[(i + 1) % 3], c = abc[(i + 2) % 3];
            const Point2 d = c - b;
            pedal[i] = b + (dot(p - b, d) / dot(d, d)) * d;
            const auto v = intersect(perps[(i + 1) % 3], perps[(i + 2) % 3]);
            if (!v) ok = false;
            else antipedal[i] = *v;
        }
        if (!ok) continue;
        ++checked;
        EXPECT_TRUE(throws_code([&] { (void)orthology_centers(Triangle(pedal), Triangle(antipedal)); }, ErrorCode::NotOrthologic));
    }
    EXPECT_GT(checked, 5);
}

TEST(Sondat, PerspectrixPerpendicularAndCentersCollinear) {
    for (int k = 0; k < 64; ++k) {
        const auto [f, t, tp, tpp] = frames(grid(k, 64) + 0.11);
        const Point2 x4 = triangle_center(t, 4), x671 = triangle_center(t, 671);
        EXPECT_LT(line_cosine(perspectrix(t, tp), euler_line(t)), 1e-8);
        EXPECT_LT(line_cosine(perspectrix(t, tpp), LineEq::through(x4, x671)), 1e-8);
        for (const auto& [a, b] : {std::pair{t, tp}, std::pair{t, tpp}}) {
            const Point2 p = perspector(a, b).point;
            const auto [o1, o2] = orthology_centers(a, b);
            const double scale = std::max({norm(p - o1.point), norm(o2.point - o1.point), 1.0});
            EXPECT_LT(std::abs(orient2(p, o1.point, o2.point)) / scale, 1e-8);
        }
    }
}

TEST(EulerLine, Examples) {
    const Triangle iso({-1.0, 0.0}, {1.0, 0.0}, {0.0, 3.0});
    const LineEq l = euler_line(iso);
    EXPECT_NEAR(std::abs(l.nx()), 1.0, 1e-14);
    EXPECT_NEAR(l.d(), 0.0, 1e-14);
    const auto [f, t, tp, tpp] = frames(0.7);
    const LineEq e = euler_line(t);
    for (int k : {2, 3, 4, 5}) EXPECT_LT(std::abs(e.signed_distance(triangle_center(t, k))), 1e-10);
    EXPECT_TRUE(throws_code([] { (void)euler_line(equilateral()); }, ErrorCode::EquilateralDegenerate));
}

TEST(RadicalAxis, Examples) {
    const LineEq l = radical_axis({{-1.0, 0.0}, 1.0}, {{1.0, 0.0}, 1.0});
    EXPECT_NEAR(std::abs(l.nx()), 1.0, 1e-15);
    EXPECT_NEAR(l.d(), 0.0, 1e-15);
    EXPECT_TRUE(throws_code([] { (void)radical_axis({{0.0, 0.0}, 1.0}, {{0.0, 0.0}, 2.0}); }, ErrorCode::ConcentricCircles));
}

TEST(RadicalAxis, CuspSidesPassThroughOsculatingIntersections) {
    for (int k = 0; k < 32; ++k) {
        const double u = grid(k, 32) + 0.2;
        const auto [f, t, tp, tpp] = frames(u);
        for (int i = 1; i <= 3; ++i) {
            const int j = i % 3 + 1, l = j % 3 + 1;
            const Circle kj = osculating_circle(kE, BoundaryParam(u), j), kl = osculating_circle(kE, BoundaryParam(u), l);
            const auto pts = circle_intersections(kj, kl);
            ASSERT_EQ(pts.size(), 2u);
            const Point2 other = distance(pts[0], f.m) > distance(pts[1], f.m) ? pts[0] : pts[1];
            const LineEq side = LineEq::through(tp[static_cast<std::size_t>(j - 1)], tp[static_cast<std::size_t>(l - 1)]);
            EXPECT_LT(std::abs(side.signed_distance(other)), 1e-9);
            EXPECT_LT(line_cosine(side, radical_axis(kj, kl)), 1e-9);
        }
    }
}

TEST(Lemma, PoleAntipodeLinePerpendicularToOsculatingSide) {
    for (int k = 0; k < 128; ++k) {
        const auto [f, t, tp, tpp] = frames(grid(k, 128));
        EXPECT_NEAR(dot(f.m + f.preimages[0], tpp[1] - tpp[2]), 0.0, 1e-10);
    }
}

TEST(CuspTriangle, NeverEquilateral) {
    for (double a : {1.05, 1.5, 2.0, 4.0}) {
        const Ellipse e(a, 1.0);
        double best = 1e300;
        for (int k = 0; k < 720; ++k) {
            const auto s = frames(grid(k, 720), e).tp.squared_sides();
            best = std::min(best, std::sqrt(*std::max_element(s.begin(), s.end()) / *std::min_element(s.begin(), s.end())) - 1.0);
        }
        EXPECT_GT(best, 1e-3) << "a = " << a;
    }
}

TEST(CoincidenceTable, RowsAtSweepAndRandomConfigs) {
    for (int k = 0; k < 16; ++k) {
        const auto rows = coincidence_table_check(kE, BoundaryParam(grid(k, 16) + 0.05));
        ASSERT_EQ(rows.size(), 10u);
        for (const auto& r : rows) EXPECT_LT(r.distance, 1e-8) << "X" << r.k_base;
    }
    auto g = steinerhat::testing::rng(21);
    for (int k = 0; k < 20; ++k) {
        const Ellipse e(steinerhat::testing::uniform(g, 1.1, 3.0), 1.0);
        for (const auto& r : coincidence_table_check(e, BoundaryParam(steinerhat::testing::uniform(g, 0.0, kTwoPi)))) {
            EXPECT_LT(r.distance, 1e-7) << "X" << r.k_base;
        }
    }
    const auto [f, t, tp, tpp] = frames(0.4);
    EXPECT_TRUE(near(triangle_center(t, 98), triangle_center(tp, 2), 1e-8));
    EXPECT_TRUE(near(triangle_center(t, 98), f.c2, 1e-8));
    EXPECT_TRUE(near(triangle_center(t, 3), triangle_center(tpp, 2), 1e-10));
    EXPECT_TRUE(throws_code([] { (void)coincidence_table_check(Ellipse(1.0, 1.0), BoundaryParam(0.1)); }, ErrorCode::Degenerate));
}

}  // namespace
