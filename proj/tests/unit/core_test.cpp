#include "support.hpp"

#include <steinerhat/hat.hpp>
#include <steinerhat/polynomial.hpp>
#include <steinerhat/quadrature.hpp>
#include <steinerhat/tangency.hpp>

#include <algorithm>
#include <cmath>

using namespace steinerhat;
using steinerhat::testing::near;
using steinerhat::testing::throws_code;

namespace {

const Ellipse kE(2.0, 1.0);

TEST(Ellipse, PointsOnAxes) {
    EXPECT_TRUE(near(ellipse_point(kE, 0.0), {2.0, 0.0}, 1e-15));
    EXPECT_TRUE(near(ellipse_point(kE, kPi / 2.0), {0.0, 1.0}, 1e-15));
    const Point2 p = ellipse_point(kE, kPi / 4.0);
    EXPECT_TRUE(near(p, {std::sqrt(2.0), std::sqrt(2.0) / 2.0}, 1e-15));
    EXPECT_LT(std::abs(kE.implicit_value(p)), 1e-15);
}

TEST(Ellipse, RejectsBadAxes) {
    EXPECT_THROW(Ellipse(1.0, 2.0), GeometryError);
    EXPECT_THROW(Ellipse(1.0, 0.0), GeometryError);
    EXPECT_TRUE(Ellipse(1.5, 1.5).is_circular());
    EXPECT_DOUBLE_EQ(kE.c2(), 3.0);
}

TEST(Ellipse, ImplicitResidualOnRandomSamples) {
    auto g = steinerhat::testing::rng(1);
    for (int k = 0; k < 1000; ++k) {
        const Ellipse e(steinerhat::testing::uniform(g, 1.0, 10.0), 1.0);
        const double t = steinerhat::testing::uniform(g, -20.0, 20.0);
        EXPECT_LT(std::abs(e.implicit_value(ellipse_point(e, t))), 1e-13);
    }
}

TEST(Evolute, Points) {
    EXPECT_TRUE(near(evolute_point(kE, 0.0), {1.5, 0.0}, 1e-15));
    EXPECT_TRUE(near(evolute_point(kE, kPi / 2.0), {0.0, -3.0}, 1e-15));
    const Ellipse circle(1.0, 1.0);
    for (double t : {0.0, 0.4, 2.0, 5.0}) EXPECT_TRUE(near(evolute_point(circle, t), {0.0, 0.0}, 0.0));
}

TEST(Evolute, AreaMatchesFormulaAndQuadrature) {
    EXPECT_NEAR(evolute_area(kE), 27.0 * kPi / 16.0, 1e-14);
    EXPECT_EQ(evolute_area(Ellipse(1.0, 1.0)), 0.0);
    const auto pts = sample_closed_curve([](double t) { return evolute_point(kE, t); }, 200000);
    EXPECT_NEAR(std::abs(shoelace_area(pts)) / evolute_area(kE), 1.0, 1e-9);
}

TEST(Evolute, HatToEvoluteAreaIsFourThirds) {
    for (double a : {1.1, 2.0, 3.7}) {
        const Ellipse e(a, 1.0);
        EXPECT_NEAR(hat_area(e) / evolute_area(e), 4.0 / 3.0, 1e-14);
    }
}

TEST(CircleThrough, Examples) {
    const Circle c1 = circle_through({1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0});
    EXPECT_TRUE(near(c1.center, {0.0, 0.0}, 1e-15));
    EXPECT_NEAR(c1.radius, 1.0, 1e-15);
    const Circle c2 = circle_through({0.0, 0.0}, {2.0, 0.0}, {1.0, 1.0});
    EXPECT_TRUE(near(c2.center, {1.0, 0.0}, 1e-15));
    EXPECT_NEAR(c2.radius, 1.0, 1e-15);
    EXPECT_TRUE(throws_code([] { (void)circle_through({0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}); }, ErrorCode::CollinearPoints));
}

TEST(CircleThrough, ConicRoundTrip) {
    const Circle c{{0.3, -1.2}, 2.5};
    const Circle back = Circle::from_conic(c.to_conic());
    EXPECT_TRUE(near(back.center, c.center, 1e-14));
    EXPECT_NEAR(back.radius, c.radius, 1e-14);
}

TEST(AffineMap, CompositionAppliesRightToLeft) {
    auto g = steinerhat::testing::rng(2);
    const auto random_map = [&] {
        return AffineMap({steinerhat::testing::uniform(g, -2, 2), steinerhat::testing::uniform(g, -2, 2),
                          steinerhat::testing::uniform(g, -2, 2), steinerhat::testing::uniform(g, -2, 2)},
                         {steinerhat::testing::uniform(g, -5, 5), steinerhat::testing::uniform(g, -5, 5)});
    };
    for (int k = 0; k < 200; ++k) {
        const AffineMap f = random_map(), h = random_map(), j = random_map();
        const Point2 p{steinerhat::testing::uniform(g, -3, 3), steinerhat::testing::uniform(g, -3, 3)};
        EXPECT_TRUE(near(compose(f, h).apply(p), f.apply(h.apply(p)), 1e-13));
        EXPECT_TRUE(near(compose(compose(f, h), j).apply(p), compose(f, compose(h, j)).apply(p), 1e-12));
        EXPECT_TRUE(near(compose(AffineMap::identity(), f).apply(p), f.apply(p), 0.0));
    }
}

TEST(Polynomial, SimpleRoots) {
    const auto r = poly_real_roots(RealPolynomial({-1.0, 0.0, 1.0}));
    ASSERT_EQ(r.size(), 2u);
    EXPECT_NEAR(r[0].value, -1.0, 1e-15);
    EXPECT_NEAR(r[1].value, 1.0, 1e-15);
}

TEST(Polynomial, TripleRoot) {
    const auto r = poly_real_roots(RealPolynomial({-1.0, 3.0, -3.0, 1.0}));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_NEAR(r[0].value, 1.0, 1e-9);
    EXPECT_EQ(r[0].multiplicity, 3);
    EXPECT_EQ(root_count(r), 3);
}

TEST(Polynomial, ZeroPolynomialIsRejected) {
    EXPECT_TRUE(throws_code([] { (void)poly_real_roots(RealPolynomial({0.0, 0.0})); }, ErrorCode::DegenerateInput));
}

TEST(Polynomial, TangencyCubicInsideEvoluteHasThreeRoots) {
    // M_x = 0.3 lies well inside |x| < x* for (2, 1).
    const double mx = 0.3;
    const RealPolynomial q = tangency_cubic(kE, mx);
    const auto roots = poly_real_roots(q, Interval{-kE.a(), kE.a()});
    EXPECT_EQ(root_count(roots), 3);

    // Independent count: sign changes over a dense scan.
    int changes = 0;
    constexpr int n = 100000;
    double prev = q(-kE.a());
    for (int k = 1; k <= n; ++k) {
        const double v = q(-kE.a() + 2.0 * kE.a() * k / n);
        if ((v < 0.0) != (prev < 0.0)) ++changes;
        prev = v;
    }
    EXPECT_EQ(changes, 3);
    for (const auto& r : roots) EXPECT_LE(std::abs(q(r.value)), 1e-12 * q.scale_at(r.value));
}

TEST(Polynomial, RandomFactoredCubics) {
    auto g = steinerhat::testing::rng(3);
    for (int k = 0; k < 500; ++k) {
        std::array<double, 3> z{steinerhat::testing::uniform(g, -10, 10), steinerhat::testing::uniform(g, -10, 10),
                                steinerhat::testing::uniform(g, -10, 10)};
        std::sort(z.begin(), z.end());
        if (z[1] - z[0] < 1e-3 || z[2] - z[1] < 1e-3) continue;
        const double s = z[0] + z[1] + z[2], pr = z[0] * z[1] + z[1] * z[2] + z[0] * z[2], prod = z[0] * z[1] * z[2];
        const RealPolynomial p({-prod, pr, -s, 1.0});
        const auto roots = poly_real_roots(p);
        ASSERT_EQ(roots.size(), 3u);
        for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(roots[i].value, z[i], 1e-9);
        const auto closed = cubic_real_roots_closed_form(p);
        ASSERT_EQ(closed.size(), 3u);
        for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(closed[i], z[i], 1e-8);
    }
}

TEST(Polynomial, IntervalFilter) {
    const auto r = poly_real_roots(RealPolynomial({-1.0, 0.0, 1.0}), Interval{0.0, 5.0});
    ASSERT_EQ(r.size(), 1u);
    EXPECT_NEAR(r[0].value, 1.0, 1e-15);
}

TEST(Shoelace, SquareOrientation) {
    const std::vector<Point2> ccw{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const std::vector<Point2> cw{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    EXPECT_DOUBLE_EQ(shoelace_area(ccw), 1.0);
    EXPECT_DOUBLE_EQ(shoelace_area(cw), -1.0);
    const std::vector<Point2> two{{0, 0}, {1, 0}};
    EXPECT_TRUE(throws_code([&] { (void)shoelace_area(two); }, ErrorCode::InsufficientSamples));
}

TEST(Shoelace, EllipseArea) {
    const auto pts = sample_closed_curve([](double t) { return ellipse_point(kE, t); }, 10000);
    EXPECT_NEAR(shoelace_area(pts) / (2.0 * kPi), 1.0, 1e-6);
}

TEST(Shoelace, ErrorDecaysQuadratically) {
    double prev = 0.0;
    for (std::size_t n : {100u, 200u, 400u, 800u}) {
        const auto pts = sample_closed_curve([](double t) { return ellipse_point(kE, t); }, n);
        const double err = std::abs(shoelace_area(pts) - 2.0 * kPi);
        if (prev > 0.0) EXPECT_NEAR(prev / err, 4.0, 0.05);
        prev = err;
    }
}

TEST(Tolerance, ComparisonRule) {
    const Tolerance tol{1e-9, 1e-9};
    EXPECT_TRUE(tol.close(1.0, 1.0 + 1.5e-9));
    EXPECT_FALSE(tol.close(1.0, 1.0 + 3e-9));
    EXPECT_TRUE(tol.close(1e6, 1e6 + 5e-4));
}

}  // namespace
