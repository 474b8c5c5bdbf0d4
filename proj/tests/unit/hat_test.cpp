#include "support.hpp"

#include <steinerhat/envelope.hpp>
#include <steinerhat/hat.hpp>
#include <steinerhat/loci.hpp>
#include <steinerhat/triangle.hpp>

#include <cmath>

using namespace steinerhat;
using steinerhat::testing::near;
using steinerhat::testing::throws_code;

namespace {

const Ellipse kE(2.0, 1.0);

double grid(int k, int n) { return kTwoPi * k / n; }

TEST(HatFrame, AtZero) {
    const HatFrame f = build_hat_frame(kE, BoundaryParam(0.0));
    EXPECT_FALSE(f.degenerate);
    EXPECT_TRUE(near(f.preimages[0], {2.0, 0.0}, 1e-15));
    EXPECT_TRUE(near(f.c2, {-1.25, 0.0}, 1e-15));
    EXPECT_TRUE(near(f.cusps[0], {1.0, 0.0}, 1e-15));
    EXPECT_TRUE(near(f.m, {2.0, 0.0}, 0.0));
}

TEST(HatFrame, StructuralInvariants) {
    for (int k = 0; k < 64; ++k) {
        const BoundaryParam u(grid(k, 64) + 0.013);
        const HatFrame f = build_hat_frame(kE, u);
        for (int i = 0; i < 3; ++i) {
            const auto s = static_cast<std::size_t>(i);
            EXPECT_DOUBLE_EQ(f.t_cusp[s], -u.value / 3.0 - kTwoPi * i / 3.0);
            EXPECT_TRUE(near(f.preimages[s], ellipse_point(kE, f.t_cusp[s]), 0.0));
            EXPECT_TRUE(near(f.osc_centers[s], evolute_point(kE, f.t_cusp[s]), 0.0));
            EXPECT_TRUE(near(f.cusps[s] - f.m, 2.0 * (f.osc_centers[s] - f.m), 1e-12));
            EXPECT_TRUE(near(f.cusps[s], deltoid_point(kE, u, f.t_cusp[s]), 1e-12));
            EXPECT_LT(norm(deltoid_derivative(kE, u, f.t_cusp[s])), 1e-12);
            const double h = 1e-7;
            const Point2 fd = (deltoid_point(kE, u, f.t_cusp[s] + h) - deltoid_point(kE, u, f.t_cusp[s] - h)) / (2.0 * h);
            EXPECT_LT(norm(fd), 1e-6);
        }
        const auto explicit_p = explicit_cusps(kE, u);
        const auto explicit_q = explicit_osc_centers(kE, u);
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_TRUE(near(explicit_p[i], f.cusps[i], 1e-12));
            EXPECT_TRUE(near(explicit_q[i], f.osc_centers[i], 1e-12));
        }
    }
}

TEST(HatFrame, DegenerateCircle) {
    const Ellipse circle(1.0, 1.0);
    const HatFrame f = build_hat_frame(circle, BoundaryParam(0.3));
    EXPECT_TRUE(f.degenerate);
    EXPECT_TRUE(near(f.c2, -1.0 * f.m, 1e-15));
    for (const auto& p : f.cusps) EXPECT_TRUE(near(p, f.c2, 1e-15));
    EXPECT_EQ(hat_area(circle), 0.0);
    EXPECT_TRUE(throws_code([&] { (void)circle_K(circle, BoundaryParam(0.3)); }, ErrorCode::Degenerate));
    EXPECT_TRUE(throws_code([&] { (void)osculating_circle(circle, BoundaryParam(0.3), 1); }, ErrorCode::Degenerate));
}

TEST(HatArea, ClosedFormAndQuadrature) {
    EXPECT_NEAR(hat_area(kE), 9.0 * kPi / 4.0, 1e-14);
    EXPECT_NEAR(hat_area_numeric(kE, BoundaryParam(0.2), 100000) / hat_area(kE), 1.0, 1e-6);
    const Ellipse r2(std::sqrt(2.0), 1.0);
    EXPECT_NEAR(hat_area(r2) / r2.area(), 0.25, 1e-14);
    const Ellipse r1(std::sqrt(2.0 + std::sqrt(3.0)), 1.0);
    EXPECT_NEAR(hat_area(r1) / r1.area(), 1.0, 1e-14);
    const Ellipse golden((1.0 + std::sqrt(5.0)) / 2.0, 1.0);
    EXPECT_NEAR(hat_area(golden) / golden.area(), 0.5, 1e-14);
}

TEST(HatArea, InvariantOverSweep) {
    for (int k = 0; k < 256; ++k) {
        EXPECT_NEAR(hat_area_numeric(kE, BoundaryParam(grid(k, 256)), 20000) / hat_area(kE), 1.0, 1e-6);
    }
}

TEST(HatArea, RejectsTooFewSamples) {
    EXPECT_TRUE(throws_code([] { (void)hat_area_numeric(kE, BoundaryParam(0.0), 2); }, ErrorCode::InsufficientSamples));
}

TEST(HatCenter, GreenCentroidMatchesClosedForm) {
    EXPECT_TRUE(near(hat_center_numeric(kE, BoundaryParam(0.0), 100000).point, {-1.25, 0.0}, 1e-6));
    EXPECT_TRUE(near(hat_center_numeric(kE, BoundaryParam(kPi / 2.0), 100000).point, {0.0, -2.5}, 1e-6));
    for (int k = 0; k < 16; ++k) {
        const BoundaryParam u(grid(k, 16) + 0.2);
        EXPECT_TRUE(near(hat_center_numeric(kE, u, 20000).point, hat_center(kE, u), 1e-6));
    }
    const auto deg = hat_center_numeric(Ellipse(1.0, 1.0), BoundaryParam(0.4), 1000);
    EXPECT_TRUE(deg.degenerate);
    EXPECT_TRUE(near(deg.point, {-std::cos(0.4), -std::sin(0.4)}, 1e-15));
    EXPECT_THROW((void)hat_center_numeric(kE, BoundaryParam(0.0), 999), GeometryError);
}

TEST(CircleK, PassesThroughFivePoints) {
    EXPECT_NEAR(circle_K_conic(kE, BoundaryParam(0.0))({2.0, 0.0}), 0.0, 1e-15);
    for (int k = 0; k < 64; ++k) {
        const BoundaryParam u(grid(k, 64));
        const HatFrame f = build_hat_frame(kE, u);
        const ConicImplicit q = circle_K_conic(kE, u);
        for (const Point2 p : {f.m, f.c2, f.preimages[0], f.preimages[1], f.preimages[2]}) EXPECT_LT(std::abs(q(p)), 1e-10);
        const Circle c = circle_K(kE, u);
        EXPECT_TRUE(near(c.center, midpoint(f.m, f.c2), 1e-12));
        EXPECT_NEAR(2.0 * c.radius, distance(f.m, f.c2), 1e-12);
    }
}

TEST(Osculating, FirstCircleAtZero) {
    const Circle k1 = osculating_circle(kE, BoundaryParam(0.0), 1);
    EXPECT_TRUE(near(k1.center, {1.5, 0.0}, 1e-15));
    EXPECT_NEAR(k1.radius, 0.5, 1e-15);
}

TEST(Osculating, ThroughPoleAndCuspAndPreimage) {
    for (int k = 0; k < 64; ++k) {
        const BoundaryParam u(grid(k, 64) + 0.05);
        const HatFrame f = build_hat_frame(kE, u);
        const ConicImplicit k1 = osculating_circle_K1_conic(kE, u);
        for (const Point2 p : {f.m, f.preimages[0], f.cusps[0]}) EXPECT_LT(std::abs(k1(p)) / k1.monomial_scale(p), 1e-10);
        for (int i = 1; i <= 3; ++i) {
            const auto s = static_cast<std::size_t>(i - 1);
            const Circle c = osculating_circle(kE, u, i);
            EXPECT_TRUE(near(c.center, f.osc_centers[s], 1e-12));
            EXPECT_LT(c.distance_to(f.m), 1e-10);
            EXPECT_LT(c.distance_to(f.preimages[s]), 1e-10);
            EXPECT_LT(c.distance_to(f.cusps[s]), 1e-10);
        }
    }
}

TEST(Osculating, ContactIsAtLeastThirdOrder) {
    const BoundaryParam u(0.7);
    for (int i = 1; i <= 3; ++i) {
        const Circle c = osculating_circle(kE, u, i);
        const double t = cusp_parameter(u, i);
        const double d1 = c.distance_to(ellipse_point(kE, t + 1e-2));
        const double d2 = c.distance_to(ellipse_point(kE, t + 1e-3));
        EXPECT_GT(std::log10(d1 / d2), 2.9);
        EXPECT_LT(d2 / 1e-6, 1e-2);  // dist / h² -> 0
    }
}

TEST(Collinearity, CuspPreimageAndCenter) {
    for (int k = 0; k < 64; ++k) {
        const HatFrame f = build_hat_frame(kE, BoundaryParam(grid(k, 64) + 0.1));
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_LT(std::abs(Triangle(f.preimages[i], f.cusps[i], f.c2).signed_area()), 1e-10);
        }
    }
}

TEST(C2Locus, ContainsRotatedEllipse) {
    for (double a : {1.0, 1.2, 2.0, 3.5}) {
        const Ellipse e(a, 1.0);
        const double ax = (a * a + 1.0) / (2.0 * a), ay = (a * a + 1.0) / 2.0;
        double min_ratio = 1e300;
        for (int k = 0; k < 3600; ++k) {
            const double phi = grid(k, 3600);
            // Radial distance of each curve in direction phi.
            const auto radius = [&](double sx, double sy) {
                return 1.0 / std::sqrt(std::pow(std::cos(phi) / sx, 2) + std::pow(std::sin(phi) / sy, 2));
            };
            min_ratio = std::min(min_ratio, radius(ax, ay) / radius(e.b(), e.a()));
        }
        if (a == 1.0) {
            EXPECT_NEAR(min_ratio, 1.0, 1e-15);
        } else {
            EXPECT_GE(min_ratio, 1.0);
        }
        const auto axes = c2_locus(e).semi_axes();
        ASSERT_TRUE(axes.has_value());
        EXPECT_NEAR(axes->major, ay, 1e-12);
        EXPECT_NEAR(axes->minor, ax, 1e-12);
    }
}

TEST(Rotated, CenterRotatesAboutCircleKCenter) {
    for (double theta : {0.2, kPi / 4.0, 1.2}) {
        for (int k = 0; k < 16; ++k) {
            const BoundaryParam u(grid(k, 16) + 0.3);
            const Point2 want = rotate_about(hat_center(kE, u), circle_K(kE, u).center, -2.0 * theta);
            EXPECT_TRUE(near(rotated_center(kE, u, theta), want, 1e-9));
        }
    }
}

TEST(Rotated, CuspsRunAlongOsculatingCircles) {
    const BoundaryParam u(0.8);
    for (double theta : {0.1, 0.5, 1.0, 1.4}) {
        const auto cusps = rotated_cusps(kE, u, theta);
        for (int i = 1; i <= 3; ++i) {
            EXPECT_LT(osculating_circle(kE, u, i).distance_to(cusps[static_cast<std::size_t>(i - 1)]), 1e-12);
        }
    }
}

TEST(Rotated, ClosedFormArea) {
    for (double theta : {0.0, kPi / 6.0, kPi / 4.0, kPi / 3.0, kPi / 2.0}) {
        const double c = std::cos(theta);
        EXPECT_NEAR(rotated_hat_area(kE, theta), c * c * hat_area(kE), 1e-12);
    }
}

}  // namespace
