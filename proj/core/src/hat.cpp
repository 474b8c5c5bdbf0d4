#include <steinerhat/error.hpp>
#include <steinerhat/hat.hpp>
#include <steinerhat/quadrature.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace steinerhat {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

void require_index(int i) {
    if (i < 1 || i > 3) {
        throw GeometryError(ErrorCode::InvalidArgument, "cusp index must be 1, 2 or 3 (got " + std::to_string(i) + ")");
    }
}

void require_eccentric(const Ellipse& e, const char* what) {
    if (e.is_circular()) throw GeometryError(ErrorCode::Degenerate, std::string(what) + " is undefined for a = b");
}

}  // namespace

double cusp_parameter(BoundaryParam u, int i) {
    require_index(i);
    return -u.value / 3.0 - kTwoPi * (i - 1) / 3.0;
}

Point2 hat_center(const Ellipse& e, BoundaryParam u) noexcept {
    const double s = 0.5 * (e.a() * e.a() + e.b() * e.b());
    return {-s * std::cos(u.value) / e.a(), -s * std::sin(u.value) / e.b()};
}

std::array<Point2, 3> explicit_cusps(const Ellipse& e, BoundaryParam u) noexcept {
    const double a = e.a(), b = e.b(), c2 = e.c2();
    const double s = a * a + b * b;
    const double c3 = std::cos(u.value / 3.0), s3 = std::sin(u.value / 3.0);
    const double cu = std::cos(u.value), su = std::sin(u.value);
    const double base_x = -s * cu / (2.0 * a);
    const double base_y = -s * su / (2.0 * b);
    return {{
        {3.0 * c2 / (2.0 * a) * c3 + base_x, 3.0 * c2 / (2.0 * b) * s3 + base_y},
        {-3.0 * c2 / (4.0 * a) * c3 - 3.0 * kSqrt3 * c2 / (4.0 * a) * s3 + base_x,
         3.0 * kSqrt3 * c2 / (4.0 * b) * c3 - 3.0 * c2 / (4.0 * b) * s3 + base_y},
        {-3.0 * c2 / (4.0 * a) * c3 + 3.0 * kSqrt3 * c2 / (4.0 * a) * s3 + base_x,
         -3.0 * kSqrt3 * c2 / (4.0 * b) * c3 - 3.0 * c2 / (4.0 * b) * s3 + base_y},
    }};
}

std::array<Point2, 3> explicit_osc_centers(const Ellipse& e, BoundaryParam u) noexcept {
    const double a = e.a(), b = e.b(), c2 = e.c2();
    const double c3 = std::cos(u.value / 3.0), s3 = std::sin(u.value / 3.0);
    const double cu = std::cos(u.value), su = std::sin(u.value);
    const double shift_x = c2 * cu / (4.0 * a);
    const double shift_y = -c2 * su / (4.0 * b);
    return {{
        {3.0 * c2 / (4.0 * a) * c3 + shift_x, 3.0 * c2 / (4.0 * b) * s3 + shift_y},
        {-3.0 * c2 / (8.0 * a) * c3 - 3.0 * kSqrt3 * c2 / (8.0 * a) * s3 + shift_x,
         3.0 * kSqrt3 * c2 / (8.0 * b) * c3 - 3.0 * c2 / (8.0 * b) * s3 + shift_y},
        {-3.0 * c2 / (8.0 * a) * c3 + 3.0 * kSqrt3 * c2 / (8.0 * a) * s3 + shift_x,
         -3.0 * kSqrt3 * c2 / (8.0 * b) * c3 - 3.0 * c2 / (8.0 * b) * s3 + shift_y},
    }};
}

HatFrame build_hat_frame(const Ellipse& e, BoundaryParam u) {
    HatFrame f{e, u};
    f.m = ellipse_point(e, u.value);
    f.c2 = hat_center(e, u);
    f.cusps = explicit_cusps(e, u);
    f.degenerate = e.is_circular();
    const double scale = e.a() + (e.a() * e.a() + e.b() * e.b()) / e.b();
    for (int i = 1; i <= 3; ++i) {
        const auto k = static_cast<std::size_t>(i - 1);
        f.t_cusp[k] = cusp_parameter(u, i);
        f.preimages[k] = ellipse_point(e, f.t_cusp[k]);
        f.osc_centers[k] = evolute_point(e, f.t_cusp[k]);
        const double gap = distance(f.cusps[k], 2.0 * f.osc_centers[k] - f.m);
        if (gap > 1e-9 * scale) {
            throw std::logic_error("hat frame: cusp " + std::to_string(i) + " violates P' = 2P'' - M by " +
                                   std::to_string(gap));
        }
    }
    return f;
}

double hat_area(const Ellipse& e) noexcept { return e.c4() * kPi / (2.0 * e.a() * e.b()); }

double hat_area_numeric(const Ellipse& e, BoundaryParam u, std::size_t n) {
    const auto samples = sample_closed_curve([&](double t) { return deltoid_point(e, u, t); }, n);
    return std::abs(shoelace_area(samples));
}

HatCenterEstimate hat_center_numeric(const Ellipse& e, BoundaryParam u, std::size_t n) {
    if (n < 1000) throw GeometryError(ErrorCode::InvalidArgument, "hat_center_numeric needs at least 1000 samples");
    if (e.is_circular()) return {deltoid_point(e, u, 0.0), true};
    const auto samples = sample_closed_curve([&](double t) { return deltoid_point(e, u, t); }, n);
    return {polygon_centroid(samples).centroid, false};
}

Circle circle_K(const Ellipse& e, BoundaryParam u) {
    require_eccentric(e, "circle K");
    const Point2 m = ellipse_point(e, u.value);
    const Point2 c = midpoint(m, hat_center(e, u));
    return {c, distance(c, m)};
}

ConicImplicit circle_K_conic(const Ellipse& e, BoundaryParam u) {
    const double a = e.a(), b = e.b(), c2 = e.c2();
    return {1.0, 0.0, 1.0, -c2 * std::cos(u.value) / (2.0 * a), c2 * std::sin(u.value) / (2.0 * b),
            -0.5 * (a * a + b * b)};
}

Circle osculating_circle(const Ellipse& e, BoundaryParam u, int i) {
    require_index(i);
    require_eccentric(e, "osculating circle");
    const Point2 center = evolute_point(e, cusp_parameter(u, i));
    return {center, distance(center, ellipse_point(e, u.value))};
}

ConicImplicit osculating_circle_K1_conic(const Ellipse& e, BoundaryParam u) {
    const double a = e.a(), b = e.b(), c2 = e.c2();
    const double c3 = std::cos(u.value / 3.0), s3 = std::sin(u.value / 3.0);
    return {2.0 * a * b,
            0.0,
            2.0 * a * b,
            -4.0 * b * c2 * c3 * c3 * c3,
            -4.0 * a * c2 * s3 * s3 * s3,
            a * b * (3.0 * c2 * std::cos(2.0 * u.value / 3.0) - a * a - b * b)};
}

AffineMap rotated_similarity(const Ellipse& e, BoundaryParam u, double theta) noexcept {
    const Point2 m = ellipse_point(e, u.value);
    const AffineMap to_origin = AffineMap::translation(-m);
    const AffineMap turn = AffineMap::rotation(-theta);
    const double k = std::cos(theta);
    const AffineMap shrink = AffineMap::scaling(k, k);
    return compose(AffineMap::translation(m), compose(shrink, compose(turn, to_origin)));
}

Point2 rotated_center(const Ellipse& e, BoundaryParam u, double theta) noexcept {
    return rotated_similarity(e, u, theta).apply(hat_center(e, u));
}

std::array<Point2, 3> rotated_cusps(const Ellipse& e, BoundaryParam u, double theta) noexcept {
    const AffineMap s = rotated_similarity(e, u, theta);
    auto cusps = explicit_cusps(e, u);
    for (auto& p : cusps) p = s.apply(p);
    return cusps;
}

double rotated_hat_area(const Ellipse& e, double theta) noexcept {
    const double k = std::cos(theta);
    return k * k * hat_area(e);
}

double rotated_hat_area_numeric(const Ellipse& e, BoundaryParam u, double theta, std::size_t n) {
    const auto samples = sample_closed_curve([&](double t) { return rotated_npc_point(e, u, theta, t); }, n);
    return std::abs(shoelace_area(samples));
}

}  // namespace steinerhat
