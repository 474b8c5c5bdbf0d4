#include <steinerhat/envelope.hpp>
#include <steinerhat/error.hpp>

#include <cmath>

namespace steinerhat {

PoleClassification classify_pole(const Ellipse& e, Point2 p, const Tolerance& tol) {
    const double v = e.implicit_value(p);
    if (std::abs(v) <= tol.abs_eps) {
        return {PoleKind::Boundary, BoundaryParam{std::atan2(p.y / e.b(), p.x / e.a())}};
    }
    return {v < 0.0 ? PoleKind::Interior : PoleKind::Exterior, std::nullopt};
}

Pole Pole::at(const Ellipse& e, Point2 position, const Tolerance& tol) {
    const auto cls = classify_pole(e, position, tol);
    return {position, cls.kind, cls.u};
}

Pole Pole::boundary(const Ellipse& e, BoundaryParam u) {
    return {ellipse_point(e, u.value), PoleKind::Boundary, u};
}

LineEq npc_line(const Ellipse& e, const Pole& pole, double t, const Tolerance& tol) {
    const Point2 p = ellipse_point(e, t);
    const Point2 n = pole.position() - p;
    if (tol.negligible(norm(n), e.a())) {
        throw GeometryError(ErrorCode::DegenerateDirection, "P(t) coincides with the pole");
    }
    return LineEq::with_normal(n, p);
}

double envelope_denominator(const Ellipse& e, Point2 pole, double t) noexcept {
    return e.a() * e.b() - e.b() * pole.x * std::cos(t) - e.a() * pole.y * std::sin(t);
}

Point2 npc_envelope_point(const Ellipse& e, const Pole& pole, double t, const Tolerance& tol) {
    const double a = e.a();
    const double b = e.b();
    const double c2 = e.c2();
    const double x0 = pole.position().x;
    const double y0 = pole.position().y;
    const double w = envelope_denominator(e, pole.position(), t);
    if (tol.negligible(w, a * b)) {
        throw GeometryError(ErrorCode::WVanishes, "envelope denominator vanishes at this parameter");
    }
    const double ct = std::cos(t), st = std::sin(t);
    const double x = (a * y0 * st - a * b) * x0 - b * y0 * y0 * ct - c2 * y0 * std::sin(2.0 * t) +
                     0.25 * b * ((5.0 * a * a - b * b) * ct - c2 * std::cos(3.0 * t));
    const double y = -a * x0 * x0 * st + (b * y0 * ct + c2 * std::sin(2.0 * t)) * x0 - a * b * y0 -
                     0.25 * a * ((a * a - 5.0 * b * b) * st + c2 * std::sin(3.0 * t));
    return {x / w, y / w};
}

Point2 envelope_of_lines(const LineFamily& family, double t, double h) {
    const LineEq before = family(t - h);
    const LineEq after = family(t + h);
    const auto p = intersect(before, after, 1e-15);
    if (!p) throw GeometryError(ErrorCode::ParallelLines, "neighbouring lines are parallel");
    return *p;
}

Point2 npc_envelope_numeric(const Ellipse& e, const Pole& pole, double t, double h) {
    return envelope_of_lines([&](double s) { return npc_line(e, pole, s, Tolerance{1e-15, 1e-15}); }, t, h);
}

Point2 deltoid_point(const Ellipse& e, BoundaryParam u, double t) noexcept {
    const double a = e.a(), b = e.b(), c2 = e.c2();
    const double uu = u.value;
    const double ct = std::cos(t);
    return {(c2 * (1.0 + std::cos(t + uu)) * ct - a * a * std::cos(uu)) / a,
            (c2 * ct * std::sin(t + uu) - c2 * std::sin(t) - a * a * std::sin(uu)) / b};
}

Point2 deltoid_derivative(const Ellipse& e, BoundaryParam u, double t) noexcept {
    const double c2 = e.c2();
    const double uu = u.value;
    return {-c2 * (std::sin(2.0 * t + uu) + std::sin(t)) / e.a(),
            c2 * (std::cos(2.0 * t + uu) - std::cos(t)) / e.b()};
}

Point2 steiner_hypocycloid(double t) noexcept {
    return {2.0 * std::cos(t) + std::cos(2.0 * t), -2.0 * std::sin(t) + std::sin(2.0 * t)};
}

AffineDecomposition affine_decomposition(const Ellipse& e, BoundaryParam u) noexcept {
    const double a = e.a(), b = e.b();
    const double half_c2 = 0.5 * e.c2();
    const double s = a * a + b * b;
    AffineDecomposition out;
    out.rotation = AffineMap::rotation(u.value / 3.0);
    out.homothety = AffineMap::scaling(half_c2, half_c2);
    out.axis_scaling = AffineMap::scaling(1.0 / a, 1.0 / b);
    out.translation = AffineMap::translation({-s / (2.0 * a) * std::cos(u.value), -s / (2.0 * b) * std::sin(u.value)});
    out.map = compose(out.translation, compose(out.axis_scaling, compose(out.homothety, out.rotation)));
    out.parameter_shift = u.value / 3.0;
    return out;
}

Point2 rotated_npc_point(const Ellipse& e, BoundaryParam u, double theta, double t) noexcept {
    const Point2 m = ellipse_point(e, u.value);
    const Point2 d = deltoid_point(e, u, t);
    return m + std::cos(theta) * (rotate_about(d, m, -theta) - m);
}

LineEq rotated_npc_line(const Ellipse& e, BoundaryParam u, double theta, double t, const Tolerance& tol) {
    const Point2 m = ellipse_point(e, u.value);
    const Point2 p = ellipse_point(e, t);
    const Point2 n = m - p;
    if (tol.negligible(norm(n), e.a())) {
        throw GeometryError(ErrorCode::DegenerateDirection, "P(t) coincides with the pole");
    }
    return LineEq::with_normal(rotate_about(n, {}, -theta), p);
}

Point2 rotated_npc_numeric(const Ellipse& e, BoundaryParam u, double theta, double t, double h) {
    return envelope_of_lines(
        [&](double s) { return rotated_npc_line(e, u, theta, s, Tolerance{1e-15, 1e-15}); }, t, h);
}

double angular_distance(double s, double t) noexcept {
    const double d = std::remainder(s - t, kTwoPi);
    return std::abs(d);
}

bool in_singular_zone(BoundaryParam u, double t, const SingularZones& zones) noexcept {
    if (angular_distance(t, u.value) < zones.pole_radius) return true;
    for (int k = 0; k < 3; ++k) {
        const double cusp = -u.value / 3.0 - kTwoPi * k / 3.0;
        if (angular_distance(t, cusp) < zones.cusp_radius) return true;
    }
    return false;
}

std::vector<Point2> sample_npc(const Ellipse& e, const Pole& pole, std::size_t n, const Tolerance& tol) {
    std::vector<Point2> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        if (tol.negligible(envelope_denominator(e, pole.position(), t), e.a() * e.b())) continue;
        out.push_back(npc_envelope_point(e, pole, t, tol));
    }
    return out;
}

}  // namespace steinerhat
