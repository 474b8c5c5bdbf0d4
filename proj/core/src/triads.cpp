#include <steinerhat/error.hpp>
#include <steinerhat/triads.hpp>
#include <steinerhat/triangle_centers.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace steinerhat {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

double vertex_scale(const Triangle& t1, const Triangle& t2) {
    double s = 0.0;
    for (std::size_t i = 0; i < 3; ++i) s = std::max({s, norm(t1[i]), norm(t2[i])});
    return s;
}

// Side line opposite vertex i.
LineEq side(const Triangle& t, std::size_t i) { return LineEq::through(t[(i + 1) % 3], t[(i + 2) % 3]); }

// Centered ellipse (p - g)ᵀ Q (p - g) = r² with Q = (F Fᵀ)⁻¹ and F the affine
// image of the unit equilateral frame.
ConicImplicit steiner_conic(const Triangle& t, double r2, const Tolerance& tol) {
    require_nondegenerate(t, tol);
    const Point2 g = t.centroid();
    const Point2 f1 = t[0] - g;
    const Point2 f2 = (t[1] - t[2]) / kSqrt3;
    // F Fᵀ for F = [f1 f2] (columns).
    const double m11 = f1.x * f1.x + f2.x * f2.x;
    const double m12 = f1.x * f1.y + f2.x * f2.y;
    const double m22 = f1.y * f1.y + f2.y * f2.y;
    const double det = m11 * m22 - m12 * m12;
    const double q11 = m22 / det, q12 = -m12 / det, q22 = m11 / det;
    return {q11,
            2.0 * q12,
            q22,
            -2.0 * (q11 * g.x + q12 * g.y),
            -2.0 * (q12 * g.x + q22 * g.y),
            q11 * g.x * g.x + 2.0 * q12 * g.x * g.y + q22 * g.y * g.y - r2};
}

}  // namespace

Triangle preimage_triangle(const HatFrame& f) noexcept { return Triangle(f.preimages); }
Triangle cusp_triangle(const HatFrame& f) noexcept { return Triangle(f.cusps); }
Triangle osculating_triangle(const HatFrame& f) noexcept { return Triangle(f.osc_centers); }

double preimage_triangle_area(const Ellipse& e) noexcept { return 3.0 * kSqrt3 * e.a() * e.b() / 4.0; }
double cusp_triangle_area(const Ellipse& e) noexcept { return 27.0 * kSqrt3 * e.c4() / (16.0 * e.a() * e.b()); }
double osculating_triangle_area(const Ellipse& e) noexcept { return cusp_triangle_area(e) / 4.0; }

ConicImplicit steiner_circumellipse(const Triangle& t, const Tolerance& tol) { return steiner_conic(t, 1.0, tol); }
ConicImplicit steiner_inellipse(const Triangle& t, const Tolerance& tol) { return steiner_conic(t, 0.25, tol); }

ConicImplicit cusp_steiner_ellipse_conic(const Ellipse& e, BoundaryParam u) {
    const double a = e.a(), b = e.b();
    const double a2 = a * a, b2 = b * b;
    return {a2, 0.0, b2, (a2 + b2) * a * std::cos(u.value), (a2 + b2) * b * std::sin(u.value),
            -(a2 - 2.0 * b2) * (2.0 * a2 - b2)};
}

ConicImplicit circumcircle_Kp_conic(const Ellipse& e, BoundaryParam u) {
    const double a = e.a(), b = e.b(), c2 = e.c2();
    const double a2 = a * a, b2 = b * b, a4 = a2 * a2, b4 = b2 * b2;
    const double lead = 8.0 * a2 * b2;
    return {lead,
            0.0,
            lead,
            2.0 * a * std::cos(u.value) * (3.0 * a4 - 2.0 * a2 * b2 + 7.0 * b4),
            2.0 * b * std::sin(u.value) * (7.0 * a4 - 2.0 * a2 * b2 + 3.0 * b4),
            -(a2 + b2) * (c2 * (a2 + b2) * std::cos(2.0 * u.value) + 5.0 * a4 - 14.0 * a2 * b2 + 5.0 * b4)};
}

Circle circumcircle_Kp(const Ellipse& e, BoundaryParam u) {
    if (e.is_circular()) throw GeometryError(ErrorCode::Degenerate, "circumcircle of the cusps is undefined for a = b");
    return Circle::from_conic(circumcircle_Kp_conic(e, u));
}

Point2 cusp_steiner_point(const Ellipse& e, BoundaryParam u) noexcept {
    const double a2 = e.a() * e.a(), b2 = e.b() * e.b();
    return {(a2 - 2.0 * b2) * std::cos(u.value) / e.a(), -(2.0 * a2 - b2) * std::sin(u.value) / e.b()};
}

Concurrence concurrence(const std::array<LineEq, 3>& lines, ErrorCode failure, ErrorCode at_infinity, double scale,
                        const Tolerance& tol) {
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i) {
        const auto& l = lines[static_cast<std::size_t>(i)];
        m.row(i) << l.nx(), l.ny(), l.d();
    }
    const Eigen::JacobiSVD<Eigen::Matrix3d> svd(m, Eigen::ComputeFullV);
    const Eigen::Vector3d v = svd.matrixV().col(2);
    if (std::abs(v.z()) <= 1e-12 * v.norm()) {
        throw GeometryError(at_infinity, "lines meet at infinity");
    }
    Concurrence out{{v.x() / v.z(), v.y() / v.z()}, 0.0};
    for (const auto& l : lines) out.residual = std::max(out.residual, std::abs(l.signed_distance(out.point)));
    if (!tol.negligible(out.residual, std::max(scale, norm(out.point)))) {
        throw GeometryError(failure, "lines are not concurrent (worst distance " + std::to_string(out.residual) + ")");
    }
    return out;
}

Concurrence perspector(const Triangle& t1, const Triangle& t2, const Tolerance& tol) {
    const std::array<LineEq, 3> cevians{LineEq::through(t1[0], t2[0]), LineEq::through(t1[1], t2[1]),
                                        LineEq::through(t1[2], t2[2])};
    return concurrence(cevians, ErrorCode::NotPerspective, ErrorCode::ParallelCevians, vertex_scale(t1, t2), tol);
}

std::pair<Concurrence, Concurrence> orthology_centers(const Triangle& t1, const Triangle& t2, const Tolerance& tol) {
    const auto drop = [](const Triangle& from, const Triangle& onto) {
        std::array<LineEq, 3> out{LineEq(1, 0, 0), LineEq(1, 0, 0), LineEq(1, 0, 0)};
        for (std::size_t i = 0; i < 3; ++i) {
            out[i] = LineEq::with_normal(onto[(i + 2) % 3] - onto[(i + 1) % 3], from[i]);
        }
        return out;
    };
    const double scale = vertex_scale(t1, t2);
    return {concurrence(drop(t1, t2), ErrorCode::NotOrthologic, ErrorCode::NotOrthologic, scale, tol),
            concurrence(drop(t2, t1), ErrorCode::NotOrthologic, ErrorCode::NotOrthologic, scale, tol)};
}

LineEq perspectrix(const Triangle& t1, const Triangle& t2, const Tolerance& tol) {
    std::vector<Point2> meets;
    Point2 parallel_direction{};
    for (std::size_t i = 0; i < 3; ++i) {
        const LineEq s1 = side(t1, i);
        if (auto p = intersect(s1, side(t2, i), 1e-12)) {
            meets.push_back(*p);
        } else {
            parallel_direction = s1.direction();
        }
    }
    if (meets.size() < 2) throw GeometryError(ErrorCode::SidesParallel, "perspectrix lies at infinity");

    double scale = vertex_scale(t1, t2);
    for (const auto& p : meets) scale = std::max(scale, norm(p));
    std::size_t i0 = 0, i1 = 1;
    for (std::size_t i = 0; i < meets.size(); ++i) {
        for (std::size_t j = i + 1; j < meets.size(); ++j) {
            if (distance(meets[i], meets[j]) > distance(meets[i0], meets[i1])) {
                i0 = i;
                i1 = j;
            }
        }
    }
    if (tol.negligible(distance(meets[i0], meets[i1]), scale)) {
        throw GeometryError(ErrorCode::NotPerspective, "side meets coincide; perspectrix undetermined");
    }
    const LineEq line = LineEq::through(meets[i0], meets[i1]);
    double residual = 0.0;
    if (meets.size() == 3) {
        for (const auto& p : meets) residual = std::max(residual, std::abs(line.signed_distance(p)));
    } else {
        // The third meet is the point at infinity along the parallel sides.
        residual = std::abs(cross(line.direction(), parallel_direction)) * scale;
    }
    if (!tol.negligible(residual, scale)) {
        throw GeometryError(ErrorCode::NotPerspective, "side meets are not collinear");
    }
    return line;
}

LineEq euler_line(const Triangle& t, const Tolerance& tol) {
    const Point2 x2 = triangle_center(t, 2, tol);
    const Point2 x3 = triangle_center(t, 3, tol);
    if (tol.negligible(distance(x2, x3), t.diameter())) {
        throw GeometryError(ErrorCode::EquilateralDegenerate, "Euler line is undefined for an equilateral triangle");
    }
    return LineEq::through(x2, x3);
}

LineEq radical_axis(const Circle& c1, const Circle& c2, const Tolerance& tol) {
    const Point2 d = c2.center - c1.center;
    if (tol.negligible(norm(d), std::max(c1.radius, c2.radius))) {
        throw GeometryError(ErrorCode::ConcentricCircles, "concentric circles have no radical axis");
    }
    return {2.0 * d.x, 2.0 * d.y,
            dot(c1.center, c1.center) - dot(c2.center, c2.center) - c1.radius * c1.radius + c2.radius * c2.radius};
}

Point2 reflection_of_pole_about_orthocenter(const HatFrame& f) {
    return reflect(f.m, triangle_center(preimage_triangle(f), 4));
}

double line_cosine(const LineEq& l1, const LineEq& l2) noexcept { return std::abs(dot(l1.normal(), l2.normal())); }

double tangency_defect(const ConicImplicit& conic, const LineEq& line) noexcept {
    const auto& [A, B, C, D, E, F] = conic.coefficients();
    const Point2 p0 = -line.d() * line.normal();
    const Point2 dir = line.direction();
    const double alpha = A * dir.x * dir.x + B * dir.x * dir.y + C * dir.y * dir.y;
    const double beta = dot(conic.gradient(p0), dir);
    const double gamma = conic(p0);
    const double disc = beta * beta - 4.0 * alpha * gamma;
    // The conic's own monomial scale keeps the ratio meaningful when p0 sits
    // on the touching point, where beta and gamma both vanish.
    const double mag = beta * beta + 4.0 * std::abs(alpha) * (std::abs(gamma) + conic.monomial_scale(p0));
    return mag == 0.0 ? 0.0 : disc / mag;
}

std::vector<CoincidenceRow> coincidence_table_check(const Ellipse& e, BoundaryParam u, const Tolerance& tol) {
    if (e.is_circular()) throw GeometryError(ErrorCode::Degenerate, "triangle centers are undefined for a = b");
    struct Spec {
        int base;
        char companion;
        int other;
    };
    static constexpr std::array<Spec, 10> rows{{{3, '"', 2},
                                                {4, '"', 671},
                                                {5, '"', 115},
                                                {20, '"', 99},
                                                {76, '"', 598},
                                                {98, '\'', 2},
                                                {114, '\'', 230},
                                                {382, '"', 148},
                                                {548, '"', 620},
                                                {550, '"', 2482}}};
    const HatFrame f = build_hat_frame(e, u);
    const Triangle t = preimage_triangle(f);
    const Triangle tp = cusp_triangle(f);
    const Triangle tpp = osculating_triangle(f);
    std::vector<CoincidenceRow> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        CoincidenceRow row{r.base, r.companion, r.other, {}, {}, 0.0};
        row.base = triangle_center(t, r.base, tol);
        row.other = triangle_center(r.companion == '"' ? tpp : tp, r.other, tol);
        row.distance = distance(row.base, row.other);
        out.push_back(row);
    }
    return out;
}

}  // namespace steinerhat
