#include <steinerhat/error.hpp>
#include <steinerhat/geometry.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace steinerhat {

Point2 rotate_about(Point2 p, Point2 pivot, double angle) noexcept {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Point2 d = p - pivot;
    return pivot + Point2{c * d.x - s * d.y, s * d.x + c * d.y};
}

void Tolerance::validate() const {
    if (!(abs_eps > 0.0) || !(rel_eps > 0.0) || !std::isfinite(abs_eps) || !std::isfinite(rel_eps)) {
        throw GeometryError(ErrorCode::InvalidArgument, "tolerance epsilons must be positive and finite");
    }
}

Ellipse::Ellipse(double a, double b) : a_(a), b_(b), c2_(a * a - b * b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(b > 0.0) || a < b) {
        throw GeometryError(ErrorCode::InvalidArgument,
                            "ellipse requires a >= b > 0 (got a=" + std::to_string(a) +
                                ", b=" + std::to_string(b) + ")");
    }
    if (a == b) c2_ = 0.0;
}

double Ellipse::implicit_value(Point2 p) const noexcept {
    return p.x * p.x / (a_ * a_) + p.y * p.y / (b_ * b_) - 1.0;
}

Point2 ellipse_point(const Ellipse& e, double t) noexcept {
    return {e.a() * std::cos(t), e.b() * std::sin(t)};
}

Point2 ellipse_normal(const Ellipse& e, Point2 p) noexcept {
    return {p.x / (e.a() * e.a()), p.y / (e.b() * e.b())};
}

Point2 evolute_point(const Ellipse& e, double t) noexcept {
    const double c = std::cos(t);
    const double s = std::sin(t);
    return {e.c2() * c * c * c / e.a(), -e.c2() * s * s * s / e.b()};
}

double evolute_area(const Ellipse& e) noexcept {
    return 3.0 * kPi * e.c4() / (8.0 * e.a() * e.b());
}

// ---------------------------------------------------------------------------
// Lines

LineEq::LineEq(double nx, double ny, double d) {
    const double n = std::hypot(nx, ny);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw GeometryError(ErrorCode::DegenerateInput, "line normal vanishes");
    }
    nx_ = nx / n;
    ny_ = ny / n;
    d_ = d / n;
}

LineEq LineEq::through(Point2 p, Point2 q) {
    const Point2 n = perp(q - p);
    return {n.x, n.y, -dot(n, p)};
}

LineEq LineEq::with_normal(Point2 normal, Point2 through) {
    return {normal.x, normal.y, -dot(normal, through)};
}

std::optional<Point2> intersect(const LineEq& l1, const LineEq& l2, double sin_eps) {
    const double det = l1.nx() * l2.ny() - l1.ny() * l2.nx();
    if (std::abs(det) <= sin_eps) return std::nullopt;
    return Point2{(l1.ny() * l2.d() - l2.ny() * l1.d()) / det,
                  (l2.nx() * l1.d() - l1.nx() * l2.d()) / det};
}

// ---------------------------------------------------------------------------
// Conics

ConicImplicit::ConicImplicit(double A, double B, double C, double D, double E, double F)
    : ConicImplicit(std::array<double, 6>{A, B, C, D, E, F}) {}

ConicImplicit::ConicImplicit(const std::array<double, 6>& coefficients) : k_(coefficients) {
    for (double v : k_) {
        if (!std::isfinite(v)) throw GeometryError(ErrorCode::DegenerateInput, "non-finite conic coefficient");
    }
    if (k_[0] == 0.0 && k_[1] == 0.0 && k_[2] == 0.0 && k_[3] == 0.0 && k_[4] == 0.0) {
        throw GeometryError(ErrorCode::DegenerateInput, "conic has no non-constant term");
    }
}

double ConicImplicit::operator()(Point2 p) const noexcept {
    const auto& [A, B, C, D, E, F] = k_;
    return A * p.x * p.x + B * p.x * p.y + C * p.y * p.y + D * p.x + E * p.y + F;
}

Point2 ConicImplicit::gradient(Point2 p) const noexcept {
    const auto& [A, B, C, D, E, F] = k_;
    return {2.0 * A * p.x + B * p.y + D, B * p.x + 2.0 * C * p.y + E};
}

double ConicImplicit::determinant() const noexcept {
    const auto& [A, B, C, D, E, F] = k_;
    const double b = 0.5 * B, d = 0.5 * D, e = 0.5 * E;
    return A * (C * F - e * e) - b * (b * F - e * d) + d * (b * e - C * d);
}

double ConicImplicit::quadratic_discriminant() const noexcept {
    return k_[0] * k_[2] - 0.25 * k_[1] * k_[1];
}

bool ConicImplicit::is_ellipse() const noexcept {
    const double delta = quadratic_discriminant();
    if (!(delta > 0.0)) return false;
    // Real (non-empty) ellipse: the determinant has the opposite sign of A.
    return determinant() * k_[0] < 0.0;
}

std::optional<Point2> ConicImplicit::center() const noexcept {
    const auto& [A, B, C, D, E, F] = k_;
    const double det = 4.0 * A * C - B * B;
    if (det == 0.0) return std::nullopt;
    return Point2{(B * E - 2.0 * C * D) / det, (B * D - 2.0 * A * E) / det};
}

std::optional<ConicImplicit::Axes> ConicImplicit::semi_axes() const noexcept {
    if (!is_ellipse()) return std::nullopt;
    const auto& [A, B, C, D, E, F] = k_;
    const Point2 c = *center();
    const double f0 = (*this)(c);
    // Eigen-decomposition of [[A, B/2], [B/2, C]].
    const double mean = 0.5 * (A + C);
    const double rad = std::hypot(0.5 * (A - C), 0.5 * B);
    const double lmin = mean - rad;  // smallest eigenvalue -> longest axis
    const double lmax = mean + rad;
    Axes axes;
    axes.major = std::sqrt(-f0 / lmin);
    axes.minor = std::sqrt(-f0 / lmax);
    // Both columns of the adjugate span the eigenspace; the longer one is the stable choice.
    const Point2 v1{0.5 * B, lmin - A};
    const Point2 v2{lmin - C, 0.5 * B};
    Point2 dir = norm(v1) >= norm(v2) ? v1 : v2;
    if (norm(dir) == 0.0) dir = (A <= C) ? Point2{1.0, 0.0} : Point2{0.0, 1.0};
    axes.major_direction = dir / norm(dir);
    return axes;
}

std::optional<double> ConicImplicit::area() const noexcept {
    if (!is_ellipse()) return std::nullopt;
    const double delta = quadratic_discriminant();
    return kPi * std::abs(determinant()) / (delta * std::sqrt(delta));
}

ConicImplicit ConicImplicit::normalized() const {
    double n = 0.0;
    for (double v : k_) n += v * v;
    n = std::sqrt(n);
    double sign = 1.0;
    for (double v : k_) {
        if (std::abs(v) > 1e-12 * n) {
            sign = v > 0.0 ? 1.0 : -1.0;
            break;
        }
    }
    std::array<double, 6> out{};
    for (std::size_t i = 0; i < 6; ++i) out[i] = sign * k_[i] / n;
    return ConicImplicit(out);
}

double ConicImplicit::monomial_scale(Point2 p) const noexcept {
    const auto& [A, B, C, D, E, F] = k_;
    return std::max({std::abs(A * p.x * p.x), std::abs(B * p.x * p.y), std::abs(C * p.y * p.y),
                     std::abs(D * p.x), std::abs(E * p.y), std::abs(F)});
}

// ---------------------------------------------------------------------------
// Circles

ConicImplicit Circle::to_conic() const {
    return {1.0, 0.0, 1.0, -2.0 * center.x, -2.0 * center.y,
            center.x * center.x + center.y * center.y - radius * radius};
}

double Circle::power(Point2 p) const noexcept {
    const Point2 d = p - center;
    return dot(d, d) - radius * radius;
}

Circle Circle::from_conic(const ConicImplicit& conic) {
    const auto& [A, B, C, D, E, F] = conic.coefficients();
    const double scale = std::max(std::abs(A), std::abs(C));
    if (scale == 0.0 || std::abs(A - C) > 1e-12 * scale || std::abs(B) > 1e-12 * scale) {
        throw GeometryError(ErrorCode::DegenerateInput, "conic is not a circle");
    }
    const Point2 c{-D / (2.0 * A), -E / (2.0 * A)};
    const double r2 = dot(c, c) - F / A;
    if (r2 < 0.0) throw GeometryError(ErrorCode::DegenerateInput, "circle has imaginary radius");
    return {c, std::sqrt(r2)};
}

Circle circle_through(Point2 p1, Point2 p2, Point2 p3, const Tolerance& tol) {
    const Point2 u = p2 - p1;
    const Point2 v = p3 - p1;
    const double det = 2.0 * cross(u, v);
    const double scale = std::max({dot(u, u), dot(v, v), dot(p3 - p2, p3 - p2)});
    if (tol.negligible(det, scale)) {
        throw GeometryError(ErrorCode::CollinearPoints, "points are collinear");
    }
    const double uu = dot(u, u);
    const double vv = dot(v, v);
    const Point2 offset{(v.y * uu - u.y * vv) / det, (u.x * vv - v.x * uu) / det};
    return {p1 + offset, norm(offset)};
}

std::vector<Point2> circle_intersections(const Circle& c1, const Circle& c2) {
    const Point2 d = c2.center - c1.center;
    const double dist = norm(d);
    if (dist == 0.0) return {};
    const double along = (dist * dist + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * dist);
    const double h2 = c1.radius * c1.radius - along * along;
    const Point2 unit = d / dist;
    const Point2 base = c1.center + along * unit;
    if (h2 < 0.0) {
        if (h2 > -1e-12 * c1.radius * c1.radius) return {base};
        return {};
    }
    const double h = std::sqrt(h2);
    if (h == 0.0) return {base};
    return {base + h * perp(unit), base - h * perp(unit)};
}

// ---------------------------------------------------------------------------
// Affine maps

AffineMap AffineMap::rotation(double angle) noexcept {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {{c, -s, s, c}, {}};
}

AffineMap AffineMap::scaling(double sx, double sy) noexcept { return {{sx, 0.0, 0.0, sy}, {}}; }

AffineMap AffineMap::translation(Point2 offset) noexcept { return {{1.0, 0.0, 0.0, 1.0}, offset}; }

double AffineMap::determinant() const noexcept {
    return linear_[0] * linear_[3] - linear_[1] * linear_[2];
}

Point2 AffineMap::apply(Point2 p) const noexcept {
    return {linear_[0] * p.x + linear_[1] * p.y + translation_.x,
            linear_[2] * p.x + linear_[3] * p.y + translation_.y};
}

AffineMap compose(const AffineMap& f, const AffineMap& g) noexcept {
    const auto& F = f.linear();
    const auto& G = g.linear();
    const std::array<double, 4> L{F[0] * G[0] + F[1] * G[2], F[0] * G[1] + F[1] * G[3],
                                  F[2] * G[0] + F[3] * G[2], F[2] * G[1] + F[3] * G[3]};
    const Point2 t = f.apply(g.offset());
    return {L, t};
}

}  // namespace steinerhat
