/**
 * @file geometry.hpp
 * @brief Foundational planar geometry: points, the axis-aligned ellipse,
 *        implicit conics, circles, lines and affine maps.
 *
 * The ellipse is always centered at the origin with its major semi-axis
 * along x. Every value type here is immutable once built and every free
 * function is pure.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

namespace steinerhat {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Point2 {
    double x{0.0};
    double y{0.0};

    constexpr Point2& operator+=(Point2 o) noexcept { x += o.x; y += o.y; return *this; }
    constexpr Point2& operator-=(Point2 o) noexcept { x -= o.x; y -= o.y; return *this; }
    constexpr Point2& operator*=(double s) noexcept { x *= s; y *= s; return *this; }

    friend constexpr Point2 operator+(Point2 p, Point2 q) noexcept { return {p.x + q.x, p.y + q.y}; }
    friend constexpr Point2 operator-(Point2 p, Point2 q) noexcept { return {p.x - q.x, p.y - q.y}; }
    friend constexpr Point2 operator-(Point2 p) noexcept { return {-p.x, -p.y}; }
    friend constexpr Point2 operator*(double s, Point2 p) noexcept { return {s * p.x, s * p.y}; }
    friend constexpr Point2 operator*(Point2 p, double s) noexcept { return {s * p.x, s * p.y}; }
    friend constexpr Point2 operator/(Point2 p, double s) noexcept { return {p.x / s, p.y / s}; }
    friend constexpr bool operator==(Point2, Point2) noexcept = default;
};

[[nodiscard]] constexpr double dot(Point2 p, Point2 q) noexcept { return p.x * q.x + p.y * q.y; }
[[nodiscard]] constexpr double cross(Point2 p, Point2 q) noexcept { return p.x * q.y - p.y * q.x; }
[[nodiscard]] inline double norm(Point2 p) noexcept { return std::hypot(p.x, p.y); }
[[nodiscard]] inline double distance(Point2 p, Point2 q) noexcept { return norm(p - q); }
[[nodiscard]] constexpr Point2 midpoint(Point2 p, Point2 q) noexcept { return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)}; }
[[nodiscard]] constexpr Point2 perp(Point2 p) noexcept { return {-p.y, p.x}; }

/// Reflection of `p` through the point `center`.
[[nodiscard]] constexpr Point2 reflect(Point2 p, Point2 center) noexcept { return 2.0 * center - p; }

/// Counter-clockwise rotation of `p` by `angle` about `pivot`.
[[nodiscard]] Point2 rotate_about(Point2 p, Point2 pivot, double angle) noexcept;

/// Twice the signed area of triangle (p, q, r); positive when counter-clockwise.
[[nodiscard]] constexpr double orient2(Point2 p, Point2 q, Point2 r) noexcept { return cross(q - p, r - p); }

/**
 * Comparison policy threaded explicitly through every tolerance-sensitive call.
 * Two reals match when |x - y| <= abs_eps + rel_eps * max(|x|, |y|).
 */
struct Tolerance {
    double abs_eps{1e-9};
    double rel_eps{1e-9};

    [[nodiscard]] bool close(double x, double y) const noexcept {
        return std::abs(x - y) <= abs_eps + rel_eps * std::max(std::abs(x), std::abs(y));
    }
    [[nodiscard]] bool close(Point2 p, Point2 q) const noexcept {
        return distance(p, q) <= abs_eps + rel_eps * std::max(norm(p), norm(q));
    }
    /// `value` is negligible relative to a magnitude `scale` of the quantities that produced it.
    [[nodiscard]] bool negligible(double value, double scale = 0.0) const noexcept {
        return std::abs(value) <= abs_eps + rel_eps * std::abs(scale);
    }
    /// Throws InvalidArgument unless both epsilons are positive and finite.
    void validate() const;
};

/// Parameter u of a boundary pole M_u = (a cos u, b sin u). Any real is accepted.
struct BoundaryParam {
    double value{0.0};
    constexpr BoundaryParam() = default;
    constexpr explicit BoundaryParam(double u) : value(u) {}
};

/// Axis-aligned ellipse x²/a² + y²/b² = 1 with a >= b > 0; c² = a² - b² is derived.
class Ellipse {
public:
    Ellipse(double a, double b);

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] double c2() const noexcept { return c2_; }
    [[nodiscard]] double c4() const noexcept { return c2_ * c2_; }
    [[nodiscard]] double aspect() const noexcept { return a_ / b_; }
    [[nodiscard]] bool is_circular() const noexcept { return c2_ == 0.0; }
    [[nodiscard]] double area() const noexcept { return kPi * a_ * b_; }

    /// x²/a² + y²/b² - 1; negative inside, zero on the curve.
    [[nodiscard]] double implicit_value(Point2 p) const noexcept;

private:
    double a_;
    double b_;
    double c2_;
};

/// P(t) = (a cos t, b sin t).
[[nodiscard]] Point2 ellipse_point(const Ellipse& e, double t) noexcept;
/// Outward (unnormalized) normal (x/a², y/b²) at a point of the ellipse.
[[nodiscard]] Point2 ellipse_normal(const Ellipse& e, Point2 p) noexcept;
/// Center of curvature: (c² cos³t / a, -c² sin³t / b).
[[nodiscard]] Point2 evolute_point(const Ellipse& e, double t) noexcept;
/// 3πc⁴/(8ab).
[[nodiscard]] double evolute_area(const Ellipse& e) noexcept;

/// Line n·p + d = 0 with |n| = 1.
class LineEq {
public:
    /// Normalizes (nx, ny, d); throws DegenerateInput when the normal is zero.
    LineEq(double nx, double ny, double d);

    [[nodiscard]] static LineEq through(Point2 p, Point2 q);
    [[nodiscard]] static LineEq with_normal(Point2 normal, Point2 through);

    [[nodiscard]] double nx() const noexcept { return nx_; }
    [[nodiscard]] double ny() const noexcept { return ny_; }
    [[nodiscard]] double d() const noexcept { return d_; }
    [[nodiscard]] Point2 normal() const noexcept { return {nx_, ny_}; }
    [[nodiscard]] Point2 direction() const noexcept { return {-ny_, nx_}; }
    [[nodiscard]] double signed_distance(Point2 p) const noexcept { return nx_ * p.x + ny_ * p.y + d_; }

private:
    double nx_;
    double ny_;
    double d_;
};

/// Intersection of two lines; nullopt when |sin(angle)| <= sin_eps.
[[nodiscard]] std::optional<Point2> intersect(const LineEq& l1, const LineEq& l2, double sin_eps = 1e-14);

/// A x² + B xy + C y² + D x + E y + F = 0.
class ConicImplicit {
public:
    /// Throws DegenerateInput when A..E all vanish.
    ConicImplicit(double A, double B, double C, double D, double E, double F);
    explicit ConicImplicit(const std::array<double, 6>& coefficients);

    [[nodiscard]] const std::array<double, 6>& coefficients() const noexcept { return k_; }
    [[nodiscard]] double operator()(Point2 p) const noexcept;
    /// Gradient of the implicit function at p.
    [[nodiscard]] Point2 gradient(Point2 p) const noexcept;

    /// det of the symmetric 3x3 matrix; zero for line pairs.
    [[nodiscard]] double determinant() const noexcept;
    /// AC - B²/4; positive for ellipses, negative for hyperbolas.
    [[nodiscard]] double quadratic_discriminant() const noexcept;
    [[nodiscard]] bool is_ellipse() const noexcept;

    /// Center of a central conic; nullopt for parabolas.
    [[nodiscard]] std::optional<Point2> center() const noexcept;
    struct Axes {
        double major{0.0};
        double minor{0.0};
        Point2 major_direction{1.0, 0.0};  ///< unit vector
    };
    /// Semi-axes of a real ellipse; nullopt otherwise.
    [[nodiscard]] std::optional<Axes> semi_axes() const noexcept;
    /// Enclosed area of a real ellipse from π|det| / (AC - B²/4)^{3/2}; nullopt otherwise.
    [[nodiscard]] std::optional<double> area() const noexcept;

    /// Scaled to unit coefficient norm with the first significant coefficient positive.
    [[nodiscard]] ConicImplicit normalized() const;
    /// Largest |coefficient x monomial| at p; used to scale residuals.
    [[nodiscard]] double monomial_scale(Point2 p) const noexcept;

private:
    std::array<double, 6> k_;
};

struct Circle {
    Point2 center;
    double radius{0.0};

    [[nodiscard]] ConicImplicit to_conic() const;
    /// |p - center|² - r².
    [[nodiscard]] double power(Point2 p) const noexcept;
    /// Unsigned distance from p to the circle.
    [[nodiscard]] double distance_to(Point2 p) const noexcept { return std::abs(distance(p, center) - radius); }

    /// Recovers a circle from x² + y² + ... form (A = C, B = 0); throws DegenerateInput otherwise.
    [[nodiscard]] static Circle from_conic(const ConicImplicit& conic);
};

/// Circumscribed circle; throws CollinearPoints when the points are collinear within `tol`.
[[nodiscard]] Circle circle_through(Point2 p1, Point2 p2, Point2 p3, const Tolerance& tol = {});

/// Real intersection points of two circles (0, 1 or 2 points).
[[nodiscard]] std::vector<Point2> circle_intersections(const Circle& c1, const Circle& c2);

/// p ↦ L p + t with L stored row-major.
class AffineMap {
public:
    constexpr AffineMap() = default;
    constexpr AffineMap(std::array<double, 4> linear, Point2 translation)
        : linear_(linear), translation_(translation) {}

    [[nodiscard]] static AffineMap identity() noexcept { return {}; }
    /// Counter-clockwise rotation about the origin.
    [[nodiscard]] static AffineMap rotation(double angle) noexcept;
    [[nodiscard]] static AffineMap scaling(double sx, double sy) noexcept;
    [[nodiscard]] static AffineMap translation(Point2 offset) noexcept;

    [[nodiscard]] const std::array<double, 4>& linear() const noexcept { return linear_; }
    [[nodiscard]] Point2 offset() const noexcept { return translation_; }
    [[nodiscard]] double determinant() const noexcept;
    [[nodiscard]] Point2 apply(Point2 p) const noexcept;

private:
    std::array<double, 4> linear_{1.0, 0.0, 0.0, 1.0};
    Point2 translation_{};
};

/// compose(f, g) = f ∘ g.
[[nodiscard]] AffineMap compose(const AffineMap& f, const AffineMap& g) noexcept;

}  // namespace steinerhat
