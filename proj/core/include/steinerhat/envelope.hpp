/**
 * @file envelope.hpp
 * @brief Negative pedal curves of the ellipse.
 *
 * The negative pedal curve with respect to a pole P0 is the envelope of the
 * lines L(t) through P(t) = (a cos t, b sin t) perpendicular to P(t) - P0.
 * For a boundary pole M_u the envelope is the three-cusped "hat" Δ_u(t),
 * an affine image of the Steiner hypocycloid.
 *
 * Two independent routes are provided for every envelope point: a closed
 * form, and the intersection of finitely-differenced neighbouring lines.
 * The second exists to catch errors in the first.
 */
#pragma once

#include <steinerhat/geometry.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace steinerhat {

enum class PoleKind { Interior, Boundary, Exterior };

struct PoleClassification {
    PoleKind kind{PoleKind::Interior};
    std::optional<BoundaryParam> u;  ///< set only for Boundary
};

/// Interior / boundary / exterior by the sign of the implicit value; the
/// boundary band is |x²/a² + y²/b² - 1| <= tol.abs_eps.
[[nodiscard]] PoleClassification classify_pole(const Ellipse& e, Point2 p, const Tolerance& tol = {});

class Pole {
public:
    /// Classifies `position`; a boundary result recovers u = atan2(y/b, x/a).
    [[nodiscard]] static Pole at(const Ellipse& e, Point2 position, const Tolerance& tol = {});
    /// M_u, carrying u exactly.
    [[nodiscard]] static Pole boundary(const Ellipse& e, BoundaryParam u);

    [[nodiscard]] Point2 position() const noexcept { return position_; }
    [[nodiscard]] PoleKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::optional<BoundaryParam> boundary_param() const noexcept { return u_; }

private:
    Pole(Point2 position, PoleKind kind, std::optional<BoundaryParam> u)
        : position_(position), kind_(kind), u_(u) {}

    Point2 position_;
    PoleKind kind_;
    std::optional<BoundaryParam> u_;
};

/// L(t): through P(t), normal P0 - P(t). Throws DegenerateDirection when |P(t) - P0| is negligible.
[[nodiscard]] LineEq npc_line(const Ellipse& e, const Pole& pole, double t, const Tolerance& tol = {});

/// w = ab - b x0 cos t - a y0 sin t, the denominator of the closed-form envelope.
[[nodiscard]] double envelope_denominator(const Ellipse& e, Point2 pole, double t) noexcept;

/// Closed-form envelope point of L(t). Throws WVanishes when |w| <= tol (relative to ab).
[[nodiscard]] Point2 npc_envelope_point(const Ellipse& e, const Pole& pole, double t, const Tolerance& tol = {});

using LineFamily = std::function<LineEq(double)>;

/// Intersection of family(t - h) and family(t + h). Throws ParallelLines when they do not meet.
[[nodiscard]] Point2 envelope_of_lines(const LineFamily& family, double t, double h);

/// Finite-difference oracle for npc_envelope_point; error is O(h²).
[[nodiscard]] Point2 npc_envelope_numeric(const Ellipse& e, const Pole& pole, double t, double h);

/// Closed-form hat Δ_u(t); regular for every t.
[[nodiscard]] Point2 deltoid_point(const Ellipse& e, BoundaryParam u, double t) noexcept;
/// dΔ_u/dt.
[[nodiscard]] Point2 deltoid_derivative(const Ellipse& e, BoundaryParam u, double t) noexcept;

/// S(t) = 2(cos t, -sin t) + (cos 2t, sin 2t). One traversal is clockwise, enclosing area 2π.
[[nodiscard]] Point2 steiner_hypocycloid(double t) noexcept;

/// Δ_u(t) = map(S(t + parameter_shift)), map = translate(C̄) ∘ scale(1/a, 1/b) ∘ (c²/2) ∘ rotate(u/3).
struct AffineDecomposition {
    AffineMap rotation;
    AffineMap homothety;
    AffineMap axis_scaling;
    AffineMap translation;
    AffineMap map;  ///< the composition above
    double parameter_shift{0.0};
};

[[nodiscard]] AffineDecomposition affine_decomposition(const Ellipse& e, BoundaryParam u) noexcept;

/// Hat of lines rotated clockwise by theta about P(t): the similarity
/// M + cos(theta) Rot(-theta) (Δ_u(t) - M).
[[nodiscard]] Point2 rotated_npc_point(const Ellipse& e, BoundaryParam u, double theta, double t) noexcept;

/// L(t) rotated clockwise by theta about P(t).
[[nodiscard]] LineEq rotated_npc_line(const Ellipse& e, BoundaryParam u, double theta, double t,
                                      const Tolerance& tol = {});

/// Finite-difference envelope of the rotated lines; oracle for rotated_npc_point.
[[nodiscard]] Point2 rotated_npc_numeric(const Ellipse& e, BoundaryParam u, double theta, double t, double h);

/// Parameter neighbourhoods excluded when comparing the two envelope routes.
struct SingularZones {
    double pole_radius{0.05};  ///< around t = u, where w vanishes
    double cusp_radius{0.05};  ///< around each cusp parameter -u/3 - 2πk/3
};

/// True when t lies inside an excluded neighbourhood (angles compared modulo 2π).
[[nodiscard]] bool in_singular_zone(BoundaryParam u, double t, const SingularZones& zones = {}) noexcept;

/// Smallest distance between two angles modulo 2π.
[[nodiscard]] double angular_distance(double s, double t) noexcept;

/// Closed-form envelope sampled at n parameters, skipping parameters where w vanishes.
/// Intended as a numeric probe (e.g. signed area) for interior and exterior poles.
[[nodiscard]] std::vector<Point2> sample_npc(const Ellipse& e, const Pole& pole, std::size_t n,
                                             const Tolerance& tol = {});

}  // namespace steinerhat
