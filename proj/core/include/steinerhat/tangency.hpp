/**
 * @file tangency.hpp
 * @brief Where the hat meets its ellipse: tangencies from the cubic Q,
 *        transversal crossings from the quadratic J, the evolute threshold
 *        that separates the one- and three-tangency regimes.
 *
 * Q(x) gives the abscissae of points of E other than M whose normal passes
 * through M; the hat touches E exactly there, and such a point is its own
 * pre-image. J(x) gives the abscissae of the pre-images P(t) whose hat point
 * Δ_u(t) crosses E.
 */
#pragma once

#include <steinerhat/geometry.hpp>
#include <steinerhat/loci.hpp>
#include <steinerhat/polynomial.hpp>

#include <vector>

namespace steinerhat {

struct ApolloniusHyperbola {
    ConicImplicit conic;
    /// The conic splits into lines: M on an axis, or a = b.
    bool degenerate{false};
};

/// ⟨(x,y) - M, (y/b², -x/a²)⟩ = 0. Throws DegeneratePole for M = O.
[[nodiscard]] ApolloniusHyperbola apollonius_hyperbola(const Ellipse& e, Point2 m, const Tolerance& tol = {});

/// c⁴x³ - c²Mx(a²+b²)x² - a⁴(a²-2b²)x + a⁶Mx. Throws Degenerate for a = b.
[[nodiscard]] RealPolynomial tangency_cubic(const Ellipse& e, double mx);

/// -4c⁴a⁶(a² - Mx²)[c²(a²+b²)³Mx² - a⁴(a²-2b²)³], the discriminant of Q in factored form.
[[nodiscard]] double tangency_cubic_discriminant(const Ellipse& e, double mx) noexcept;

struct EvoluteCrossing {
    double xstar{0.0};
    double ystar{0.0};
};

/// (x*, y*) with x* = a²(a²-2b²)^{3/2} / (√(a⁴-b⁴)(a²+b²)) and y* likewise.
/// Throws NoCrossings when a² < 2b²; a² = 2b² within tolerance gives (0, b).
[[nodiscard]] EvoluteCrossing evolute_crossings(const Ellipse& e, const Tolerance& tol = {});

/// (a²+b²)²x² - 2Mx c²(a²+b²)x - 4a⁴b² + Mx²(a²+b²)².
[[nodiscard]] RealPolynomial intersection_quadratic(const Ellipse& e, double mx);

/// The quartic F(x, y) in pre-image coordinates; it vanishes at P(t) whenever Δ_u(t) lies on E.
[[nodiscard]] ImplicitPoly2 tangency_quartic_F(const Ellipse& e, Point2 m);

enum class TangencyRegime { OutsideEvolute, InsideEvolute, OnEvolute };

[[nodiscard]] const char* to_string(TangencyRegime r) noexcept;

struct TangencyReport {
    std::vector<Point2> tangency_points;
    std::vector<double> tangency_params;     ///< t with P(t) = Δ_u(t) = the tangency point
    std::vector<Point2> transversal_points;  ///< Δ_u(t) on E
    std::vector<double> transversal_params;  ///< their pre-image parameters t
    std::vector<Point2> intersection_points; ///< tangencies then transversals
    TangencyRegime regime{TangencyRegime::OutsideEvolute};
    bool merged_contact{false};  ///< two Q roots closer than 1e-6·a: a 4-point contact
    int q_real_root_count{0};    ///< real roots of Q in [-a, a], with multiplicity
};

/// Throws Degenerate for a = b.
[[nodiscard]] TangencyReport hat_ellipse_intersections(const Ellipse& e, BoundaryParam u);

/// Distance from the ellipse normal line at p (on E) to m.
[[nodiscard]] double normal_line_residual(const Ellipse& e, Point2 p, Point2 m) noexcept;

/// Nearest distance from p to the hat: best of n samples, refined by golden-section search.
[[nodiscard]] double distance_to_hat(const Ellipse& e, BoundaryParam u, Point2 p, std::size_t n = 4096);

/// Point-in-region test for the evolute by winding number of n samples.
[[nodiscard]] bool inside_evolute(const Ellipse& e, Point2 p, std::size_t n = 4096);

/// Mx in (0, a) where the root count of Q in [-a, a] drops from 3 to 1, by bisection to `width`.
/// Throws NoCrossings when a² <= 2b² (there is no interior regime).
[[nodiscard]] double locate_regime_flip(const Ellipse& e, double width = 1e-12);

}  // namespace steinerhat
