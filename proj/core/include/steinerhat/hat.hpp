/**
 * @file hat.hpp
 * @brief The configuration attached to one boundary pole M_u: cusps, their
 *        pre-images on the ellipse, osculating-circle centers, the area
 *        center C₂, the circle K and the osculating circles K_i.
 *
 * Index convention: i = 1, 2, 3 follows t_i = -u/3 - 2π(i-1)/3 and every
 * triangle built from a frame keeps that order.
 */
#pragma once

#include <steinerhat/envelope.hpp>
#include <steinerhat/geometry.hpp>

#include <array>
#include <cstddef>

namespace steinerhat {

struct HatFrame {
    Ellipse ellipse;
    BoundaryParam u;
    std::array<double, 3> t_cusp{};
    std::array<Point2, 3> cusps{};        ///< P_i'
    std::array<Point2, 3> preimages{};    ///< P_i = P(t_i)
    std::array<Point2, 3> osc_centers{};  ///< P_i'' on the evolute
    Point2 c2{};                          ///< area center of the hat
    Point2 m{};                           ///< the pole
    bool degenerate{false};               ///< a = b: the hat is the single point -M
};

/// Cusp parameter t_i for i in 1..3 (no reduction mod 2π).
[[nodiscard]] double cusp_parameter(BoundaryParam u, int i);

/// Area center C₂ = -((a²+b²)/2) (cos u / a, sin u / b).
[[nodiscard]] Point2 hat_center(const Ellipse& e, BoundaryParam u) noexcept;

/// Cusps from their explicit trigonometric expressions in u.
[[nodiscard]] std::array<Point2, 3> explicit_cusps(const Ellipse& e, BoundaryParam u) noexcept;

/// Osculating-circle centers from their explicit expressions in u. Kept as an
/// independent cross-check of the evolute route used by build_hat_frame.
[[nodiscard]] std::array<Point2, 3> explicit_osc_centers(const Ellipse& e, BoundaryParam u) noexcept;

/**
 * Builds the frame from closed forms. The homothety P_i' = 2P_i'' - M is
 * checked on construction; a failure indicates a transcription bug and
 * raises std::logic_error. a = b yields a flagged frame, not an error.
 */
[[nodiscard]] HatFrame build_hat_frame(const Ellipse& e, BoundaryParam u);

/// c⁴π/(2ab), independent of u.
[[nodiscard]] double hat_area(const Ellipse& e) noexcept;

/// |shoelace area| of n uniform samples of the hat. Throws InsufficientSamples for n < 3.
[[nodiscard]] double hat_area_numeric(const Ellipse& e, BoundaryParam u, std::size_t n);

struct HatCenterEstimate {
    Point2 point;
    bool degenerate{false};
};

/// Green-theorem area centroid of n uniform samples. Throws InvalidArgument for n < 1000.
/// For a = b the hat has no area and the collapsed point -M is returned, flagged.
[[nodiscard]] HatCenterEstimate hat_center_numeric(const Ellipse& e, BoundaryParam u, std::size_t n);

/// Circumcircle of the pre-image triangle; MC₂ is a diameter. Throws Degenerate for a = b.
[[nodiscard]] Circle circle_K(const Ellipse& e, BoundaryParam u);

/// The implicit form x² + y² - (c² cos u / 2a) x + (c² sin u / 2b) y - (a²+b²)/2.
[[nodiscard]] ConicImplicit circle_K_conic(const Ellipse& e, BoundaryParam u);

/// Circle osculating E at P_i, centered at the evolute point of t_i and passing
/// through M and P_i'. i in 1..3; throws InvalidArgument otherwise, Degenerate for a = b.
[[nodiscard]] Circle osculating_circle(const Ellipse& e, BoundaryParam u, int i);

/// Implicit form of K_1:
/// 2ab(x²+y²) - 4bc² cos³(u/3) x - 4ac² sin³(u/3) y + ab(3c² cos(2u/3) - a² - b²).
[[nodiscard]] ConicImplicit osculating_circle_K1_conic(const Ellipse& e, BoundaryParam u);

/// Similarity p ↦ M + cos θ · Rot(-θ)(p - M) taking the hat onto the envelope of
/// the lines rotated clockwise by θ.
[[nodiscard]] AffineMap rotated_similarity(const Ellipse& e, BoundaryParam u, double theta) noexcept;

/// Area center of the rotated hat.
[[nodiscard]] Point2 rotated_center(const Ellipse& e, BoundaryParam u, double theta) noexcept;

/// Cusps of the rotated hat, index-aligned with the frame.
[[nodiscard]] std::array<Point2, 3> rotated_cusps(const Ellipse& e, BoundaryParam u, double theta) noexcept;

/// cos²θ · c⁴π/(2ab).
[[nodiscard]] double rotated_hat_area(const Ellipse& e, double theta) noexcept;

/// |shoelace area| of n samples of the rotated hat.
[[nodiscard]] double rotated_hat_area_numeric(const Ellipse& e, BoundaryParam u, double theta, std::size_t n);

}  // namespace steinerhat
