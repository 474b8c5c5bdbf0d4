/**
 * @file triads.hpp
 * @brief The pre-image, cusp and osculating-center triangles of a hat frame
 *        and the relations between them: Steiner conics, perspectivity,
 *        orthology, perspectrices and center coincidences.
 */
#pragma once

#include <steinerhat/error.hpp>
#include <steinerhat/hat.hpp>
#include <steinerhat/triangle.hpp>

#include <array>
#include <utility>
#include <vector>

namespace steinerhat {

/// T = (P_1, P_2, P_3).
[[nodiscard]] Triangle preimage_triangle(const HatFrame& f) noexcept;
/// T' = (P_1', P_2', P_3').
[[nodiscard]] Triangle cusp_triangle(const HatFrame& f) noexcept;
/// T'' = (P_1'', P_2'', P_3'').
[[nodiscard]] Triangle osculating_triangle(const HatFrame& f) noexcept;

/// 3√3ab/4.
[[nodiscard]] double preimage_triangle_area(const Ellipse& e) noexcept;
/// 27√3c⁴/(16ab).
[[nodiscard]] double cusp_triangle_area(const Ellipse& e) noexcept;
/// A(T')/4.
[[nodiscard]] double osculating_triangle_area(const Ellipse& e) noexcept;

/// Ellipse through the vertices centered at the centroid. Throws DegenerateTriangle.
[[nodiscard]] ConicImplicit steiner_circumellipse(const Triangle& t, const Tolerance& tol = {});
/// Ellipse centered at the centroid tangent to the sides at their midpoints. Throws DegenerateTriangle.
[[nodiscard]] ConicImplicit steiner_inellipse(const Triangle& t, const Tolerance& tol = {});

/// Implicit Steiner circumellipse of T':
/// a²x² + b²y² + (a²+b²)(a cos u x + b sin u y) - (a²-2b²)(2a²-b²).
[[nodiscard]] ConicImplicit cusp_steiner_ellipse_conic(const Ellipse& e, BoundaryParam u);

/// Implicit circumcircle K' of T' in its expanded form (8a²b²(x²+y²) + ...).
[[nodiscard]] ConicImplicit circumcircle_Kp_conic(const Ellipse& e, BoundaryParam u);
/// K' as a circle. Throws Degenerate for a = b.
[[nodiscard]] Circle circumcircle_Kp(const Ellipse& e, BoundaryParam u);

/// Steiner point of T': ((a²-2b²) cos u / a, -(2a²-b²) sin u / b).
[[nodiscard]] Point2 cusp_steiner_point(const Ellipse& e, BoundaryParam u) noexcept;

/// Common point of three lines with the worst point-line distance.
struct Concurrence {
    Point2 point;
    double residual{0.0};
};

/**
 * Common point of three lines, taken from the right singular vector of the
 * stacked homogeneous system belonging to the smallest singular value.
 * Throws `at_infinity` when that vector has a negligible third component and
 * `failure` when the worst distance exceeds the tolerance relative to `scale`.
 */
[[nodiscard]] Concurrence concurrence(const std::array<LineEq, 3>& lines, ErrorCode failure, ErrorCode at_infinity,
                                      double scale, const Tolerance& tol = {});

/// Common point of the lines T1_i T2_i. Throws ParallelCevians or NotPerspective.
[[nodiscard]] Concurrence perspector(const Triangle& t1, const Triangle& t2, const Tolerance& tol = {});

/// First: perpendiculars from the vertices of t1 to the opposite sides of t2.
/// Second: perpendiculars from the vertices of t2 to the opposite sides of t1.
/// Throws NotOrthologic when either triple fails to concur.
[[nodiscard]] std::pair<Concurrence, Concurrence> orthology_centers(const Triangle& t1, const Triangle& t2,
                                                                    const Tolerance& tol = {});

/// Line through the meets of corresponding side lines. Throws SidesParallel
/// when fewer than two finite meets exist, NotPerspective when the meets are
/// not collinear.
[[nodiscard]] LineEq perspectrix(const Triangle& t1, const Triangle& t2, const Tolerance& tol = {});

/// Line through X2, X3 (and X4). Throws EquilateralDegenerate when X2 = X3.
[[nodiscard]] LineEq euler_line(const Triangle& t, const Tolerance& tol = {});

/// Locus of equal power. Throws ConcentricCircles.
[[nodiscard]] LineEq radical_axis(const Circle& c1, const Circle& c2, const Tolerance& tol = {});

/// Reflection of M about X4 of T, the unindexed second orthology center of (T, T').
[[nodiscard]] Point2 reflection_of_pole_about_orthocenter(const HatFrame& f);

/// |cos| of the angle between two lines.
[[nodiscard]] double line_cosine(const LineEq& l1, const LineEq& l2) noexcept;

/// Dimensionless tangency defect of a line against a conic: the discriminant
/// of the restricted quadratic over its magnitude, with the conic's monomial
/// scale at the foot point as a floor. Zero for a tangent line.
[[nodiscard]] double tangency_defect(const ConicImplicit& conic, const LineEq& line) noexcept;

/// Pairs (center of T, center of T' or T'') claimed to coincide.
struct CoincidenceRow {
    int k_base{0};
    char companion{'\''};  ///< '\'' for T', '"' for T''
    int k_companion{0};
    Point2 base;
    Point2 other;
    double distance{0.0};
};

/// The ten coincidence rows. Throws Degenerate for a = b.
[[nodiscard]] std::vector<CoincidenceRow> coincidence_table_check(const Ellipse& e, BoundaryParam u,
                                                                  const Tolerance& tol = {});

}  // namespace steinerhat
