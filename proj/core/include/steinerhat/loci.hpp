/**
 * @file loci.hpp
 * @brief Loci traced as the pole revolves: the cusp locus C(v) (parametric
 *        and sextic implicit form), the C₂ ellipse, and their crossings of E.
 *
 * Cusp i of the frame at pole parameter u sits at C(u + 2π(i-1)), so one full
 * period v ∈ [0, 6π) of the locus covers all three cusps over one revolution.
 */
#pragma once

#include <steinerhat/geometry.hpp>

#include <array>
#include <cstddef>
#include <vector>

namespace steinerhat {

/// Bivariate polynomial Σ c_ij x^i y^j with i + j <= 6.
class ImplicitPoly2 {
public:
    static constexpr int kMaxDegree = 6;

    ImplicitPoly2() = default;

    /// Throws InvalidArgument when i + j exceeds kMaxDegree or either is negative.
    void set(int i, int j, double c);
    [[nodiscard]] double coefficient(int i, int j) const noexcept;
    [[nodiscard]] int degree() const noexcept;

    [[nodiscard]] double operator()(Point2 p) const noexcept;
    /// Largest |c_ij x^i y^j| at p.
    [[nodiscard]] double monomial_scale(Point2 p) const noexcept;
    /// |f(p)| / monomial_scale(p); zero when every monomial vanishes.
    [[nodiscard]] double scaled_residual(Point2 p) const noexcept;

private:
    std::array<std::array<double, kMaxDegree + 1>, kMaxDegree + 1> c_{};
};

/// (3c²/2)(cos(v/3)/a, sin(v/3)/b) - ((a²+b²)/2)(cos v / a, sin v / b); period 6π.
[[nodiscard]] Point2 cusp_locus_point(const Ellipse& e, double v) noexcept;

/// The degree-6 implicit equation of the cusp locus. Throws Degenerate for a = b.
[[nodiscard]] ImplicitPoly2 cusp_locus_implicit(const Ellipse& e);

/// W_j = (±a√(a²+3b²), ±b√(3a²+b²)) / (2√(a²+b²)), quadrant order (+,+), (-,+), (-,-), (+,-).
/// Throws Degenerate for a = b.
[[nodiscard]] std::array<Point2, 4> c2_crossings(const Ellipse& e);

/// Z_i = (±a², ±b²)/√(a²+b²), same quadrant order. Throws Degenerate for a = b.
[[nodiscard]] std::array<Point2, 4> cusp_crossings(const Ellipse& e);

/// x²/A² + y²/B² - 1 with A = (a²+b²)/(2a), B = (a²+b²)/(2b).
[[nodiscard]] ConicImplicit c2_locus(const Ellipse& e);

/// A pole parameter at which a tracked point crosses E, with the pre-image it meets.
struct CrossingEvent {
    double u{0.0};        ///< pole parameter of the crossing
    int index{0};         ///< 1..3, cusp / pre-image label under continuous tracking
    Point2 point;         ///< the crossing point on E
    double coincidence{0.0};  ///< distance to the matched pre-image
    double ellipse_residual{0.0};  ///< |x²/a² + y²/b² - 1| at the event point
};

/**
 * Crossings of C₂(u) with E for u in [u0, u1): sign changes of the implicit
 * value on a uniform grid of `steps` cells, refined by bisection. Each event
 * is matched to the nearest pre-image P_i(u).
 */
[[nodiscard]] std::vector<CrossingEvent> solve_c2_crossings(const Ellipse& e, double u0, double u1,
                                                            std::size_t steps = 4096);

/**
 * Crossings of each cusp P_i'(u) with E for u in [u0, u1), matched to its own
 * pre-image P_i(u). Events are sorted by u.
 *
 * The locus meets E with high-order contact, so the implicit value is flat
 * near the root and bisection alone pins u only to about 1e-5. Inside the
 * bracketing cell u is polished by minimizing |P_i'(u) - P_i(u)|; the event
 * keeps the resulting ellipse residual so the crossing can still be checked.
 */
[[nodiscard]] std::vector<CrossingEvent> solve_cusp_crossings(const Ellipse& e, double u0, double u1,
                                                              std::size_t steps = 4096);

/**
 * Self-intersections of the closed cusp locus from n samples over one period:
 * proper crossings of non-adjacent chords plus near-contacts of non-adjacent
 * samples, merged by spatial clustering so that a tangential touch counts once.
 * A diagnostic; the proximity radius is relative to the locus size.
 */
[[nodiscard]] int cusp_locus_self_intersections(const Ellipse& e, std::size_t n = 6000,
                                                double proximity = 1e-3);

}  // namespace steinerhat
