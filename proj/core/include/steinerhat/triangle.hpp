/**
 * @file triangle.hpp
 * @brief Planar triangle value type.
 */
#pragma once

#include <steinerhat/geometry.hpp>

#include <array>

namespace steinerhat {

/// Three vertices in a caller-defined order. The order is significant for every
/// two-triangle construction (perspector, orthology, perspectrix).
struct Triangle {
    std::array<Point2, 3> v{};

    constexpr Triangle() = default;
    constexpr Triangle(Point2 p1, Point2 p2, Point2 p3) : v{p1, p2, p3} {}
    constexpr explicit Triangle(const std::array<Point2, 3>& vertices) : v(vertices) {}

    [[nodiscard]] constexpr const Point2& operator[](std::size_t i) const noexcept { return v[i]; }

    /// Positive when the vertices run counter-clockwise.
    [[nodiscard]] constexpr double signed_area() const noexcept { return 0.5 * orient2(v[0], v[1], v[2]); }
    [[nodiscard]] constexpr Point2 centroid() const noexcept { return (v[0] + v[1] + v[2]) / 3.0; }

    /// Squared lengths of the sides opposite each vertex: |v1v2|², |v2v0|², |v0v1|².
    [[nodiscard]] std::array<double, 3> squared_sides() const noexcept;
    /// Longest side length, the natural length scale of the triangle.
    [[nodiscard]] double diameter() const noexcept;

    /// Area below tol relative to diameter².
    [[nodiscard]] bool is_degenerate(const Tolerance& tol = {}) const noexcept;
};

/// |signed area|.
[[nodiscard]] double triangle_area(const Triangle& t) noexcept;

/// Throws DegenerateTriangle when t.is_degenerate(tol).
void require_nondegenerate(const Triangle& t, const Tolerance& tol = {});

}  // namespace steinerhat
