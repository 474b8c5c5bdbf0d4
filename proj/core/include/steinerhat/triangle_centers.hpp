/**
 * @file triangle_centers.hpp
 * @brief The handful of Kimberling centers the hat configuration needs.
 *
 * Most centers come from a small table of first barycentric coordinates
 * expressed in the squared side lengths. The rest are defined by a linear
 * construction on centers already in the table (complement, anticomplement,
 * reflection, Euler-line combination).
 */
#pragma once

#include <steinerhat/triangle.hpp>

#include <array>
#include <optional>
#include <span>

namespace steinerhat {

/// Kimberling index restricted to the supported set.
class CenterIndex {
public:
    /// Throws UnsupportedCenter when k is not in supported().
    explicit CenterIndex(int k);

    [[nodiscard]] int value() const noexcept { return k_; }
    [[nodiscard]] static std::span<const int> supported() noexcept;
    [[nodiscard]] static bool is_supported(int k) noexcept;

private:
    int k_;
};

/// Cartesian position of X_k. Throws DegenerateTriangle for a degenerate
/// triangle and Degenerate when the center lies at infinity (e.g. X99 of an
/// isosceles triangle's apex-symmetric configuration).
[[nodiscard]] Point2 triangle_center(const Triangle& t, CenterIndex k, const Tolerance& tol = {});
[[nodiscard]] Point2 triangle_center(const Triangle& t, int k, const Tolerance& tol = {});

/// First barycentric weights for table-defined centers; nullopt for centers
/// defined by construction.
[[nodiscard]] std::optional<std::array<double, 3>> barycentric_weights(const Triangle& t, int k);

/// Image under the homothety at the centroid with ratio -1/2.
[[nodiscard]] Point2 complement(const Triangle& t, Point2 p) noexcept;
/// Image under the homothety at the centroid with ratio -2.
[[nodiscard]] Point2 anticomplement(const Triangle& t, Point2 p) noexcept;

}  // namespace steinerhat
