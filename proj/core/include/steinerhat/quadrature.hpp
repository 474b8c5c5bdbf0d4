/**
 * @file quadrature.hpp
 * @brief Green-theorem quadrature over sampled closed curves.
 */
#pragma once

#include <steinerhat/geometry.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace steinerhat {

/// Signed area of the closed polyline (closure implied); positive when counter-clockwise.
/// Throws InsufficientSamples below three samples.
[[nodiscard]] double shoelace_area(std::span<const Point2> samples);

struct AreaCentroid {
    double signed_area{0.0};
    Point2 centroid;
};

/// Signed area and area centroid of the closed polyline via Green's theorem.
[[nodiscard]] AreaCentroid polygon_centroid(std::span<const Point2> samples);

/// Winding number of the closed polyline around `p`.
[[nodiscard]] int winding_number(std::span<const Point2> samples, Point2 p);

/// `n` samples of a closed curve at t_k = t0 + 2πk/n, k = 0..n-1.
template <typename Curve>
[[nodiscard]] std::vector<Point2> sample_closed_curve(Curve&& curve, std::size_t n, double t0 = 0.0) {
    std::vector<Point2> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(curve(t0 + kTwoPi * static_cast<double>(k) / static_cast<double>(n)));
    }
    return out;
}

}  // namespace steinerhat
