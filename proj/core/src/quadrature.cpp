#include <steinerhat/error.hpp>
#include <steinerhat/quadrature.hpp>

#include <cmath>

namespace steinerhat {

namespace {

void require_polygon(std::span<const Point2> samples) {
    if (samples.size() < 3) {
        throw GeometryError(ErrorCode::InsufficientSamples, "closed polyline needs at least three samples");
    }
}

}  // namespace

double shoelace_area(std::span<const Point2> samples) {
    require_polygon(samples);
    // Shifting to the first sample keeps the cross products small.
    const Point2 origin = samples.front();
    double twice = 0.0;
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
        twice += cross(samples[i] - origin, samples[i + 1] - origin);
    }
    return 0.5 * twice;
}

AreaCentroid polygon_centroid(std::span<const Point2> samples) {
    require_polygon(samples);
    const Point2 origin = samples.front();
    double twice = 0.0;
    Point2 moment{};
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
        const Point2 p = samples[i] - origin;
        const Point2 q = samples[i + 1] - origin;
        const double w = cross(p, q);
        twice += w;
        moment += w * (p + q);
    }
    AreaCentroid out;
    out.signed_area = 0.5 * twice;
    out.centroid = (twice != 0.0) ? origin + moment / (3.0 * twice) : origin;
    return out;
}

int winding_number(std::span<const Point2> samples, Point2 p) {
    require_polygon(samples);
    int wn = 0;
    const std::size_t n = samples.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 s = samples[i];
        const Point2 e = samples[(i + 1) % n];
        if (s.y <= p.y) {
            if (e.y > p.y && orient2(s, e, p) > 0.0) ++wn;
        } else if (e.y <= p.y && orient2(s, e, p) < 0.0) {
            --wn;
        }
    }
    return wn;
}

}  // namespace steinerhat
