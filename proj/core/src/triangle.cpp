#include <steinerhat/error.hpp>
#include <steinerhat/triangle.hpp>

#include <algorithm>
#include <cmath>

namespace steinerhat {

std::array<double, 3> Triangle::squared_sides() const noexcept {
    const auto sq = [](Point2 p) { return dot(p, p); };
    return {sq(v[2] - v[1]), sq(v[0] - v[2]), sq(v[1] - v[0])};
}

double Triangle::diameter() const noexcept {
    const auto s = squared_sides();
    return std::sqrt(std::max({s[0], s[1], s[2]}));
}

bool Triangle::is_degenerate(const Tolerance& tol) const noexcept {
    const double d = diameter();
    return tol.negligible(signed_area(), d * d);
}

double triangle_area(const Triangle& t) noexcept { return std::abs(t.signed_area()); }

void require_nondegenerate(const Triangle& t, const Tolerance& tol) {
    if (t.is_degenerate(tol)) throw GeometryError(ErrorCode::DegenerateTriangle, "triangle has negligible area");
}

}  // namespace steinerhat
