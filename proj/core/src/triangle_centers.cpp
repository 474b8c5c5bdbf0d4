#include <steinerhat/error.hpp>
#include <steinerhat/triangle_centers.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace steinerhat {

namespace {

constexpr std::array<int, 21> kSupported{1,   2,   3,   4,   5,   20,  76,  98,  99,  114, 115,
                                         148, 230, 376, 382, 548, 550, 598, 620, 671, 2482};

// f(a², b², c²) for the first coordinate; the others follow by cyclic shift.
using Weight = double (*)(double, double, double);

double sa(double a2, double b2, double c2) { return 0.5 * (b2 + c2 - a2); }
double conway_s2(double a2, double b2, double c2) {
    const double A = sa(a2, b2, c2), B = sa(b2, c2, a2), C = sa(c2, a2, b2);
    return A * B + B * C + C * A;
}

double w2(double, double, double) { return 1.0; }
double w3(double a2, double b2, double c2) { return a2 * sa(a2, b2, c2); }
double w4(double a2, double b2, double c2) { return sa(b2, c2, a2) * sa(c2, a2, b2); }
double w5(double a2, double b2, double c2) {
    return conway_s2(a2, b2, c2) + sa(b2, c2, a2) * sa(c2, a2, b2);
}
double w20(double a2, double b2, double c2) {
    return conway_s2(a2, b2, c2) - 2.0 * sa(b2, c2, a2) * sa(c2, a2, b2);
}
double w76(double, double b2, double c2) { return b2 * c2; }
double w98(double a2, double b2, double c2) {
    // 1 / (b⁴ + c⁴ - a²b² - a²c²), cleared of denominators across the triple.
    const auto g = [](double x, double y, double z) { return y * y + z * z - x * y - x * z; };
    return g(b2, c2, a2) * g(c2, a2, b2);
}
double w99(double a2, double b2, double c2) { return (c2 - a2) * (a2 - b2); }
double w230(double a2, double b2, double c2) {
    return 2.0 * a2 * a2 - a2 * (b2 + c2) + (b2 - c2) * (b2 - c2);
}
double w598(double a2, double b2, double c2) {
    const auto g = [](double x, double y, double z) { return 2.0 * y + 2.0 * z - x; };
    return g(b2, c2, a2) * g(c2, a2, b2);
}
double w671(double a2, double b2, double c2) {
    const auto g = [](double x, double y, double z) { return y + z - 2.0 * x; };
    return g(b2, c2, a2) * g(c2, a2, b2);
}

std::optional<Weight> table_entry(int k) {
    switch (k) {
        case 2: return w2;
        case 3: return w3;
        case 4: return w4;
        case 5: return w5;
        case 20: return w20;
        case 76: return w76;
        case 98: return w98;
        case 99: return w99;
        case 230: return w230;
        case 598: return w598;
        case 671: return w671;
        default: return std::nullopt;
    }
}

Point2 from_weights(const Triangle& t, const std::array<double, 3>& w, int k) {
    const double sum = w[0] + w[1] + w[2];
    const double mag = std::abs(w[0]) + std::abs(w[1]) + std::abs(w[2]);
    if (!std::isfinite(sum) || std::abs(sum) <= 1e-12 * mag) {
        throw GeometryError(ErrorCode::Degenerate, "X" + std::to_string(k) + " lies at infinity for this triangle");
    }
    return (w[0] * t[0] + w[1] * t[1] + w[2] * t[2]) / sum;
}

}  // namespace

CenterIndex::CenterIndex(int k) : k_(k) {
    if (!is_supported(k)) throw GeometryError(ErrorCode::UnsupportedCenter, "X" + std::to_string(k) + " is not supported");
}

std::span<const int> CenterIndex::supported() noexcept { return kSupported; }

bool CenterIndex::is_supported(int k) noexcept {
    return std::find(kSupported.begin(), kSupported.end(), k) != kSupported.end();
}

std::optional<std::array<double, 3>> barycentric_weights(const Triangle& t, int k) {
    const auto s = t.squared_sides();
    if (k == 1) return std::array<double, 3>{std::sqrt(s[0]), std::sqrt(s[1]), std::sqrt(s[2])};
    const auto f = table_entry(k);
    if (!f) return std::nullopt;
    return std::array<double, 3>{(*f)(s[0], s[1], s[2]), (*f)(s[1], s[2], s[0]), (*f)(s[2], s[0], s[1])};
}

Point2 complement(const Triangle& t, Point2 p) noexcept { return 0.5 * (3.0 * t.centroid() - p); }

Point2 anticomplement(const Triangle& t, Point2 p) noexcept { return 3.0 * t.centroid() - 2.0 * p; }

Point2 triangle_center(const Triangle& t, int k, const Tolerance& tol) {
    return triangle_center(t, CenterIndex(k), tol);
}

Point2 triangle_center(const Triangle& t, CenterIndex index, const Tolerance& tol) {
    require_nondegenerate(t, tol);
    const int k = index.value();
    if (auto w = barycentric_weights(t, k)) return from_weights(t, *w, k);

    const auto X = [&](int j) { return triangle_center(t, CenterIndex(j), tol); };
    switch (k) {
        case 114: return complement(t, X(98));
        case 115: return complement(t, X(99));
        case 148: return anticomplement(t, X(99));
        case 620: return complement(t, X(115));
        case 2482: return midpoint(X(2), X(99));
        case 376: return 2.0 * X(3) - X(2);
        case 382: return 2.0 * X(4) - X(3);
        case 548: return (7.0 * X(3) - 3.0 * X(2)) / 4.0;
        case 550: return (5.0 * X(3) - 3.0 * X(2)) / 2.0;
        default: break;
    }
    throw GeometryError(ErrorCode::UnsupportedCenter, "X" + std::to_string(k) + " has no definition");
}

}  // namespace steinerhat
