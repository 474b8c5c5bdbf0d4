#include <steinerhat/envelope.hpp>
#include <steinerhat/error.hpp>
#include <steinerhat/quadrature.hpp>
#include <steinerhat/tangency.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace steinerhat {

ApolloniusHyperbola apollonius_hyperbola(const Ellipse& e, Point2 m, const Tolerance& tol) {
    const double a2 = e.a() * e.a(), b2 = e.b() * e.b();
    if (tol.negligible(norm(m), e.a())) throw GeometryError(ErrorCode::DegeneratePole, "Apollonius hyperbola needs M != O");
    ApolloniusHyperbola h{{0.0, 1.0 / b2 - 1.0 / a2, 0.0, m.y / a2, -m.x / b2, 0.0}, false};
    h.degenerate = e.is_circular() || tol.negligible(m.x, norm(m)) || tol.negligible(m.y, norm(m));
    return h;
}

RealPolynomial tangency_cubic(const Ellipse& e, double mx) {
    if (e.is_circular()) throw GeometryError(ErrorCode::Degenerate, "tangency cubic is undefined for a = b");
    const double a2 = e.a() * e.a(), b2 = e.b() * e.b(), a4 = a2 * a2;
    return {a4 * a2 * mx, -a4 * (a2 - 2.0 * b2), -e.c2() * mx * (a2 + b2), e.c4()};
}

double tangency_cubic_discriminant(const Ellipse& e, double mx) noexcept {
    const double a2 = e.a() * e.a(), b2 = e.b() * e.b(), a4 = a2 * a2;
    const double s = a2 + b2, d = a2 - 2.0 * b2;
    return -4.0 * e.c4() * a4 * a2 * (a2 - mx * mx) * (e.c2() * s * s * s * mx * mx - a4 * d * d * d);
}

EvoluteCrossing evolute_crossings(const Ellipse& e, const Tolerance& tol) {
    const double a2 = e.a() * e.a(), b2 = e.b() * e.b();
    const double d = a2 - 2.0 * b2;
    if (tol.negligible(d, a2)) return {0.0, e.b()};
    if (d < 0.0) throw GeometryError(ErrorCode::NoCrossings, "the evolute lies inside the ellipse when a² < 2b²");
    const double den = std::sqrt(a2 * a2 - b2 * b2) * (a2 + b2);
    const double f = 2.0 * a2 - b2;
    return {a2 * d * std::sqrt(d) / den, b2 * f * std::sqrt(f) / den};
}

RealPolynomial intersection_quadratic(const Ellipse& e, double mx) {
    const double a2 = e.a() * e.a(), b2 = e.b() * e.b();
    const double s = a2 + b2;
    return {-4.0 * a2 * a2 * b2 + mx * mx * s * s, -2.0 * mx * e.c2() * s, s * s};
}

ImplicitPoly2 tangency_quartic_F(const Ellipse& e, Point2 m) {
    const double A = e.a() * e.a(), B = e.b() * e.b();
    const double c2 = e.c2(), c4 = e.c4();
    const double A2 = A * A, A3 = A2 * A, B2 = B * B;
    const double mx = m.x, my = m.y;
    ImplicitPoly2 f;
    f.set(4, 0, B * (A - 2.0 * mx * mx) * (A + B) * c4);
    f.set(3, 1, 2.0 * A * mx * my * (A + B) * c4);
    f.set(3, 0, 2.0 * A * B * mx * c2 * (A2 + B2));
    f.set(2, 1, -2.0 * A2 * my * c2 * (A2 + B2));
    f.set(2, 0, -A2 * B * (A + B) * (3.0 * A2 - 4.0 * A * B + 2.0 * B2) + A * B * c2 * mx * mx * (3.0 * A - B) * (A + B));
    f.set(1, 1, -2.0 * A3 * mx * my * c2 * (A + B));
    f.set(1, 0, -2.0 * B * mx * A3 * (A2 - A * B + B2));
    f.set(0, 1, 2.0 * A3 * A3 * my);
    f.set(0, 0, A2 * A2 * B * (2.0 * A2 - (A + B) * mx * mx));
    return f;
}

const char* to_string(TangencyRegime r) noexcept {
    switch (r) {
        case TangencyRegime::OutsideEvolute: return "outside-evolute";
        case TangencyRegime::InsideEvolute: return "inside-evolute";
        case TangencyRegime::OnEvolute: return "on-evolute";
    }
    return "unknown";
}

double normal_line_residual(const Ellipse& e, Point2 p, Point2 m) noexcept {
    const Point2 n = ellipse_normal(e, p);
    const double len = norm(n);
    return len == 0.0 ? distance(p, m) : std::abs(cross(m - p, n)) / len;
}

namespace {

// Points of E above and below abscissa x (one point on the major axis).
std::vector<Point2> vertical_candidates(const Ellipse& e, double x) {
    x = std::clamp(x, -e.a(), e.a());
    const double y = e.b() * std::sqrt(std::max(0.0, 1.0 - (x / e.a()) * (x / e.a())));
    if (y <= 1e-12 * e.b()) return {{x, 0.0}};
    return {{x, y}, {x, -y}};
}

double param_of(const Ellipse& e, Point2 p) { return std::atan2(p.y / e.b(), p.x / e.a()); }

// Keeps the candidates scoring below `accept`, or the best one when none does.
template <typename Score>
std::vector<Point2> select(const std::vector<Point2>& cands, double accept, Score score) {
    std::vector<Point2> out;
    double best = std::numeric_limits<double>::infinity();
    Point2 best_p{};
    for (const auto& p : cands) {
        const double s = score(p);
        if (s < accept) out.push_back(p);
        if (s < best) {
            best = s;
            best_p = p;
        }
    }
    if (out.empty() && std::isfinite(best)) out.push_back(best_p);
    return out;
}

bool contains_point(const std::vector<Point2>& pts, Point2 p, double eps) {
    return std::any_of(pts.begin(), pts.end(), [&](Point2 q) { return distance(p, q) <= eps; });
}

}  // namespace

TangencyReport hat_ellipse_intersections(const Ellipse& e, BoundaryParam u) {
    if (e.is_circular()) throw GeometryError(ErrorCode::Degenerate, "the hat of a circle is a point");
    const double a = e.a();
    const Point2 m = ellipse_point(e, u.value);
    const double same = 1e-9 * a;
    TangencyReport rep;

    auto q_roots = poly_real_roots(tangency_cubic(e, m.x), Interval{-a, a});
    rep.q_real_root_count = root_count(q_roots);
    // Merge roots closer than the contact threshold into one double root.
    std::vector<RealRoot> merged;
    for (const auto& r : q_roots) {
        if (r.multiplicity > 1) rep.merged_contact = true;
        if (!merged.empty() && r.value - merged.back().value < 1e-6 * a) {
            merged.back().value = 0.5 * (merged.back().value + r.value);
            merged.back().multiplicity += r.multiplicity;
            rep.merged_contact = true;
        } else {
            merged.push_back(r);
        }
    }
    for (const auto& r : merged) {
        std::vector<Point2> cands;
        for (const auto& p : vertical_candidates(e, r.value)) {
            if (distance(p, m) > 1e-9 * a) cands.push_back(p);
        }
        for (const auto& p : select(cands, 1e-6 * a, [&](Point2 p) { return normal_line_residual(e, p, m); })) {
            if (contains_point(rep.tangency_points, p, same)) continue;
            rep.tangency_points.push_back(p);
            rep.tangency_params.push_back(param_of(e, p));
        }
    }

    for (const auto& r : poly_real_roots(intersection_quadratic(e, m.x))) {
        const auto on_ellipse = [&](Point2 pre) {
            return std::abs(e.implicit_value(deltoid_point(e, u, param_of(e, pre))));
        };
        for (const auto& pre : select(vertical_candidates(e, r.value), 1e-8, on_ellipse)) {
            const double t = param_of(e, pre);
            const Point2 p = deltoid_point(e, u, t);
            if (contains_point(rep.transversal_points, p, same) || contains_point(rep.tangency_points, p, same)) continue;
            rep.transversal_points.push_back(p);
            rep.transversal_params.push_back(t);
        }
    }

    rep.intersection_points = rep.tangency_points;
    rep.intersection_points.insert(rep.intersection_points.end(), rep.transversal_points.begin(),
                                   rep.transversal_points.end());
    if (rep.merged_contact) {
        rep.regime = TangencyRegime::OnEvolute;
    } else {
        rep.regime = rep.q_real_root_count >= 3 ? TangencyRegime::InsideEvolute : TangencyRegime::OutsideEvolute;
    }
    return rep;
}

double distance_to_hat(const Ellipse& e, BoundaryParam u, Point2 p, std::size_t n) {
    if (n < 16) throw GeometryError(ErrorCode::InsufficientSamples, "hat distance needs at least 16 samples");
    const double h = kTwoPi / static_cast<double>(n);
    const auto dist = [&](double t) { return distance(deltoid_point(e, u, t), p); };
    std::vector<double> d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = dist(h * static_cast<double>(k));
    // Near a cusp the parametrization slows down, so the closest sample need
    // not bracket the true minimum; every sampled local minimum is refined.
    double best = *std::min_element(d.begin(), d.end());
    constexpr double kInvPhi = 0.6180339887498949;
    for (std::size_t k = 0; k < n; ++k) {
        if (d[k] > d[(k + n - 1) % n] || d[k] > d[(k + 1) % n]) continue;
        double lo = h * (static_cast<double>(k) - 1.0), hi = h * (static_cast<double>(k) + 1.0);
        double x1 = hi - kInvPhi * (hi - lo), x2 = lo + kInvPhi * (hi - lo);
        double f1 = dist(x1), f2 = dist(x2);
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - kInvPhi * (hi - lo);
                f1 = dist(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + kInvPhi * (hi - lo);
                f2 = dist(x2);
            }
        }
        best = std::min({best, f1, f2});
    }
    return best;
}

bool inside_evolute(const Ellipse& e, Point2 p, std::size_t n) {
    if (e.is_circular()) return false;
    const auto samples = sample_closed_curve([&](double t) { return evolute_point(e, t); }, n);
    return winding_number(samples, p) != 0;
}

double locate_regime_flip(const Ellipse& e, double width) {
    const double a = e.a(), b = e.b();
    if (a * a <= 2.0 * b * b) throw GeometryError(ErrorCode::NoCrossings, "no interior regime when a² <= 2b²");
    const auto inside = [&](double mx) {
        return root_count(poly_real_roots(tangency_cubic(e, mx), Interval{-a, a})) >= 3;
    };
    double lo = 0.0, hi = a;
    if (!inside(lo) || inside(hi)) throw GeometryError(ErrorCode::NoCrossings, "root count does not bracket a regime flip");
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (inside(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace steinerhat
