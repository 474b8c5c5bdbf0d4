#include <steinerhat/error.hpp>
#include <steinerhat/loci.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

namespace steinerhat {

// ---------------------------------------------------------------------------
// ImplicitPoly2

void ImplicitPoly2::set(int i, int j, double c) {
    if (i < 0 || j < 0 || i + j > kMaxDegree) {
        throw GeometryError(ErrorCode::InvalidArgument,
                            "monomial x^" + std::to_string(i) + " y^" + std::to_string(j) + " exceeds degree 6");
    }
    c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
}

double ImplicitPoly2::coefficient(int i, int j) const noexcept {
    if (i < 0 || j < 0 || i + j > kMaxDegree) return 0.0;
    return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

int ImplicitPoly2::degree() const noexcept {
    int d = -1;
    for (int i = 0; i <= kMaxDegree; ++i) {
        for (int j = 0; i + j <= kMaxDegree; ++j) {
            if (coefficient(i, j) != 0.0) d = std::max(d, i + j);
        }
    }
    return d;
}

namespace {

template <typename Fold>
double fold_monomials(const ImplicitPoly2& f, Point2 p, Fold fold) {
    std::array<double, ImplicitPoly2::kMaxDegree + 1> xp{}, yp{};
    xp[0] = yp[0] = 1.0;
    for (std::size_t k = 1; k < xp.size(); ++k) {
        xp[k] = xp[k - 1] * p.x;
        yp[k] = yp[k - 1] * p.y;
    }
    double acc = 0.0;
    for (int i = 0; i <= ImplicitPoly2::kMaxDegree; ++i) {
        for (int j = 0; i + j <= ImplicitPoly2::kMaxDegree; ++j) {
            acc = fold(acc, f.coefficient(i, j) * xp[static_cast<std::size_t>(i)] * yp[static_cast<std::size_t>(j)]);
        }
    }
    return acc;
}

}  // namespace

double ImplicitPoly2::operator()(Point2 p) const noexcept {
    return fold_monomials(*this, p, [](double acc, double m) { return acc + m; });
}

double ImplicitPoly2::monomial_scale(Point2 p) const noexcept {
    return fold_monomials(*this, p, [](double acc, double m) { return std::max(acc, std::abs(m)); });
}

double ImplicitPoly2::scaled_residual(Point2 p) const noexcept {
    const double s = monomial_scale(p);
    return s == 0.0 ? 0.0 : std::abs((*this)(p)) / s;
}

// ---------------------------------------------------------------------------
// Loci

namespace {

void require_eccentric(const Ellipse& e, const char* what) {
    if (e.is_circular()) throw GeometryError(ErrorCode::Degenerate, std::string(what) + " is undefined for a = b");
}

std::array<Point2, 4> quadrants(double x, double y) { return {{{x, y}, {-x, y}, {-x, -y}, {x, -y}}}; }

Point2 c2_point(const Ellipse& e, double u) {
    const double s = 0.5 * (e.a() * e.a() + e.b() * e.b());
    return {-s * std::cos(u) / e.a(), -s * std::sin(u) / e.b()};
}

Point2 preimage(const Ellipse& e, double u, int i) {
    return ellipse_point(e, -u / 3.0 - kTwoPi * (i - 1) / 3.0);
}

// Roots of g on [u0, u1) by grid sign changes and bisection.
std::vector<double> grid_roots(const std::function<double(double)>& g, double u0, double u1, std::size_t steps) {
    if (steps < 2 || !(u1 > u0)) throw GeometryError(ErrorCode::InvalidArgument, "crossing scan needs u1 > u0 and steps >= 2");
    std::vector<double> roots;
    const double h = (u1 - u0) / static_cast<double>(steps);
    double lo = u0;
    double glo = g(lo);
    for (std::size_t k = 1; k <= steps; ++k) {
        const double hi = u0 + h * static_cast<double>(k);
        const double ghi = g(hi);
        if (glo == 0.0) {
            roots.push_back(lo);
        } else if ((glo < 0.0) != (ghi < 0.0) && ghi != 0.0) {
            double l = lo, r = hi, gl = glo;
            for (int it = 0; it < 200 && r - l > 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(l)); ++it) {
                const double mid = 0.5 * (l + r);
                const double gm = g(mid);
                if (gm == 0.0) {
                    l = r = mid;
                    break;
                }
                if ((gm < 0.0) == (gl < 0.0)) {
                    l = mid;
                    gl = gm;
                } else {
                    r = mid;
                }
            }
            roots.push_back(0.5 * (l + r));
        }
        lo = hi;
        glo = ghi;
    }
    return roots;
}

// Minimizer of f on [lo, hi] by golden-section search; f is assumed unimodal there.
double golden_min(const std::function<double(double)>& f, double lo, double hi) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo), x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(lo)); ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

}  // namespace

Point2 cusp_locus_point(const Ellipse& e, double v) noexcept {
    const double a = e.a(), b = e.b();
    const double k = 1.5 * e.c2();
    const double s = 0.5 * (a * a + b * b);
    return {(k * std::cos(v / 3.0) - s * std::cos(v)) / a, (k * std::sin(v / 3.0) - s * std::sin(v)) / b};
}

ImplicitPoly2 cusp_locus_implicit(const Ellipse& e) {
    require_eccentric(e, "cusp locus equation");
    const double a2 = e.a() * e.a(), b2 = e.b() * e.b();
    const double a4 = a2 * a2, b4 = b2 * b2, a6 = a4 * a2, b6 = b4 * b2;
    const double k = a4 - a2 * b2 + b4;
    const double s = a2 + b2;
    ImplicitPoly2 f;
    f.set(6, 0, -4.0 * a6);
    f.set(0, 6, -4.0 * b6);
    f.set(4, 2, -12.0 * a4 * b2);
    f.set(2, 4, -12.0 * a2 * b4);
    f.set(4, 0, 12.0 * a4 * k);
    f.set(0, 4, 12.0 * b4 * k);
    f.set(2, 2, 24.0 * a2 * b2 * k);
    f.set(2, 0, -3.0 * a2 * (2.0 * a2 - b2) * s * (2.0 * a4 - 5.0 * a2 * b2 + 5.0 * b4));
    f.set(0, 2, 3.0 * b2 * (a2 - 2.0 * b2) * s * (5.0 * a4 - 5.0 * a2 * b2 + 2.0 * b4));
    const double p = (2.0 * a2 - b2) * (a2 - 2.0 * b2) * s;
    f.set(0, 0, p * p);
    return f;
}

std::array<Point2, 4> c2_crossings(const Ellipse& e) {
    require_eccentric(e, "C2 crossings");
    const double a = e.a(), b = e.b(), a2 = a * a, b2 = b * b;
    const double d = 2.0 * std::sqrt(a2 + b2);
    return quadrants(a * std::sqrt(a2 + 3.0 * b2) / d, b * std::sqrt(3.0 * a2 + b2) / d);
}

std::array<Point2, 4> cusp_crossings(const Ellipse& e) {
    require_eccentric(e, "cusp crossings");
    const double a2 = e.a() * e.a(), b2 = e.b() * e.b();
    const double r = std::sqrt(a2 + b2);
    return quadrants(a2 / r, b2 / r);
}

ConicImplicit c2_locus(const Ellipse& e) {
    const double s = e.a() * e.a() + e.b() * e.b();
    const double ax = s / (2.0 * e.a()), ay = s / (2.0 * e.b());
    return {1.0 / (ax * ax), 0.0, 1.0 / (ay * ay), 0.0, 0.0, -1.0};
}

std::vector<CrossingEvent> solve_c2_crossings(const Ellipse& e, double u0, double u1, std::size_t steps) {
    const auto g = [&](double u) { return e.implicit_value(c2_point(e, u)); };
    std::vector<CrossingEvent> out;
    for (double u : grid_roots(g, u0, u1, steps)) {
        CrossingEvent ev;
        ev.u = u;
        ev.point = c2_point(e, u);
        ev.ellipse_residual = std::abs(e.implicit_value(ev.point));
        ev.coincidence = std::numeric_limits<double>::infinity();
        for (int i = 1; i <= 3; ++i) {
            const double d = distance(ev.point, preimage(e, u, i));
            if (d < ev.coincidence) {
                ev.coincidence = d;
                ev.index = i;
            }
        }
        out.push_back(ev);
    }
    return out;
}

std::vector<CrossingEvent> solve_cusp_crossings(const Ellipse& e, double u0, double u1, std::size_t steps) {
    std::vector<CrossingEvent> out;
    const double cell = (u1 - u0) / static_cast<double>(steps);
    for (int i = 1; i <= 3; ++i) {
        const double shift = kTwoPi * (i - 1);
        const auto g = [&](double u) { return e.implicit_value(cusp_locus_point(e, u + shift)); };
        const auto gap = [&](double u) { return distance(cusp_locus_point(e, u + shift), preimage(e, u, i)); };
        for (double u : grid_roots(g, u0, u1, steps)) {
            const double polished = golden_min(gap, u - cell, u + cell);
            if (gap(polished) < gap(u)) u = polished;
            CrossingEvent ev;
            ev.u = u;
            ev.index = i;
            ev.point = cusp_locus_point(e, u + shift);
            ev.ellipse_residual = std::abs(g(u));
            ev.coincidence = distance(ev.point, preimage(e, u, i));
            out.push_back(ev);
        }
    }
    std::sort(out.begin(), out.end(), [](const CrossingEvent& x, const CrossingEvent& y) { return x.u < y.u; });
    return out;
}

namespace {

double segment_distance(Point2 p, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    const double s = len2 == 0.0 ? 0.0 : std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return distance(p, a + s * ab);
}

std::optional<Point2> proper_crossing(Point2 p, Point2 q, Point2 r, Point2 s) {
    const double d1 = orient2(p, q, r), d2 = orient2(p, q, s);
    const double d3 = orient2(r, s, p), d4 = orient2(r, s, q);
    if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0) {
        const double t = d3 / (d3 - d4);
        return p + t * (q - p);
    }
    return std::nullopt;
}

}  // namespace

int cusp_locus_self_intersections(const Ellipse& e, std::size_t n, double proximity) {
    if (n < 64) throw GeometryError(ErrorCode::InsufficientSamples, "self-intersection scan needs at least 64 samples");
    if (e.is_circular()) return 0;
    std::vector<Point2> pts(n);
    for (std::size_t k = 0; k < n; ++k) pts[k] = cusp_locus_point(e, 3.0 * kTwoPi * static_cast<double>(k) / static_cast<double>(n));

    double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
    double hmax = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        xmin = std::min(xmin, pts[k].x);
        xmax = std::max(xmax, pts[k].x);
        ymin = std::min(ymin, pts[k].y);
        ymax = std::max(ymax, pts[k].y);
        hmax = std::max(hmax, distance(pts[k], pts[(k + 1) % n]));
    }
    const double size = std::hypot(xmax - xmin, ymax - ymin);
    const double near = proximity * size;
    const double cluster = 20.0 * near + 4.0 * hmax;
    // Chords closer than this many samples along the curve are one branch.
    const std::size_t window = static_cast<std::size_t>(std::ceil(4.0 * (near + hmax) / hmax)) + 2;

    std::vector<Point2> events;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 p = pts[i], q = pts[(i + 1) % n];
        for (std::size_t j = i + 2; j < n; ++j) {
            const std::size_t gap = std::min(j - i, n - (j - i));
            if (gap < 2) continue;
            const Point2 r = pts[j], s = pts[(j + 1) % n];
            if (std::max(r.x, s.x) < std::min(p.x, q.x) - near || std::min(r.x, s.x) > std::max(p.x, q.x) + near ||
                std::max(r.y, s.y) < std::min(p.y, q.y) - near || std::min(r.y, s.y) > std::max(p.y, q.y) + near) {
                continue;
            }
            if (auto x = proper_crossing(p, q, r, s)) {
                events.push_back(*x);
            } else if (gap >= window && segment_distance(p, r, s) < near) {
                events.push_back(midpoint(p, 0.5 * (r + s)));
            }
        }
    }

    // Single-linkage clustering of the events.
    std::vector<std::size_t> parent(events.size());
    std::iota(parent.begin(), parent.end(), 0);
    const std::function<std::size_t(std::size_t)> find = [&](std::size_t k) {
        return parent[k] == k ? k : parent[k] = find(parent[k]);
    };
    for (std::size_t i = 0; i < events.size(); ++i) {
        for (std::size_t j = i + 1; j < events.size(); ++j) {
            if (distance(events[i], events[j]) < cluster) parent[find(i)] = find(j);
        }
    }
    int clusters = 0;
    for (std::size_t k = 0; k < events.size(); ++k) clusters += find(k) == k ? 1 : 0;
    return clusters;
}

}  // namespace steinerhat
