#include <steinerhat/envelope.hpp>
#include <steinerhat/error.hpp>
#include <steinerhat/hat.hpp>
#include <steinerhat/loci.hpp>
#include <steinerhat/quadrature.hpp>
#include <steinerhat/tangency.hpp>
#include <steinerhat/triads.hpp>
#include <steinerhat/triangle_centers.hpp>
#include <steinerhat_app/parallel.hpp>
#include <steinerhat_app/report.hpp>
#include <steinerhat_app/serialize.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>

namespace steinerhat::app {

bool CheckResult::pass() const noexcept {
    return detail.empty() && !measures.empty() &&
           std::all_of(measures.begin(), measures.end(), [](const Measure& m) { return m.pass(); });
}

const Measure* CheckResult::worst() const noexcept {
    const Measure* w = nullptr;
    double worst_ratio = -1.0;
    for (const auto& m : measures) {
        double r = 0.0;
        if (m.tolerance > 0.0) {
            r = m.value / m.tolerance;
        } else if (m.value > 0.0) {
            r = std::numeric_limits<double>::infinity();
        }
        if (!std::isfinite(m.value)) r = std::numeric_limits<double>::infinity();
        if (r > worst_ratio) {
            worst_ratio = r;
            w = &m;
        }
    }
    return w;
}

std::size_t VerificationReport::passed() const noexcept {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass(); }));
}

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

// Portable uniform draw in [0, 1) from the raw 64-bit stream.
double uniform01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

double grid(std::size_t k, std::size_t n) { return kTwoPi * static_cast<double>(k) / static_cast<double>(n); }

double max_of(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::isnan(x) ? std::numeric_limits<double>::infinity() : x);
    return m;
}

double rel(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

// Zeros of |Δ'| located from n samples and refined by golden-section search.
std::array<double, 3> numeric_cusp_params(const Ellipse& e, BoundaryParam u, std::size_t n) {
    const auto speed = [&](double t) { return norm(deltoid_derivative(e, u, t)); };
    std::vector<std::pair<double, double>> minima;
    const double h = kTwoPi / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = h * static_cast<double>(k);
        const double s = speed(t);
        if (s <= speed(t - h) && s < speed(t + h)) minima.emplace_back(s, t);
    }
    std::sort(minima.begin(), minima.end());
    if (minima.size() < 3) throw GeometryError(ErrorCode::InsufficientSamples, "fewer than three speed minima on the hat");
    std::array<double, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
        double lo = minima[i].second - h, hi = minima[i].second + h;
        constexpr double kInvPhi = 0.6180339887498949;
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            const double x1 = hi - kInvPhi * (hi - lo), x2 = lo + kInvPhi * (hi - lo);
            (speed(x1) < speed(x2) ? hi : lo) = speed(x1) < speed(x2) ? x2 : x1;
        }
        out[i] = 0.5 * (lo + hi);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Center of curvature of E from central differences, independent of the evolute formula.
Point2 curvature_center_fd(const Ellipse& e, double t) {
    constexpr double h = 1e-4;
    const Point2 pm = ellipse_point(e, t - h), p0 = ellipse_point(e, t), pp = ellipse_point(e, t + h);
    const Point2 d1 = (pp - pm) / (2.0 * h);
    const Point2 d2 = (pp - 2.0 * p0 + pm) / (h * h);
    return p0 + (dot(d1, d1) / cross(d1, d2)) * perp(d1);
}

double nearest(Point2 p, const std::array<Point2, 4>& set) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& q : set) d = std::min(d, distance(p, q));
    return d;
}

CheckResult hat_area_invariance(const RunConfig& cfg) {
    CheckResult c{1, "Hat area invariance", "hat-area-invariance", {}, {}};
    const Ellipse e = cfg.ellipse();
    const double exact = hat_area(e);
    const double via_map = std::abs(affine_decomposition(e, BoundaryParam(0.0)).map.determinant()) * kTwoPi;
    const auto errs = parallel_map(cfg.sweep_count, [&](std::size_t k) {
        return rel(hat_area_numeric(e, BoundaryParam(grid(k, cfg.sweep_count)), cfg.samples), exact);
    });
    c.measures.push_back({"closed form vs |det|·2π (rel)", rel(via_map, exact), 1e-12});
    c.measures.push_back({"shoelace vs closed form over u (rel)", max_of(errs), 1e-6});
    return c;
}

CheckResult area_ratio_table(const RunConfig& cfg) {
    CheckResult c{2, "Hat to ellipse area ratios", "area-ratio-table", {}, {}};
    const std::array<std::pair<double, double>, 4> rows{{{std::sqrt(2.0 + kSqrt3), 1.0},
                                                         {(1.0 + std::sqrt(5.0)) / 2.0, 0.5},
                                                         {std::sqrt(2.0), 0.25},
                                                         {1.0, 0.0}}};
    double closed = 0.0, numeric = 0.0;
    for (const auto& [ratio, expected] : rows) {
        const Ellipse e(ratio, 1.0);
        closed = std::max(closed, std::abs(hat_area(e) / e.area() - expected));
        numeric = std::max(numeric, std::abs(hat_area_numeric(e, BoundaryParam(0.3), cfg.samples) / e.area() - expected));
    }
    c.measures.push_back({"closed-form ratio error", closed, 1e-12});
    c.measures.push_back({"shoelace ratio error", numeric, 1e-6});
    return c;
}

CheckResult envelope_oracle(const RunConfig& cfg) {
    CheckResult c{3, "Closed-form envelope vs line-intersection oracle", "envelope-oracle", {}, {}};
    const Ellipse e = cfg.ellipse();
    constexpr std::size_t nu = 64, nt = 256;
    const auto rows = parallel_map(nu, [&](std::size_t i) {
        const BoundaryParam u(grid(i, nu));
        const Pole pole = Pole::boundary(e, u);
        std::array<double, 2> worst{0.0, 0.0};
        for (std::size_t j = 0; j < nt; ++j) {
            const double t = grid(j, nt);
            if (in_singular_zone(u, t)) continue;
            const Point2 oracle = npc_envelope_numeric(e, pole, t, 1e-5);
            worst[0] = std::max(worst[0], distance(oracle, npc_envelope_point(e, pole, t)));
            worst[1] = std::max(worst[1], distance(oracle, deltoid_point(e, u, t)));
        }
        return worst;
    });
    double general = 0.0, hat = 0.0;
    for (const auto& r : rows) {
        general = std::max(general, r[0]);
        hat = std::max(hat, r[1]);
    }
    c.measures.push_back({"general envelope vs oracle", general, 1e-8});
    c.measures.push_back({"hat parametrization vs oracle", hat, 1e-8});
    return c;
}

CheckResult concyclic_points(const RunConfig& cfg) {
    CheckResult c{4, "M, C2 and the pre-images are concyclic", "concyclic-five-points", {}, {}};
    const Ellipse e = cfg.ellipse();
    double residual = 0.0, center = 0.0;
    for (std::size_t k = 0; k < 64; ++k) {
        const BoundaryParam u(grid(k, 64));
        const HatFrame f = build_hat_frame(e, u);
        const ConicImplicit k_conic = circle_K_conic(e, u);
        for (const Point2 p : {f.m, f.c2, f.preimages[0], f.preimages[1], f.preimages[2]}) {
            residual = std::max(residual, std::abs(k_conic(p)));
        }
        center = std::max(center, distance(circle_K(e, u).center, midpoint(f.m, f.c2)));
    }
    c.measures.push_back({"implicit residual at the five points", residual, 1e-10});
    c.measures.push_back({"center vs midpoint of M and C2", center, 1e-12});
    return c;
}

CheckResult osculating_circles(const RunConfig& cfg) {
    CheckResult c{5, "Osculating circles through M", "osculating-circles", {}, {}};
    const Ellipse e = cfg.ellipse();
    double center = 0.0, min_slope = std::numeric_limits<double>::infinity();
    const std::array<double, 3> hs{1e-2, 1e-3, 1e-4};
    for (std::size_t k = 0; k < 64; ++k) {
        const BoundaryParam u(kTwoPi * (static_cast<double>(k) + 0.5) / 64.0);
        for (int i = 1; i <= 3; ++i) {
            const double ti = cusp_parameter(u, i);
            const Circle ki = osculating_circle(e, u, i);
            center = std::max(center, distance(ki.center, evolute_point(e, ti)));
            std::array<double, 3> d{};
            for (std::size_t j = 0; j < hs.size(); ++j) d[j] = ki.distance_to(ellipse_point(e, ti + hs[j]));
            // Slopes are taken only while the distance stays above rounding level.
            for (std::size_t j = 0; j + 1 < hs.size(); ++j) {
                if (d[j + 1] < 1e-15 * ki.radius) continue;
                min_slope = std::min(min_slope, std::log10(d[j] / d[j + 1]));
            }
        }
    }
    c.measures.push_back({"center vs evolute point", center, 1e-10});
    c.measures.push_back({"3 - min log-slope of distance vs h (<= 0.1)", 3.0 - min_slope, 0.1});
    return c;
}

CheckResult triangle_areas(const RunConfig& cfg) {
    CheckResult c{6, "Areas of T, T' and T''", "triangle-areas", {}, {}};
    const Ellipse e = cfg.ellipse();
    const std::array<double, 3> expected{preimage_triangle_area(e), cusp_triangle_area(e), osculating_triangle_area(e)};
    const double formula_gap = std::max({rel(expected[0], 3.0 * kSqrt3 * e.a() * e.b() / 4.0),
                                         rel(expected[1], 27.0 * kSqrt3 * e.c4() / (16.0 * e.a() * e.b())),
                                         rel(expected[2], expected[1] / 4.0)});
    const auto rows = parallel_map(cfg.sweep_count, [&](std::size_t k) {
        const BoundaryParam u(grid(k, cfg.sweep_count));
        const HatFrame f = build_hat_frame(e, u);
        const std::array<double, 3> closed{triangle_area(preimage_triangle(f)), triangle_area(cusp_triangle(f)),
                                           triangle_area(osculating_triangle(f))};
        // Independent path: cusp parameters located as zeros of the hat's speed.
        const auto ts = numeric_cusp_params(e, u, 4096);
        std::array<Point2, 3> pre{}, cusp{}, osc{};
        for (std::size_t i = 0; i < 3; ++i) {
            pre[i] = ellipse_point(e, ts[i]);
            cusp[i] = deltoid_point(e, u, ts[i]);
            osc[i] = curvature_center_fd(e, ts[i]);
        }
        const std::array<double, 3> numeric{std::abs(shoelace_area(pre)), std::abs(shoelace_area(cusp)),
                                            std::abs(shoelace_area(osc))};
        std::array<double, 2> worst{0.0, 0.0};
        for (std::size_t i = 0; i < 3; ++i) {
            worst[0] = std::max(worst[0], rel(closed[i], expected[i]));
            worst[1] = std::max(worst[1], rel(numeric[i], expected[i]));
        }
        return worst;
    });
    double closed = 0.0, numeric = 0.0;
    for (const auto& r : rows) {
        closed = std::max(closed, r[0]);
        numeric = std::max(numeric, r[1]);
    }
    c.measures.push_back({"area formulas", formula_gap, 1e-12});
    c.measures.push_back({"closed-form vertices (rel)", closed, 1e-9});
    c.measures.push_back({"numerically located vertices (rel)", numeric, 1e-6});
    return c;
}

CheckResult poncelet_closure(const RunConfig& cfg) {
    CheckResult c{7, "Pre-image triangles share a half-size caustic", "poncelet-closure", {}, {}};
    const Ellipse e = cfg.ellipse();
    const double ha = e.a() / 2.0, hb = e.b() / 2.0;
    const ConicImplicit caustic(1.0 / (ha * ha), 0.0, 1.0 / (hb * hb), 0.0, 0.0, -1.0);
    double tangency = 0.0, centroid = 0.0;
    for (std::size_t k = 0; k < cfg.sweep_count; ++k) {
        const HatFrame f = build_hat_frame(e, BoundaryParam(grid(k, cfg.sweep_count)));
        const Triangle t = preimage_triangle(f);
        for (std::size_t i = 0; i < 3; ++i) {
            tangency = std::max(tangency, std::abs(tangency_defect(caustic, LineEq::through(t[i], t[(i + 1) % 3]))));
        }
        centroid = std::max(centroid, norm(triangle_center(t, 2, cfg.tolerance)));
    }
    c.measures.push_back({"side tangency defect", tangency, 1e-9});
    c.measures.push_back({"|X2(T)|", centroid, 1e-12});
    return c;
}

CheckResult homothety_perspectivity(const RunConfig& cfg) {
    CheckResult c{8, "Homothety and perspectors", "homothety-perspectivity", {}, {}};
    const Ellipse e = cfg.ellipse();
    double homothety = 0.0, where = 0.0, residual = 0.0;
    for (std::size_t k = 0; k < cfg.sweep_count; ++k) {
        const HatFrame f = build_hat_frame(e, BoundaryParam(grid(k, cfg.sweep_count)));
        for (std::size_t i = 0; i < 3; ++i) {
            homothety = std::max(homothety, distance(f.cusps[i], 2.0 * f.osc_centers[i] - f.m));
        }
        const Triangle t = preimage_triangle(f), tp = cusp_triangle(f), tpp = osculating_triangle(f);
        const auto p1 = perspector(t, tp, cfg.tolerance);
        const auto p2 = perspector(t, tpp, cfg.tolerance);
        const auto p3 = perspector(tp, tpp, cfg.tolerance);
        where = std::max({where, distance(p1.point, f.c2), distance(p2.point, triangle_center(t, 4, cfg.tolerance)),
                          distance(p3.point, f.m)});
        residual = std::max({residual, p1.residual, p2.residual, p3.residual});
    }
    c.measures.push_back({"P' vs 2P'' - M", homothety, 1e-10});
    c.measures.push_back({"perspectors vs C2, X4, M", where, 1e-9});
    c.measures.push_back({"concurrency residual", residual, 1e-9});
    return c;
}

CheckResult orthology_sondat(const RunConfig& cfg) {
    CheckResult c{9, "Orthology centers and perpendicular perspectrices", "orthology-sondat", {}, {}};
    const Ellipse e = cfg.ellipse();
    double centers = 0.0, cosine = 0.0;
    for (std::size_t k = 0; k < cfg.sweep_count; ++k) {
        const HatFrame f = build_hat_frame(e, BoundaryParam(grid(k, cfg.sweep_count)));
        const Triangle t = preimage_triangle(f), tp = cusp_triangle(f), tpp = osculating_triangle(f);
        const Point2 x4 = triangle_center(t, 4, cfg.tolerance);
        const Point2 x671 = triangle_center(t, 671, cfg.tolerance);
        const auto [o1, o2] = orthology_centers(t, tp, cfg.tolerance);
        centers = std::max({centers, distance(o1.point, x671), distance(o2.point, reflection_of_pole_about_orthocenter(f))});
        // The pair for (T, T'') is compared without regard to role order.
        const auto [q1, q2] = orthology_centers(t, tpp, cfg.tolerance);
        const double direct = std::max(distance(q1.point, x4), distance(q2.point, x671));
        const double swapped = std::max(distance(q1.point, x671), distance(q2.point, x4));
        centers = std::max(centers, std::min(direct, swapped));
        cosine = std::max({cosine, line_cosine(perspectrix(t, tp, cfg.tolerance), euler_line(t, cfg.tolerance)),
                           line_cosine(perspectrix(t, tpp, cfg.tolerance), LineEq::through(x4, x671))});
    }
    c.measures.push_back({"orthology centers", centers, 1e-8});
    c.measures.push_back({"|cos| perspectrix vs reference line", cosine, 1e-8});
    return c;
}

CheckResult tangency_regimes(const RunConfig& cfg) {
    CheckResult c{10, "Tangency regimes of hat and ellipse", "tangency-regimes", {}, {}};
    const Ellipse e = cfg.ellipse();
    const bool has_interior = e.a() * e.a() > 2.0 * e.b() * e.b();
    const double xstar = has_interior ? evolute_crossings(e).xstar : 0.0;
    struct Row {
        double mismatch{0.0};
        double off_curve{0.0};
        double inside{0.0};
    };
    const auto rows = parallel_map(cfg.sweep_count, [&](std::size_t k) {
        const BoundaryParam u(grid(k, cfg.sweep_count));
        const Point2 m = ellipse_point(e, u.value);
        Row r;
        if (has_interior && std::abs(std::abs(m.x) - xstar) < 1e-6 * e.a()) return r;
        const TangencyReport rep = hat_ellipse_intersections(e, u);
        const bool inside = inside_evolute(e, m);
        r.inside = inside ? 1.0 : 0.0;
        const std::size_t want_q = inside ? 3 : 1, want_pts = inside ? 5 : 3;
        const auto want_regime = inside ? TangencyRegime::InsideEvolute : TangencyRegime::OutsideEvolute;
        if (static_cast<std::size_t>(rep.q_real_root_count) != want_q || rep.intersection_points.size() != want_pts ||
            rep.regime != want_regime) {
            r.mismatch = 1.0;
        }
        for (const auto& p : rep.intersection_points) {
            r.off_curve = std::max({r.off_curve, std::abs(e.implicit_value(p)), distance_to_hat(e, u, p)});
        }
        return r;
    });
    double mismatches = 0.0, off = 0.0, inside = 0.0;
    for (const auto& r : rows) {
        mismatches += r.mismatch;
        off = std::max(off, r.off_curve);
        inside += r.inside;
    }
    c.measures.push_back({"regime mismatches", mismatches, 0.0});
    c.measures.push_back({"distance of reported points to E and the hat", off, 1e-6});
    if (has_interior) {
        c.measures.push_back({"bisected flip vs x*", std::abs(locate_regime_flip(e) - xstar), 1e-8});
        const double d = 1e-6 * e.a();
        const bool flips = tangency_cubic_discriminant(e, xstar - d) > 0.0 && tangency_cubic_discriminant(e, xstar + d) < 0.0;
        c.measures.push_back({"discriminant sign change at x*", flips ? 0.0 : 1.0, 0.0});
        c.measures.push_back({"interior poles sampled (>= 1 needed)", inside > 0.0 ? 0.0 : 1.0, 0.0});
    }
    return c;
}

CheckResult loci_crossings(const RunConfig& cfg) {
    CheckResult c{11, "Cusp locus and crossing events", "cusp-and-center-loci", {}, {}};
    const Ellipse e = cfg.ellipse();
    const ImplicitPoly2 sextic = cusp_locus_implicit(e);
    double residual = 0.0;
    for (std::size_t k = 0; k < 200; ++k) residual = std::max(residual, sextic.scaled_residual(cusp_locus_point(e, 3.0 * grid(k, 200))));
    c.measures.push_back({"sextic scaled residual", residual, 1e-8});

    const auto w = c2_crossings(e);
    const auto z = cusp_crossings(e);
    const auto c2_events = solve_c2_crossings(e, 0.0, kTwoPi);
    const auto cusp_events = solve_cusp_crossings(e, 0.0, 3.0 * kTwoPi);
    double c2_coinc = 0.0, c2_w = 0.0, cusp_coinc = 0.0, cusp_z = 0.0, on_e = 0.0;
    for (const auto& ev : c2_events) {
        c2_coinc = std::max(c2_coinc, ev.coincidence);
        c2_w = std::max(c2_w, nearest(ev.point, w));
    }
    for (const auto& ev : cusp_events) {
        cusp_coinc = std::max(cusp_coinc, ev.coincidence);
        cusp_z = std::max(cusp_z, nearest(ev.point, z));
        on_e = std::max(on_e, ev.ellipse_residual);
    }
    c.measures.push_back({"C2 crossings per revolution (|n - 4|)", std::abs(static_cast<double>(c2_events.size()) - 4.0), 0.0});
    c.measures.push_back({"|C2 - P_i| at crossings", c2_coinc, 1e-7});
    c.measures.push_back({"C2 crossings vs W_j", c2_w, 1e-7});
    c.measures.push_back({"cusp coincidences over 3 revolutions (|n - 12|)",
                          std::abs(static_cast<double>(cusp_events.size()) - 12.0), 0.0});
    c.measures.push_back({"|P_i' - P_i| at crossings", cusp_coinc, 1e-7});
    c.measures.push_back({"cusp crossings vs Z_i", cusp_z, 1e-7});
    c.measures.push_back({"cusp crossing ellipse residual", on_e, 1e-12});
    return c;
}

CheckResult rotated_hat(const RunConfig& cfg) {
    CheckResult c{12, "Hat of rotated lines", "rotated-hat", {}, {}};
    const Ellipse e = cfg.ellipse();
    const BoundaryParam u(cfg.u_or(0.7));
    double area = 0.0, center = 0.0, collapse = 0.0;
    for (double theta : {kPi / 6.0, kPi / 4.0, kPi / 3.0}) {
        const double expected = std::cos(theta) * std::cos(theta) * e.c4() * kPi / (2.0 * e.a() * e.b());
        area = std::max({area, rel(rotated_hat_area_numeric(e, u, theta, cfg.samples), expected),
                         rel(rotated_hat_area(e, theta), expected)});
        for (std::size_t k = 0; k < 16; ++k) {
            const BoundaryParam v(grid(k, 16) + 0.1);
            const Point2 want = rotate_about(hat_center(e, v), circle_K(e, v).center, -2.0 * theta);
            center = std::max(center, distance(rotated_center(e, v, theta), want));
        }
    }
    const Point2 m = ellipse_point(e, u.value);
    for (std::size_t k = 0; k < 64; ++k) collapse = std::max(collapse, distance(rotated_npc_point(e, u, kPi / 2.0, grid(k, 64)), m));
    c.measures.push_back({"traced area vs cos²θ·c⁴π/(2ab) (rel)", area, 1e-6});
    c.measures.push_back({"C2* vs C2 rotated by 2θ about X3", center, 1e-9});
    c.measures.push_back({"θ = π/2 distance to M", collapse, 1e-12});
    return c;
}

CheckResult center_coincidences(const RunConfig& cfg) {
    CheckResult c{13, "Center coincidences at random configurations", "center-coincidences", {}, {}};
    std::mt19937_64 gen(cfg.seed);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        // a/b in (1, 3]: 1 + 2(1 - U) with U in [0, 1).
        const double ratio = 1.0 + 2.0 * (1.0 - uniform01(gen));
        const double u = kTwoPi * uniform01(gen);
        for (const auto& row : coincidence_table_check(Ellipse(ratio, 1.0), BoundaryParam(u), cfg.tolerance)) {
            worst = std::max(worst, row.distance);
        }
    }
    c.measures.push_back({"max distance over 10 center pairs and 20 draws", worst, 1e-7});
    return c;
}

CheckResult cusp_steiner_ellipse(const RunConfig& cfg) {
    CheckResult c{14, "Steiner ellipse of the cusp triangle", "cusp-steiner-ellipse", {}, {}};
    const Ellipse e = cfg.ellipse();
    const double major = 3.0 * e.c2() / (2.0 * e.b()), minor = 3.0 * e.c2() / (2.0 * e.a());
    double closed = 0.0, fitted = 0.0;
    for (std::size_t k = 0; k < 64; ++k) {
        const BoundaryParam u(grid(k, 64));
        const auto ax = cusp_steiner_ellipse_conic(e, u).semi_axes();
        const auto fx = steiner_circumellipse(cusp_triangle(build_hat_frame(e, u)), cfg.tolerance).semi_axes();
        if (!ax || !fx) throw GeometryError(ErrorCode::Degenerate, "Steiner ellipse is not a real ellipse");
        closed = std::max({closed, std::abs(ax->major - major), std::abs(ax->minor - minor)});
        fitted = std::max({fitted, std::abs(fx->major - major), std::abs(fx->minor - minor)});
    }
    const Ellipse congruent((1.0 + std::sqrt(10.0)) / 3.0, 1.0);
    const auto area = cusp_steiner_ellipse_conic(congruent, BoundaryParam(0.4)).area();
    c.measures.push_back({"conic semi-axes vs 3c²/(2b), 3c²/(2a)", closed, 1e-10});
    c.measures.push_back({"Steiner ellipse of T' semi-axes", fitted, 1e-10});
    c.measures.push_back({"area ratio at a/b = (1+√10)/3 minus 1",
                          area ? std::abs(*area / congruent.area() - 1.0) : std::numeric_limits<double>::infinity(), 1e-9});
    return c;
}

CheckResult guarded(const std::function<CheckResult(const RunConfig&)>& check, const RunConfig& cfg, int id,
                    const char* name, const char* anchor) {
    try {
        return check(cfg);
    } catch (const std::exception& ex) {
        CheckResult c{id, name, anchor, {}, ex.what()};
        return c;
    }
}

}  // namespace

VerificationReport run_verification(const RunConfig& cfg) {
    cfg.validate();
    struct Entry {
        std::function<CheckResult(const RunConfig&)> fn;
        const char* name;
        const char* anchor;
    };
    const std::array<Entry, 14> entries{{
        {hat_area_invariance, "Hat area invariance", "hat-area-invariance"},
        {area_ratio_table, "Hat to ellipse area ratios", "area-ratio-table"},
        {envelope_oracle, "Closed-form envelope vs line-intersection oracle", "envelope-oracle"},
        {concyclic_points, "M, C2 and the pre-images are concyclic", "concyclic-five-points"},
        {osculating_circles, "Osculating circles through M", "osculating-circles"},
        {triangle_areas, "Areas of T, T' and T''", "triangle-areas"},
        {poncelet_closure, "Pre-image triangles share a half-size caustic", "poncelet-closure"},
        {homothety_perspectivity, "Homothety and perspectors", "homothety-perspectivity"},
        {orthology_sondat, "Orthology centers and perpendicular perspectrices", "orthology-sondat"},
        {tangency_regimes, "Tangency regimes of hat and ellipse", "tangency-regimes"},
        {loci_crossings, "Cusp locus and crossing events", "cusp-and-center-loci"},
        {rotated_hat, "Hat of rotated lines", "rotated-hat"},
        {center_coincidences, "Center coincidences at random configurations", "center-coincidences"},
        {cusp_steiner_ellipse, "Steiner ellipse of the cusp triangle", "cusp-steiner-ellipse"},
    }};
    VerificationReport r;
    r.seed = cfg.seed;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        CheckResult c = guarded(entries[i].fn, cfg, static_cast<int>(i + 1), entries[i].name, entries[i].anchor);
        for (auto& m : c.measures) m.tolerance *= cfg.threshold_scale();
        r.checks.push_back(std::move(c));
    }
    return r;
}

std::string summary_line(const CheckResult& c) {
    char buf[256];
    const Measure* w = c.worst();
    if (!c.detail.empty() || w == nullptr) {
        std::snprintf(buf, sizeof buf, "%s [%2d] %-26s error: ", c.pass() ? "PASS" : "FAIL", c.id, c.anchor.c_str());
        return std::string(buf) + (c.detail.empty() ? "no measures" : c.detail);
    }
    std::snprintf(buf, sizeof buf, "%s [%2d] %-26s worst=%.3e tol=%.1e (%s)", c.pass() ? "PASS" : "FAIL", c.id,
                  c.anchor.c_str(), w->value, w->tolerance, w->label.c_str());
    return buf;
}

nlohmann::json to_json(const VerificationReport& r, const RunConfig& cfg) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json measures = nlohmann::json::array();
        for (const auto& m : c.measures) {
            measures.push_back({{"label", m.label}, {"value", m.value}, {"tolerance", m.tolerance}, {"pass", m.pass()}});
        }
        const Measure* w = c.worst();
        checks.push_back({{"id", c.id},
                          {"name", c.name},
                          {"anchor", c.anchor},
                          {"pass", c.pass()},
                          {"max_residual", w ? nlohmann::json(w->value) : nlohmann::json(nullptr)},
                          {"tolerance", w ? nlohmann::json(w->tolerance) : nlohmann::json(nullptr)},
                          {"measures", measures},
                          {"detail", c.detail}});
    }
    return {{"schema", 1},
            {"kind", "verification"},
            {"config", config_json(cfg)},
            {"seed", r.seed},
            {"threshold_scale", cfg.threshold_scale()},
            {"checks", checks},
            {"summary", {{"passed", r.passed()}, {"failed", r.checks.size() - r.passed()}, {"total", r.checks.size()}}}};
}

std::string to_csv(const VerificationReport& r) {
    CsvTable t({"id", "anchor", "measure", "value", "tolerance", "pass"});
    for (const auto& c : r.checks) {
        if (!c.detail.empty()) t.add_row({std::to_string(c.id), c.anchor, "error", "nan", "0", "0"});
        for (const auto& m : c.measures) {
            std::string label = m.label;
            std::replace(label.begin(), label.end(), ',', ';');
            t.add_row({std::to_string(c.id), c.anchor, label, format_real(m.value), format_real(m.tolerance),
                       m.pass() ? "1" : "0"});
        }
    }
    return t.str();
}

}  // namespace steinerhat::app
