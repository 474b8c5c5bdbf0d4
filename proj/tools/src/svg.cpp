#include <steinerhat/envelope.hpp>
#include <steinerhat/error.hpp>
#include <steinerhat/hat.hpp>
#include <steinerhat/loci.hpp>
#include <steinerhat/quadrature.hpp>
#include <steinerhat/tangency.hpp>
#include <steinerhat/triads.hpp>
#include <steinerhat_app/svg.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

namespace steinerhat::app {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

SvgCanvas::SvgCanvas(std::string title, double width_px) : title_(std::move(title)), width_px_(width_px) {}

void SvgCanvas::polyline(std::span<const Point2> pts, const Style& style, bool closed) {
    shapes_.push_back({closed ? Shape::Kind::Polygon : Shape::Kind::Polyline, {pts.begin(), pts.end()}, 0.0, style, {}});
}

void SvgCanvas::circle(const Circle& c, const Style& style) {
    shapes_.push_back({Shape::Kind::Circle, {c.center}, c.radius, style, {}});
}

void SvgCanvas::marker(Point2 p, const std::string& color, double radius_px) {
    shapes_.push_back({Shape::Kind::Marker, {p}, radius_px, {"none", 0.0, color, {}}, {}});
}

void SvgCanvas::label(Point2 p, std::string text, const std::string& color) {
    shapes_.push_back({Shape::Kind::Label, {p}, 0.0, {"none", 0.0, color, {}}, std::move(text)});
}

void SvgCanvas::legend(const std::string& color, std::string text) { legend_.emplace_back(color, std::move(text)); }

void SvgCanvas::note(std::string text) { notes_.push_back(std::move(text)); }

std::string SvgCanvas::str() const {
    double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
    const auto grow = [&](Point2 p, double r) {
        x0 = std::min(x0, p.x - r);
        x1 = std::max(x1, p.x + r);
        y0 = std::min(y0, p.y - r);
        y1 = std::max(y1, p.y + r);
    };
    for (const auto& s : shapes_) {
        if (s.kind == Shape::Kind::Label) continue;
        for (const auto& p : s.pts) grow(p, s.kind == Shape::Kind::Circle ? s.radius : 0.0);
    }
    if (!std::isfinite(x0)) x0 = y0 = -1.0, x1 = y1 = 1.0;
    double span_x = x1 - x0, span_y = y1 - y0;
    if (span_x <= 0.0) span_x = 1.0;
    if (span_y <= 0.0) span_y = 1.0;
    x0 -= 0.05 * span_x, x1 += 0.05 * span_x;
    y0 -= 0.05 * span_y, y1 += 0.05 * span_y;
    const double scale = width_px_ / (x1 - x0);
    const double height_px = (y1 - y0) * scale;
    const auto px = [&](Point2 p) { return num((p.x - x0) * scale) + "," + num((y1 - p.y) * scale); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width_px_) + "\" height=\"" +
           num(height_px) + "\" viewBox=\"0 0 " + num(width_px_) + " " + num(height_px) + "\">\n";
    out += "<title>" + escape(title_) + "</title>\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + num(width_px_) + "\" height=\"" + num(height_px) + "\" fill=\"#ffffff\"/>\n";
    const auto stroke_attrs = [&](const Style& st) {
        std::string a = "fill=\"" + st.fill + "\" stroke=\"" + st.stroke + "\" stroke-width=\"" + num(st.width) + "\"";
        if (!st.dash.empty()) a += " stroke-dasharray=\"" + st.dash + "\"";
        return a;
    };
    for (const auto& s : shapes_) {
        switch (s.kind) {
            case Shape::Kind::Polyline:
            case Shape::Kind::Polygon: {
                out += s.kind == Shape::Kind::Polygon ? "<polygon points=\"" : "<polyline points=\"";
                for (std::size_t i = 0; i < s.pts.size(); ++i) {
                    if (i > 0) out += ' ';
                    out += px(s.pts[i]);
                }
                out += "\" " + stroke_attrs(s.style) + " stroke-linejoin=\"round\"/>\n";
                break;
            }
            case Shape::Kind::Circle:
                out += "<circle cx=\"" + num((s.pts[0].x - x0) * scale) + "\" cy=\"" + num((y1 - s.pts[0].y) * scale) +
                       "\" r=\"" + num(s.radius * scale) + "\" " + stroke_attrs(s.style) + "/>\n";
                break;
            case Shape::Kind::Marker:
                out += "<circle cx=\"" + num((s.pts[0].x - x0) * scale) + "\" cy=\"" + num((y1 - s.pts[0].y) * scale) +
                       "\" r=\"" + num(s.radius) + "\" fill=\"" + s.style.fill + "\"/>\n";
                break;
            case Shape::Kind::Label:
                out += "<text x=\"" + num((s.pts[0].x - x0) * scale + 5.0) + "\" y=\"" +
                       num((y1 - s.pts[0].y) * scale - 5.0) + "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"" +
                       s.style.fill + "\">" + escape(s.text) + "</text>\n";
                break;
        }
    }
    double y = 18.0;
    for (const auto& [color, text] : legend_) {
        out += "<line x1=\"10.000\" y1=\"" + num(y - 4.0) + "\" x2=\"34.000\" y2=\"" + num(y - 4.0) + "\" stroke=\"" + color +
               "\" stroke-width=\"3.000\"/>\n";
        out += "<text x=\"40.000\" y=\"" + num(y) + "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(text) +
               "</text>\n";
        y += 16.0;
    }
    for (const auto& text : notes_) {
        out += "<text x=\"10.000\" y=\"" + num(y) + "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(text) +
               "</text>\n";
        y += 16.0;
    }
    out += "</svg>\n";
    return out;
}

namespace {

constexpr std::array<std::string_view, 6> kFigures{"main", "preimg_tri", "osculating", "cusp-loci", "deltoid-tangs", "npc-rot"};

const std::string kEllipse = "#1f4e9e";
const std::string kHat = "#c0392b";
const std::string kCusp = "#7d3c98";
const std::string kPre = "#117a65";
const std::string kOsc = "#d68910";
const std::string kAux = "#7f8c8d";

std::vector<Point2> sample(const std::function<Point2(double)>& f, double t0, double t1, std::size_t n) {
    std::vector<Point2> pts;
    pts.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) pts.push_back(f(t0 + (t1 - t0) * static_cast<double>(k) / static_cast<double>(n)));
    return pts;
}

std::string fmt(const char* pattern, double v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

void draw_ellipse(SvgCanvas& s, const Ellipse& e) {
    s.polyline(sample([&](double t) { return ellipse_point(e, t); }, 0.0, kTwoPi, 360), {kEllipse, 2.0, "none", {}}, true);
    s.legend(kEllipse, "ellipse E");
}

void draw_hat(SvgCanvas& s, const Ellipse& e, BoundaryParam u) {
    s.polyline(sample([&](double t) { return deltoid_point(e, u, t); }, 0.0, kTwoPi, 720), {kHat, 2.0, "none", {}}, true);
    s.legend(kHat, "negative pedal curve (hat)");
}

void draw_triangle(SvgCanvas& s, const Triangle& t, const std::string& color, const std::string& dash = {}) {
    const std::array<Point2, 3> v{t[0], t[1], t[2]};
    s.polyline(v, {color, 1.5, "none", dash}, true);
}

void draw_pole(SvgCanvas& s, const HatFrame& f) {
    s.marker(f.m, "#000000", 4.0);
    s.label(f.m, "M");
}

std::string main_figure(const RunConfig& cfg) {
    const Ellipse e = cfg.ellipse();
    const BoundaryParam u(cfg.u_or(0.8));
    const HatFrame f = build_hat_frame(e, u);
    SvgCanvas s("Negative pedal curve of an ellipse");
    draw_ellipse(s, e);
    if (f.degenerate) {
        s.marker(f.c2, kHat, 4.0);
        s.note("a = b: the curve collapses to the point -M");
    } else {
        draw_hat(s, e, u);
        for (std::size_t i = 0; i < 3; ++i) {
            s.marker(f.cusps[i], kCusp);
            s.label(f.cusps[i], "P" + std::to_string(i + 1) + "'", kCusp);
        }
        s.legend(kCusp, "cusps");
    }
    s.marker(f.c2, "#000000", 4.0);
    s.label(f.c2, "C2");
    draw_pole(s, f);
    s.note(fmt("area(hat) / area(E) = %.6f", hat_area(e) / e.area()));
    return s.str();
}

std::string preimage_figure(const RunConfig& cfg) {
    const Ellipse e = cfg.ellipse();
    const BoundaryParam u(cfg.u_or(0.8));
    const HatFrame f = build_hat_frame(e, u);
    SvgCanvas s("Pre-image, cusp and osculating-center triangles");
    draw_ellipse(s, e);
    draw_hat(s, e, u);
    const Ellipse caustic(e.a() / 2.0, e.b() / 2.0);
    s.polyline(sample([&](double t) { return ellipse_point(caustic, t); }, 0.0, kTwoPi, 240), {kAux, 1.0, "none", "4 3"}, true);
    s.legend(kAux, "caustic (a/2, b/2)");
    draw_triangle(s, preimage_triangle(f), kPre);
    s.legend(kPre, "T (pre-images)");
    draw_triangle(s, cusp_triangle(f), kCusp);
    s.legend(kCusp, "T' (cusps)");
    draw_triangle(s, osculating_triangle(f), kOsc);
    s.legend(kOsc, "T'' (osculating centers)");
    for (std::size_t i = 0; i < 3; ++i) {
        s.marker(f.preimages[i], kPre);
        s.marker(f.cusps[i], kCusp);
        s.marker(f.osc_centers[i], kOsc);
    }
    draw_pole(s, f);
    s.note(fmt("area(T') / area(T'') = %.6f", cusp_triangle_area(e) / osculating_triangle_area(e)));
    return s.str();
}

std::string osculating_figure(const RunConfig& cfg) {
    const Ellipse e = cfg.ellipse();
    const BoundaryParam u(cfg.u_or(0.8));
    const HatFrame f = build_hat_frame(e, u);
    SvgCanvas s("Osculating circles at the pre-images");
    draw_ellipse(s, e);
    draw_hat(s, e, u);
    s.polyline(sample([&](double t) { return evolute_point(e, t); }, 0.0, kTwoPi, 720), {kAux, 1.0, "none", {}}, true);
    s.legend(kAux, "evolute");
    for (int i = 1; i <= 3; ++i) {
        s.circle(osculating_circle(e, u, i), {kOsc, 1.2, "none", {}});
        s.marker(f.preimages[static_cast<std::size_t>(i - 1)], kPre);
        s.marker(f.osc_centers[static_cast<std::size_t>(i - 1)], kOsc);
    }
    s.legend(kOsc, "osculating circles K1, K2, K3");
    s.circle(circle_K(e, u), {kPre, 1.2, "none", "6 3"});
    s.legend(kPre, "circle K through M, C2, P1, P2, P3");
    s.marker(f.c2, "#000000", 4.0);
    s.label(f.c2, "C2");
    draw_pole(s, f);
    return s.str();
}

std::string cusp_loci_figure(const RunConfig& cfg) {
    const Ellipse e = cfg.ellipse();
    SvgCanvas s("Loci of the cusps and of C2");
    draw_ellipse(s, e);
    s.polyline(sample([&](double v) { return cusp_locus_point(e, v); }, 0.0, 3.0 * kTwoPi, 2160), {kCusp, 1.5, "none", {}}, true);
    s.legend(kCusp, "cusp locus");
    s.polyline(sample([&](double u) { return hat_center(e, BoundaryParam(u)); }, 0.0, kTwoPi, 360), {kHat, 1.5, "none", "6 3"},
               true);
    s.legend(kHat, "locus of C2");
    for (const auto& w : c2_crossings(e)) s.marker(w, kHat);
    for (const auto& z : cusp_crossings(e)) s.marker(z, kCusp);
    s.marker({0.0, 0.0}, "#000000", 2.5);
    s.note("self-intersections of the cusp locus: " + std::to_string(cusp_locus_self_intersections(e)));
    return s.str();
}

// Branches of a conic that is linear in y (no y² term), clipped to a box.
void draw_linear_in_y(SvgCanvas& s, const ConicImplicit& q, double half, const SvgCanvas::Style& style) {
    const auto& k = q.coefficients();  // A x² + B xy + C y² + D x + E y + F
    std::vector<Point2> branch;
    constexpr std::size_t n = 1200;
    for (std::size_t i = 0; i <= n; ++i) {
        const double x = -half + 2.0 * half * static_cast<double>(i) / n;
        const double den = k[1] * x + k[4];
        const double y = std::abs(den) > 1e-12 ? -(k[0] * x * x + k[3] * x + k[5]) / den : std::nan("");
        if (std::isfinite(y) && std::abs(y) <= half) {
            branch.push_back({x, y});
        } else if (!branch.empty()) {
            if (branch.size() > 1) s.polyline(branch, style);
            branch.clear();
        }
    }
    if (branch.size() > 1) s.polyline(branch, style);
}

std::string tangency_figure(const RunConfig& cfg) {
    const Ellipse e = cfg.ellipse();
    const BoundaryParam u(cfg.u_or(kPi / 2.0));
    const HatFrame f = build_hat_frame(e, u);
    SvgCanvas s("Contacts between the hat and the ellipse");
    draw_ellipse(s, e);
    draw_hat(s, e, u);
    s.polyline(sample([&](double t) { return evolute_point(e, t); }, 0.0, kTwoPi, 720), {kAux, 1.0, "none", {}}, true);
    s.legend(kAux, "evolute");
    const auto hyp = apollonius_hyperbola(e, f.m);
    draw_linear_in_y(s, hyp.conic, 1.2 * e.a(), {kPre, 1.0, "none", "5 3"});
    s.legend(kPre, "Apollonius hyperbola of M");
    const TangencyReport rep = hat_ellipse_intersections(e, u);
    for (const auto& p : rep.tangency_points) s.marker(p, kCusp, 4.5);
    for (const auto& p : rep.transversal_points) s.marker(p, kOsc, 3.5);
    s.legend(kCusp, "tangency points");
    s.legend(kOsc, "transversal crossings");
    draw_pole(s, f);
    s.note(std::string("regime: ") + to_string(rep.regime));
    return s.str();
}

std::string rotated_figure(const RunConfig& cfg) {
    const Ellipse e = cfg.ellipse();
    const BoundaryParam u(cfg.u_or(0.8));
    const double theta = cfg.theta.value_or(kPi / 4.0);
    const HatFrame f = build_hat_frame(e, u);
    SvgCanvas s("Hat of rotated lines");
    draw_ellipse(s, e);
    draw_hat(s, e, u);
    s.polyline(sample([&](double t) { return rotated_npc_point(e, u, theta, t); }, 0.0, kTwoPi, 720),
               {kCusp, 2.0, "none", "6 3"}, true);
    s.legend(kCusp, fmt("hat of lines rotated by %.4f", theta));
    s.marker(rotated_center(e, u, theta), kCusp);
    s.marker(f.c2, kHat);
    draw_pole(s, f);
    const double c = std::cos(theta);
    s.note(fmt("area ratio rotated / original = %.6f", c * c));
    return s.str();
}

}  // namespace

std::span<const std::string_view> figure_names() noexcept { return kFigures; }

std::string render_figure(std::string_view name, const RunConfig& cfg) {
    if (name == "main") return main_figure(cfg);
    if (name == "preimg_tri") return preimage_figure(cfg);
    if (name == "osculating") return osculating_figure(cfg);
    if (name == "cusp-loci") return cusp_loci_figure(cfg);
    if (name == "deltoid-tangs") return tangency_figure(cfg);
    if (name == "npc-rot") return rotated_figure(cfg);
    throw UsageError("unknown figure '" + std::string(name) + "'");
}

}  // namespace steinerhat::app
