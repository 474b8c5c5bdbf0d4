#pragma once

#include <steinerhat/geometry.hpp>
#include <steinerhat_app/config.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace steinerhat::app {

/// Collects shapes in world coordinates and writes them as a standalone SVG 1.1
/// document. The viewBox is fitted to everything drawn plus a 5% margin; y points
/// up in the world and is flipped on output. Only absolute coordinates are used.
class SvgCanvas {
public:
    struct Style {
        std::string stroke{"#000000"};
        double width{1.0};  ///< pixels
        std::string fill{"none"};
        std::string dash;  ///< stroke-dasharray, empty for solid
    };

    explicit SvgCanvas(std::string title, double width_px = 800.0);

    void polyline(std::span<const Point2> pts, const Style& style, bool closed = false);
    void circle(const Circle& c, const Style& style);
    /// Dot of fixed pixel radius.
    void marker(Point2 p, const std::string& color, double radius_px = 3.5);
    void label(Point2 p, std::string text, const std::string& color = "#000000");
    void legend(const std::string& color, std::string text);
    /// A line of text under the legend, e.g. a measured value.
    void note(std::string text);

    /// Bounds are taken from shapes only; labels never widen the view.
    [[nodiscard]] std::string str() const;

private:
    struct Shape {
        enum class Kind { Polyline, Polygon, Circle, Marker, Label } kind;
        std::vector<Point2> pts;
        double radius{0.0};
        Style style;
        std::string text;
    };

    std::string title_;
    double width_px_;
    std::vector<Shape> shapes_;
    std::vector<std::pair<std::string, std::string>> legend_;
    std::vector<std::string> notes_;
};

/// Names accepted by render_figure, in a fixed order.
[[nodiscard]] std::span<const std::string_view> figure_names() noexcept;

/// Renders one named figure for the configuration. Throws UsageError for an unknown name.
[[nodiscard]] std::string render_figure(std::string_view name, const RunConfig& cfg);

}  // namespace steinerhat::app
