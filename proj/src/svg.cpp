#include "bgp/svg.hpp"

#include <cstdio>

namespace bgp {

namespace {

constexpr double kWidthPx = 640.0;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Window& window, const Region& region,
                       const std::vector<Vec2>& germ_markers) {
    const double px_per_unit = kWidthPx / window.width();
    const double height_px = window.height() * px_per_unit;
    auto X = [&](double x) { return (x - window.x0) * px_per_unit; };
    auto Y = [&](double y) { return (window.y1 - y) * px_per_unit; };  // y up

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidthPx) +
           "\" height=\"" + fmt(height_px) + "\" viewBox=\"0 0 " + fmt(kWidthPx) + " " +
           fmt(height_px) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt(kWidthPx) + "\" height=\"" +
           fmt(height_px) +
           "\" fill=\"#ffffff\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    for (const ConvexBody& c : region.components()) {
        const std::vector<Vec2>& v = c.vertices();
        std::string d = "M " + fmt(X(v[0].x)) + " " + fmt(Y(v[0].y));
        for (std::size_t i = 1; i < v.size(); ++i) {
            d += " L " + fmt(X(v[i].x)) + " " + fmt(Y(v[i].y));
        }
        d += " Z";
        svg += "<path d=\"" + d +
               "\" fill=\"#4477aa\" fill-opacity=\"0.45\" stroke=\"#224466\" "
               "stroke-width=\"1\"/>\n";
    }
    for (const Vec2& m : germ_markers) {
        svg += "<circle cx=\"" + fmt(X(m.x)) + "\" cy=\"" + fmt(Y(m.y)) +
               "\" r=\"2.5\" fill=\"#aa3322\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace bgp
