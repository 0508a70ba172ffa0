#include "polygeo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "polygeo/errors.hpp"

namespace polygeo {

namespace {

std::string num(double v) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.6g", v);
    return buffer;
}

}  // namespace

void write_zero_scatter_svg(const std::string& path, std::span<const Complex> roots,
                            std::span<const Complex> critical_points,
                            const std::optional<HullPolygon>& hull) {
    double lo_x = -1.0, hi_x = 1.0, lo_y = -1.0, hi_y = 1.0;
    bool any = false;
    auto grow = [&](Complex z) {
        if (!any) {
            lo_x = hi_x = z.real();
            lo_y = hi_y = z.imag();
            any = true;
        } else {
            lo_x = std::min(lo_x, z.real());
            hi_x = std::max(hi_x, z.real());
            lo_y = std::min(lo_y, z.imag());
            hi_y = std::max(hi_y, z.imag());
        }
    };
    for (const Complex& z : roots) grow(z);
    for (const Complex& z : critical_points) grow(z);
    if (hull) {
        for (const Complex& z : hull->vertices) grow(z);
    }
    const double pad = std::max({0.5, (hi_x - lo_x) * 0.1, (hi_y - lo_y) * 0.1});
    lo_x -= pad;
    hi_x += pad;
    lo_y -= pad;
    hi_y += pad;

    const double size = 480.0;
    const double span = std::max(hi_x - lo_x, hi_y - lo_y);
    auto px = [&](Complex z) { return (z.real() - lo_x) / span * size; };
    auto py = [&](Complex z) { return size - (z.imag() - lo_y) / span * size; };  // y up

    std::ofstream out(path);
    if (!out) throw IoError("cannot open SVG output file: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(size) << "\" height=\""
        << num(size) << "\" viewBox=\"0 0 " << num(size) << " " << num(size) << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (hull && !hull->vertices.empty()) {
        out << "  <polygon points=\"";
        for (std::size_t i = 0; i < hull->vertices.size(); ++i) {
            if (i > 0) out << " ";
            out << num(px(hull->vertices[i])) << "," << num(py(hull->vertices[i]));
        }
        out << "\" fill=\"#8ecae622\" stroke=\"#1d6fa5\" stroke-width=\"1.5\"/>\n";
    }
    for (const Complex& z : roots) {
        out << "  <circle cx=\"" << num(px(z)) << "\" cy=\"" << num(py(z))
            << "\" r=\"5\" fill=\"none\" stroke=\"#d1495b\" stroke-width=\"2\"/>\n";
    }
    const double c = 5.0;
    for (const Complex& z : critical_points) {
        const double x = px(z), y = py(z);
        out << "  <line x1=\"" << num(x - c) << "\" y1=\"" << num(y - c) << "\" x2=\""
            << num(x + c) << "\" y2=\"" << num(y + c)
            << "\" stroke=\"#2a9d8f\" stroke-width=\"2\"/>\n";
        out << "  <line x1=\"" << num(x - c) << "\" y1=\"" << num(y + c) << "\" x2=\""
            << num(x + c) << "\" y2=\"" << num(y - c)
            << "\" stroke=\"#2a9d8f\" stroke-width=\"2\"/>\n";
    }
    out << "</svg>\n";
    if (!out.good()) throw IoError("failed while writing SVG: " + path);
}

}  // namespace polygeo
