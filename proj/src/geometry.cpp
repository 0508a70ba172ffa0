#include "polygeo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polygeo/errors.hpp"

namespace polygeo {

namespace {

double cross(Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

double point_segment_distance(Complex p, Complex a, Complex b) {
    if (p == a || p == b) return 0.0;  // do not leave rounding dust on the endpoints
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

bool lex_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

double diameter(std::span<const Complex> points) {
    double best = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            best = std::max(best, std::abs(points[i] - points[j]));
        }
    }
    return best;
}

double diameter(const ZeroSet& zs) {
    const auto locs = zs.locations();
    return diameter(locs);
}

HullPolygon convex_hull(std::span<const Complex> points) {
    std::vector<Complex> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    HullPolygon hull;
    if (pts.size() <= 2) {
        hull.vertices = pts;
    } else {
        std::vector<Complex> h(2 * pts.size());
        std::size_t k = 0;
        for (const Complex& p : pts) {  // lower chain
            while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0.0) --k;
            h[k++] = p;
        }
        const std::size_t lower = k + 1;
        for (std::size_t i = pts.size() - 1; i-- > 0;) {  // upper chain
            const Complex p = pts[i];
            while (k >= lower && cross(h[k - 2], h[k - 1], p) <= 0.0) --k;
            h[k++] = p;
        }
        h.resize(k - 1);  // last point equals the first
        hull.vertices = std::move(h);
    }

    // Deterministic start: lowest imaginary part, then leftmost.
    if (hull.vertices.size() > 1) {
        const auto start = std::min_element(
            hull.vertices.begin(), hull.vertices.end(), [](Complex a, Complex b) {
                if (a.imag() != b.imag()) return a.imag() < b.imag();
                return a.real() < b.real();
            });
        std::rotate(hull.vertices.begin(), start, hull.vertices.end());
    }
    return hull;
}

double signed_margin(const HullPolygon& hull, Complex p) {
    const auto& v = hull.vertices;
    if (v.empty()) return -std::numeric_limits<double>::infinity();
    if (v.size() == 1) return -std::abs(p - v[0]);
    if (v.size() == 2) return -point_segment_distance(p, v[0], v[1]);

    bool inside = true;
    double min_line = std::numeric_limits<double>::infinity();
    double min_boundary = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Complex a = v[i];
        const Complex b = v[(i + 1) % v.size()];
        const double c = cross(a, b, p);
        if (c < 0.0) inside = false;
        min_line = std::min(min_line, c / std::abs(b - a));
        min_boundary = std::min(min_boundary, point_segment_distance(p, a, b));
    }
    return inside ? min_line : -min_boundary;
}

ContainmentReport hull_contains(const HullPolygon& hull, std::span<const Complex> points,
                                double tol) {
    if (tol < 0.0) throw DomainError("hull_contains: tolerance must be nonnegative");
    ContainmentReport report;
    report.inside = true;
    report.margins.reserve(points.size());
    for (const Complex& p : points) {
        const double m = signed_margin(hull, p);
        report.margins.push_back(m);
        if (!(m >= -tol)) report.inside = false;
    }
    return report;
}

GaussLucasReport gauss_lucas_check(const Polynomial& p, double tol, const RootConfig& cfg) {
    // Defaults must collapse multiple roots: inputs like (z+a)^s have
    // single-point zero sets and hulls.
    if (p.degree() < 2) throw DegreeTooLow("gauss_lucas_check requires degree >= 2");
    GaussLucasReport report;
    report.tol = tol;
    report.roots = find_roots(p, cfg);
    report.critical_points = find_roots(p.derivative(), cfg);
    report.hull = convex_hull(report.roots.locations());
    const auto crit = report.critical_points.locations();
    const auto containment = hull_contains(report.hull, crit, tol);
    report.margins = containment.margins;
    report.pass = containment.inside;
    return report;
}

}  // namespace polygeo
