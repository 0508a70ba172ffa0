#pragma once

#include <span>
#include <vector>

#include "polygeo/poly.hpp"
#include "polygeo/roots.hpp"

namespace polygeo {

/// Convex hull of a finite planar point set. Vertices are the extreme points
/// in counterclockwise order starting from the lowest-then-leftmost one;
/// degenerate hulls (single point, segment) are first-class.
struct HullPolygon {
    std::vector<Complex> vertices;
};

/// Maximum pairwise distance; 0 for empty and singleton sets.
double diameter(std::span<const Complex> points);

/// Diameter over cluster centers; multiplicity is ignored (a multiset and its
/// support have equal diameter).
double diameter(const ZeroSet& zs);

/// Monotone-chain construction; duplicates are removed first.
HullPolygon convex_hull(std::span<const Complex> points);

/// Signed distance from a point to the hull: positive inside (distance to the
/// boundary), negative outside (minus the distance to the hull), and <= 0 for
/// the degenerate point/segment hulls.
double signed_margin(const HullPolygon& hull, Complex p);

struct ContainmentReport {
    bool inside = false;
    std::vector<double> margins;
};

/// True iff every point has signed margin >= -tol. Requires tol >= 0.
ContainmentReport hull_contains(const HullPolygon& hull, std::span<const Complex> points,
                                double tol);

struct GaussLucasReport {
    bool pass = false;
    double tol = 0.0;
    std::vector<double> margins;
    ZeroSet roots;
    ZeroSet critical_points;
    HullPolygon hull;
};

/// Checks that the zeros of P' lie in the convex hull of the zeros of P,
/// within a signed-distance tolerance. Requires degree(p) >= 2. The default
/// root config is multiplicity aware so that collided roots appear as single
/// hull points.
GaussLucasReport gauss_lucas_check(const Polynomial& p, double tol = 1e-7,
                                   const RootConfig& cfg = multiplicity_config());

}  // namespace polygeo
