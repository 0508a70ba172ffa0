#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "polygeo/errors.hpp"
#include "polygeo/poly.hpp"
#include "polygeo/rng.hpp"
#include "polygeo/roots.hpp"

using namespace polygeo;

namespace {

/// Greedy one-to-one matching; adequate for the well-separated sets used here.
double max_pairing_distance(std::vector<Complex> found, std::vector<Complex> expected) {
    REQUIRE(found.size() == expected.size());
    double worst = 0.0;
    for (const Complex& f : found) {
        std::size_t best = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < expected.size(); ++i) {
            const double d = std::abs(f - expected[i]);
            if (d < best_dist) {
                best_dist = d;
                best = i;
            }
        }
        worst = std::max(worst, best_dist);
        expected.erase(expected.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return worst;
}

std::vector<Complex> separated_roots(Rng& rng, int count, double min_sep) {
    std::vector<Complex> roots;
    while (static_cast<int>(roots.size()) < count) {
        const Complex candidate = rng.in_disk(2.0);
        bool ok = true;
        for (const Complex& r : roots) {
            if (std::abs(candidate - r) < min_sep) ok = false;
        }
        if (ok) roots.push_back(candidate);
    }
    return roots;
}

}  // namespace

TEST_CASE("simple quadratic") {
    const Polynomial p({{-1, 0}, {0, 0}, {1, 0}});  // z^2 - 1
    const ZeroSet zs = find_roots(p);
    REQUIRE(zs.points.size() == 2);
    CHECK(std::abs(zs.points[0].location - Complex{-1, 0}) <= 1e-10);
    CHECK(std::abs(zs.points[1].location - Complex{1, 0}) <= 1e-10);
    CHECK(zs.points[0].multiplicity == 1);
    CHECK(zs.total_multiplicity() == 2);
}

TEST_CASE("triple root clusters to one center") {
    // (z - (1+i))^3 = z^3 - 3w z^2 + 3w^2 z - w^3 with w = 1+i.
    const Polynomial p({{2, -2}, {0, 6}, {-3, -3}, {1, 0}});
    RootConfig cfg;
    cfg.cluster_radius = 1e-4;
    const ZeroSet zs = find_roots(p, cfg);
    REQUIRE(zs.points.size() == 1);
    CHECK(zs.points[0].multiplicity == 3);
    CHECK(std::abs(zs.points[0].location - Complex{1, 1}) <= 1e-4);
}

TEST_CASE("ten well-separated integer roots") {
    std::vector<Complex> expected;
    for (int j = 1; j <= 10; ++j) expected.push_back({static_cast<double>(j), 0});
    const Polynomial p = Polynomial::from_roots(expected, {1, 0});
    const ZeroSet zs = find_roots(p);
    REQUIRE(zs.points.size() == 10);
    for (const RootCluster& c : zs.points) {
        CHECK(std::abs(p.evaluate(c.location)) <=
              1e-6 * p.coeff_scale() * std::pow(std::max(1.0, std::abs(c.location)), 10));
    }
    CHECK(max_pairing_distance(zs.locations(), expected) <= 1e-6);
}

TEST_CASE("distinct zero counts") {
    CHECK(distinct_zero_count(Polynomial{}) == 0);
    CHECK(distinct_zero_count(Polynomial(std::vector<Complex>{{4, 2}})) == 0);

    const std::vector<Complex> five(5, Complex{2, 0});
    CHECK(distinct_zero_count(Polynomial::from_roots(five, {1, 0})) == 1);

    CHECK(distinct_zero_count(Polynomial({{-9, 0}, {0, 0}, {1, 0}})) == 2);  // z^2 - 9
}

TEST_CASE("constant input is rejected; stingy budgets report nonconvergence") {
    CHECK_THROWS_AS(find_roots(Polynomial(std::vector<Complex>{{3, 0}})), ConstantPolynomialError);
    CHECK_THROWS_AS(find_roots(Polynomial{}), ConstantPolynomialError);

    std::vector<Complex> roots;
    Rng rng(7);
    for (int j = 0; j < 10; ++j) roots.push_back(rng.in_disk(2.0));
    RootConfig cfg;
    cfg.max_iter = 1;
    try {
        find_roots(Polynomial::from_roots(roots, {1, 0}), cfg);
        FAIL("expected NonConvergenceError");
    } catch (const NonConvergenceError& e) {
        CHECK(e.best_residual > 0.0);
    }
}

TEST_CASE("root sets transform equivariantly under affine composition") {
    Rng rng(401);
    for (int trial = 0; trial < 60; ++trial) {
        const int deg = 2 + static_cast<int>(rng.index(9));
        const std::vector<Complex> roots = separated_roots(rng, deg, 0.1);
        const Polynomial p = Polynomial::from_roots(roots, {1, 0});
        const AffineMap m{rng.in_annulus(0.25, 4.0), rng.in_disk(1.0)};
        const AffineMap inv = m.inverse();

        const ZeroSet direct = find_roots(p.compose_affine(m));
        std::vector<Complex> expected;
        for (const ZeroSet base = find_roots(p); const RootCluster& c : base.points) {
            for (int i = 0; i < c.multiplicity; ++i) expected.push_back(inv(c.location));
        }
        std::vector<Complex> got;
        for (const RootCluster& c : direct.points) {
            for (int i = 0; i < c.multiplicity; ++i) got.push_back(c.location);
        }
        CHECK(max_pairing_distance(got, expected) <= 1e-6);
    }
}

TEST_CASE("reconstruction from computed roots") {
    Rng rng(402);
    for (int trial = 0; trial < 60; ++trial) {
        const int deg = 2 + static_cast<int>(rng.index(9));
        const std::vector<Complex> roots = separated_roots(rng, deg, 0.1);
        const Complex lead = rng.in_annulus(0.5, 2.0);
        const Polynomial p = Polynomial::from_roots(roots, lead);

        const ZeroSet zs = find_roots(p);
        std::vector<Complex> found;
        for (const RootCluster& c : zs.points) {
            for (int i = 0; i < c.multiplicity; ++i) found.push_back(c.location);
        }
        const Polynomial rebuilt = Polynomial::from_roots(found, lead);
        CHECK(coeff_distance(p, rebuilt) <= 1e-6 * p.coeff_scale());
    }
}

TEST_CASE("deterministic given the seed") {
    Rng rng(403);
    std::vector<Complex> roots;
    for (int j = 0; j < 7; ++j) roots.push_back(rng.in_disk(2.0));
    const Polynomial p = Polynomial::from_roots(roots, {1, 0});
    RootConfig cfg;
    cfg.seed = 99;
    const ZeroSet a = find_roots(p, cfg);
    const ZeroSet b = find_roots(p, cfg);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].location == b.points[i].location);
        CHECK(a.points[i].multiplicity == b.points[i].multiplicity);
    }
}
