#include <doctest.h>

#include <vector>

#include "polygeo/errors.hpp"
#include "polygeo/poly.hpp"
#include "polygeo/rng.hpp"
#include "polygeo/roots.hpp"

using namespace polygeo;

namespace {

Polynomial P(std::initializer_list<Complex> coeffs) {
    return Polynomial(std::vector<Complex>(coeffs));
}

bool close(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

double rel_distance(const Polynomial& a, const Polynomial& b) {
    const double scale = std::max({a.coeff_scale(), b.coeff_scale(), 1e-300});
    return coeff_distance(a, b) / scale;
}

}  // namespace

TEST_CASE("degree trims trailing near-zeros and flags the zero polynomial") {
    CHECK(P({0, 0, 0}).degree() == kZeroPolyDegree);
    CHECK(P({0, 0, 0}).is_zero());
    CHECK(P({1, 0, 3}).degree() == 2);
    CHECK(P({{1, 0}, {2, 0}, {1e-18, 0}}).degree() == 1);  // below 1e-12 * scale
    CHECK(P({5}).degree() == 0);
    CHECK(P({5}).is_constant());
}

TEST_CASE("evaluate") {
    CHECK(close(P({1, 0, 3}).evaluate({2, 0}), {13, 0}));
    const Polynomial p = P({{2, 1}, {0, 0}, {3, -4}});
    CHECK(close(p.evaluate({0, 0}), p.coeff(0)));
    CHECK(close(Polynomial{}.evaluate({7, 3}), {0, 0}));

    const std::vector<Complex> roots{{1, 0}, {3, 0}};
    const Polynomial q = Polynomial::from_roots(roots, {1, 0});
    CHECK(std::abs(q.evaluate({1, 0})) <= 1e-12 * q.coeff_scale());
    CHECK(std::abs(q.evaluate({3, 0})) <= 1e-12 * q.coeff_scale());
}

TEST_CASE("derivative") {
    CHECK(rel_distance(P({0, 0, 0, 1}).derivative(), P({0, 0, 3})) == 0.0);  // z^3 -> 3z^2
    CHECK(rel_distance(P({0, 0, -1, 1}).derivative(), P({0, -2, 3})) == 0.0);
    CHECK(P({0, 0, 1}).derivative(3).is_zero());  // order above the degree
    CHECK(rel_distance(P({1, 2, 3}).derivative(0), P({1, 2, 3})) == 0.0);
}

TEST_CASE("compose_affine") {
    // z^2 under z -> 2z+1.
    CHECK(rel_distance(P({0, 0, 1}).compose_affine({{2, 0}, {1, 0}}), P({1, 4, 4})) <= 1e-15);
    const Polynomial p = P({{1, 2}, {0, -1}, {3, 0}, {0.5, 0.5}});
    CHECK(rel_distance(p.compose_affine({{1, 0}, {0, 0}}), p) == 0.0);  // identity map
}

TEST_CASE("compose_affine transforms roots by the inverse map") {
    const std::vector<Complex> roots{{1, 0}, {3, 0}};
    const Polynomial p = Polynomial::from_roots(roots, {1, 0});
    const Polynomial q = p.compose_affine({{2, 0}, {0, 0}});  // roots halve
    const ZeroSet zs = find_roots(q);
    REQUIRE(zs.points.size() == 2);
    CHECK(std::abs(zs.points[0].location - Complex{0.5, 0}) <= 1e-9);
    CHECK(std::abs(zs.points[1].location - Complex{1.5, 0}) <= 1e-9);
}

TEST_CASE("from_roots") {
    const std::vector<Complex> pm{{1, 0}, {-1, 0}};
    CHECK(rel_distance(Polynomial::from_roots(pm, {1, 0}), P({-1, 0, 1})) == 0.0);

    CHECK(rel_distance(Polynomial::from_roots({}, {5, 0}), P({5})) == 0.0);  // empty product

    const std::vector<Complex> zzo{{0, 0}, {0, 0}, {1, 0}};
    CHECK(rel_distance(Polynomial::from_roots(zzo, {1, 0}), P({0, 0, -1, 1})) == 0.0);

    CHECK_THROWS_AS(Polynomial::from_roots(pm, {0, 0}), DomainError);
}

TEST_CASE("linear_combination") {
    const std::vector<std::pair<Complex, Polynomial>> sum{{{1, 0}, P({0, 1})}, {{1, 0}, P({1})}};
    CHECK(rel_distance(linear_combination(sum), P({1, 1})) == 0.0);

    const Polynomial p = P({{1, 2}, {3, -1}, {0, 4}});
    const std::vector<std::pair<Complex, Polynomial>> cancel{{{1, 0}, p}, {{-1, 0}, p}};
    CHECK(linear_combination(cancel).is_zero());

    // (z+2)^3 assembled from binomial-weighted monomials.
    std::vector<std::pair<Complex, Polynomial>> binom;
    const double choose[4] = {1, 3, 3, 1};
    for (int j = 0; j <= 3; ++j) {
        binom.emplace_back(Complex{choose[j] * std::pow(2.0, j), 0}, Polynomial::monomial(3 - j));
    }
    CHECK(rel_distance(linear_combination(binom), P({8, 12, 6, 1})) <= 1e-15);
}

TEST_CASE("affine map algebra") {
    const AffineMap m{{2, 1}, {-1, 3}};
    const AffineMap inv = m.inverse();
    const Complex z{0.7, -1.2};
    CHECK(close(inv(m(z)), z, 1e-14));
    CHECK_THROWS_AS((AffineMap{{0, 0}, {1, 0}}.inverse()), DomainError);

    const AffineMap m2{{0, 1}, {2, 0}};
    CHECK(close(m.after(m2)(z), m(m2(z)), 1e-14));
}

TEST_CASE("linear_combination distributes over evaluation") {
    Rng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::pair<Complex, Polynomial>> terms;
        const int count = 2 + static_cast<int>(rng.index(3));
        for (int t = 0; t < count; ++t) {
            std::vector<Complex> coeffs;
            const int deg = static_cast<int>(rng.index(17));
            for (int j = 0; j <= deg; ++j) coeffs.push_back(rng.in_disk(1.0));
            terms.emplace_back(rng.in_disk(1.0), Polynomial(std::move(coeffs)));
        }
        const Polynomial combo = linear_combination(terms);
        const Complex z = rng.in_disk(1.5);
        Complex expected{0, 0};
        double mag = 0.0;
        for (const auto& [w, p] : terms) {
            expected += w * p.evaluate(z);
            mag += std::abs(w) * std::max(1.0, p.coeff_scale());
        }
        CHECK(std::abs(combo.evaluate(z) - expected) <= 1e-10 * std::max(1.0, mag));
    }
}

TEST_CASE("composition is associative across map composition") {
    Rng rng(102);
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<Complex> coeffs;
        const int deg = 1 + static_cast<int>(rng.index(12));
        for (int j = 0; j <= deg; ++j) coeffs.push_back(rng.in_disk(1.0));
        const Polynomial p(std::move(coeffs));
        const AffineMap m1{rng.in_annulus(0.25, 3.0), rng.in_disk(2.0)};
        const AffineMap m2{rng.in_annulus(0.25, 3.0), rng.in_disk(2.0)};
        const Polynomial lhs = p.compose_affine(m1).compose_affine(m2);
        const Polynomial rhs = p.compose_affine(m1.after(m2));
        CHECK(rel_distance(lhs, rhs) <= 1e-9);
    }
}

TEST_CASE("derivative commutes with composition up to the chain-rule factor") {
    Rng rng(103);
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<Complex> coeffs;
        const int deg = 2 + static_cast<int>(rng.index(11));
        for (int j = 0; j <= deg; ++j) coeffs.push_back(rng.in_disk(1.0));
        const Polynomial p(std::move(coeffs));
        const AffineMap m{rng.in_annulus(0.25, 4.0), rng.in_disk(2.0)};
        const int k = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(deg)));

        Complex factor{1.0, 0.0};
        for (int i = 0; i < k; ++i) factor *= m.a;
        const Polynomial lhs = p.compose_affine(m).derivative(k);
        const Polynomial rhs = scale(p.derivative(k).compose_affine(m), factor);
        CHECK(rel_distance(lhs, rhs) <= 1e-9);
    }
}
