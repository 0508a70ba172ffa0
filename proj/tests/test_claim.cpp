#include <doctest.h>

#include <cmath>
#include <vector>

#include "polygeo/errors.hpp"
#include "polygeo/operators.hpp"
#include "polygeo/rng.hpp"

using namespace polygeo;

namespace {

bool contains_solution(const std::vector<ClaimSolution>& solutions, Complex d, Complex g,
                       Complex e, double tol) {
    for (const ClaimSolution& s : solutions) {
        if (std::abs(s.d - d) + std::abs(s.gamma - g) + std::abs(s.delta - e) <= tol) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("cubic shift identity has exactly the two expected solutions") {
    const auto solutions = claim_solutions(3, {1, 0});
    REQUIRE(solutions.size() == 2);
    CHECK(contains_solution(solutions, {1, 0}, {1, 0}, {0, 0}, 1e-7));
    CHECK(contains_solution(solutions, {-1, 0}, {0, 0}, {1, 0}, 1e-7));
    for (const ClaimSolution& s : solutions) CHECK(s.residual <= 1e-9);
}

TEST_CASE("degree five with a complex shift") {
    const Complex beta{2, 1};
    const auto solutions = claim_solutions(5, beta);
    REQUIRE(solutions.size() == 2);
    CHECK(contains_solution(solutions, {1, 0}, beta, {0, 0}, 1e-6));
    CHECK(contains_solution(solutions, {-1, 0}, {0, 0}, beta, 1e-6));
}

TEST_CASE("hypothesis boundaries are enforced") {
    CHECK_THROWS_AS(claim_solutions(2, {1, 0}), PreconditionViolated);
    CHECK_THROWS_AS(claim_solutions(5, {0, 0}), PreconditionViolated);
}

TEST_CASE("two solutions across degrees and random shifts") {
    Rng rng(901);
    for (int l = 3; l <= 6; ++l) {
        for (int i = 0; i < 5; ++i) {
            const Complex beta = rng.in_annulus(0.5, 2.0);
            const auto solutions = claim_solutions(l, beta, ClaimConfig{64, mix_seed(901, l, i)});
            REQUIRE(solutions.size() == 2);
            const double tol = 1e-6 * std::max(1.0, std::abs(beta));
            CHECK(contains_solution(solutions, {1, 0}, beta, {0, 0}, tol));
            CHECK(contains_solution(solutions, {-1, 0}, {0, 0}, beta, tol));
        }
    }
}

TEST_CASE("shifted power matrix: distinct shifts span") {
    const std::vector<Complex> shifts{{0, 0}, {1, 0}, {2, 0}};
    const BasisMatrixResult result = shifted_power_basis_matrix(shifts, 2);
    CHECK(result.nonsingular);
    // Oracle: columns carry binomial factors, so |det| equals the product of
    // the binomials times the Vandermonde product of pairwise differences.
    double expected = 1.0 * 2.0 * 1.0;
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        for (std::size_t j = i + 1; j < shifts.size(); ++j) {
            expected *= std::abs(shifts[j] - shifts[i]);
        }
    }
    CHECK(result.det_magnitude == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("repeated shifts collapse the matrix") {
    const std::vector<Complex> shifts{{0, 0}, {0, 0}, {1, 0}};
    const BasisMatrixResult result = shifted_power_basis_matrix(shifts, 2);
    CHECK_FALSE(result.nonsingular);
    CHECK(result.det_magnitude == doctest::Approx(0.0));
}

TEST_CASE("quartic mixed shifts against the Vandermonde oracle") {
    const std::vector<Complex> shifts{{0, 0}, {0, 1}, {0, -1}, {1, 0}};
    const BasisMatrixResult result = shifted_power_basis_matrix(shifts, 3);
    CHECK(result.nonsingular);
    double expected = 1.0 * 3.0 * 3.0 * 1.0;
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        for (std::size_t j = i + 1; j < shifts.size(); ++j) {
            expected *= std::abs(shifts[j] - shifts[i]);
        }
    }
    CHECK(result.det_magnitude == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("nonsingularity tracks pairwise distinctness") {
    Rng rng(902);
    for (int trial = 0; trial < 100; ++trial) {
        const int l = 2 + static_cast<int>(rng.index(5));
        std::vector<Complex> shifts;
        for (int i = 0; i <= l; ++i) shifts.push_back(rng.in_disk(2.0));
        CHECK(shifted_power_basis_matrix(shifts, l).nonsingular);
    }
    for (int trial = 0; trial < 20; ++trial) {
        const int l = 2 + static_cast<int>(rng.index(5));
        std::vector<Complex> shifts;
        for (int i = 0; i <= l; ++i) shifts.push_back(rng.in_disk(2.0));
        shifts[1 + rng.index(shifts.size() - 1)] = shifts[0];  // force a collision
        CHECK_FALSE(shifted_power_basis_matrix(shifts, l).nonsingular);
    }

    CHECK_THROWS_AS(shifted_power_basis_matrix(std::vector<Complex>{{0, 0}, {1, 0}}, 2),
                    DomainError);
}
