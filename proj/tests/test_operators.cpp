#include <doctest.h>

#include <cmath>
#include <vector>

#include "polygeo/errors.hpp"
#include "polygeo/operators.hpp"
#include "polygeo/rng.hpp"
#include "polygeo/suites.hpp"

using namespace polygeo;

namespace {

Polynomial P(std::initializer_list<Complex> coeffs) {
    return Polynomial(std::vector<Complex>(coeffs));
}

LinearFunctional basis_functional(int n, int hot) {
    LinearFunctional l;
    l.weights.assign(static_cast<std::size_t>(n) + 1, {0, 0});
    l.weights[static_cast<std::size_t>(hot)] = {1, 0};
    return l;
}

LinearFunctional zero_functional(int n) {
    LinearFunctional l;
    l.weights.assign(static_cast<std::size_t>(n) + 1, {0, 0});
    return l;
}

/// L[P] = P(a z) on polynomials of degree <= n.
MonomialOperator substitution_operator(int n, Complex a) {
    std::vector<Polynomial> images;
    for (int j = 0; j <= n; ++j) {
        Complex factor{1, 0};
        for (int i = 0; i < j; ++i) factor *= a;
        images.push_back(Polynomial::monomial(j, factor));
    }
    return {n, std::move(images)};
}

MonomialOperator derivative_operator(int n) {
    return make_form3({1, 0}, 1, AffineMap{{1, 0}, {0, 0}}, n);
}

double rel_distance(const Polynomial& a, const Polynomial& b) {
    const double scale = std::max({a.coeff_scale(), b.coeff_scale(), 1e-300});
    return coeff_distance(a, b) / scale;
}

}  // namespace

TEST_CASE("apply") {
    const MonomialOperator d3(3, {Polynomial{}, P({1}), P({0, 2}), P({0, 0, 3})});
    CHECK(rel_distance(d3.apply(P({0, 0, -1, 1})), P({0, -2, 3})) == 0.0);

    const MonomialOperator zero(2, {Polynomial{}, Polynomial{}, Polynomial{}});
    CHECK(zero.apply(P({1, 2, 3})).is_zero());

    std::vector<Polynomial> ident;
    for (int j = 0; j <= 4; ++j) ident.push_back(Polynomial::monomial(j));
    const MonomialOperator id(4, std::move(ident));
    const Polynomial p = P({{1, 1}, {0, -2}, {3, 0}, {0, 0}, {0.5, 0.5}});
    CHECK(rel_distance(id.apply(p), p) == 0.0);

    CHECK_THROWS_AS(zero.apply(P({0, 0, 0, 1})), DegreeExceedsN);
}

TEST_CASE("form 1 constructor") {
    const MonomialOperator eval0 = make_form1(zero_functional(2), basis_functional(2, 0), 2);
    CHECK(rel_distance(eval0.image(0), P({1})) == 0.0);
    CHECK(eval0.image(1).is_zero());
    CHECK(eval0.image(2).is_zero());
    // L[P] = P(0), a functional.
    CHECK(rel_distance(eval0.apply(P({3, 2, 1})), P({3})) == 0.0);

    const MonomialOperator hot0 = make_form1(basis_functional(2, 0), zero_functional(2), 2);
    CHECK(rel_distance(hot0.image(0), P({0, 1})) == 0.0);
    CHECK(hot0.image(1).is_zero());
    CHECK(hot0.image(2).is_zero());

    const MonomialOperator mixed = make_form1(basis_functional(2, 1), basis_functional(2, 0), 2);
    CHECK(rel_distance(mixed.image(0), P({1})) == 0.0);
    CHECK(rel_distance(mixed.image(1), P({0, 1})) == 0.0);
    CHECK(mixed.image(2).is_zero());
}

TEST_CASE("form 2 constructor") {
    const MonomialOperator op = make_form2({2, 0}, 3, basis_functional(1, 0), 1);
    CHECK(rel_distance(op.image(0), P({-8, 12, -6, 1})) <= 1e-15);  // (z-2)^3
    CHECK(op.image(1).is_zero());

    for (const Polynomial& img : op.images()) {
        if (!img.is_zero()) CHECK(distinct_zero_count(img) == 1);
    }
    // p in the kernel of l3 maps to zero.
    CHECK(op.apply(P({0, 5})).is_zero());

    CHECK_THROWS_AS(make_form2({2, 0}, 1, basis_functional(1, 0), 1), InvalidRange);
    CHECK_THROWS_AS(make_form2({2, 0}, 3, zero_functional(1), 1), DomainError);
}

TEST_CASE("form 3 constructor") {
    const MonomialOperator deriv = derivative_operator(3);
    CHECK(deriv.image(0).is_zero());
    CHECK(rel_distance(deriv.image(1), P({1})) == 0.0);
    CHECK(rel_distance(deriv.image(2), P({0, 2})) == 0.0);
    CHECK(rel_distance(deriv.image(3), P({0, 0, 3})) == 0.0);

    const MonomialOperator subst = make_form3({1, 0}, 0, AffineMap{{2, 0}, {1, 0}}, 2);
    CHECK(rel_distance(subst.image(0), P({1})) == 0.0);
    CHECK(rel_distance(subst.image(1), P({1, 2})) == 0.0);
    CHECK(rel_distance(subst.image(2), P({1, 4, 4})) <= 1e-15);

    const MonomialOperator shifted = make_form3({2, 0}, 1, AffineMap{{1, 0}, {-1, 0}}, 4);
    CHECK(rel_distance(shifted.image(2), P({-4, 4})) == 0.0);  // 2 * d/dz (z-1)^2

    CHECK_THROWS_AS(make_form3({0, 0}, 1, AffineMap{{1, 0}, {0, 0}}, 4), DomainError);
    CHECK_THROWS_AS(make_form3({1, 0}, 1, AffineMap{{0, 0}, {0, 0}}, 4), DomainError);
    CHECK_THROWS_AS(make_form3({1, 0}, 3, AffineMap{{1, 0}, {0, 0}}, 4), InvalidRange);
    CHECK_THROWS_AS(make_form3({1, 0}, -1, AffineMap{{1, 0}, {0, 0}}, 4), InvalidRange);
}

TEST_CASE("classify recovers a scaled shifted derivative") {
    const MonomialOperator op = make_form3({2, 0}, 1, AffineMap{{1, 0}, {0, 0}}, 4);
    const FormReport report = classify(op);
    REQUIRE(report.form3.has_value());
    CHECK(report.form3->k == 1);
    CHECK(std::abs(report.form3->c - Complex{2, 0}) <= 1e-9);
    CHECK(std::abs(report.form3->map.a - Complex{1, 0}) <= 1e-9);
    CHECK(std::abs(report.form3->map.b) <= 1e-9);
    CHECK(report.verdict == Verdict::StructurallyNonexpansive);
    REQUIRE(report.dnk_used.has_value());
    CHECK(report.dnk_used->value.value == 1.0);
    CHECK(report.dnk_used->value.provenance == DnkProvenance::Exact);
    CHECK_FALSE(report.form1.has_value());
    CHECK_FALSE(report.form2.has_value());
}

TEST_CASE("contraction substitution violates the slope condition") {
    const FormReport report = classify(substitution_operator(4, {0.5, 0}));
    REQUIRE(report.form3.has_value());
    CHECK(report.form3->k == 0);
    CHECK(std::abs(report.form3->map.a - Complex{0.5, 0}) <= 1e-9);
    CHECK(report.verdict == Verdict::ConditionViolated);
}

TEST_CASE("classify recovers rank-one powers and the zero operator") {
    LinearFunctional l3;
    l3.weights = {{1, 0}, {0.5, -1}, {0, 2}, {-1.5, 0}};
    const MonomialOperator op = make_form2({2, 0}, 3, l3, 3);
    const FormReport report = classify(op);
    REQUIRE(report.form2.has_value());
    CHECK(report.form2->m == 3);
    CHECK(std::abs(report.form2->c - Complex{2, 0}) <= 1e-7);
    CHECK(report.verdict == Verdict::StructurallyNonexpansive);

    const MonomialOperator zero(2, {Polynomial{}, Polynomial{}, Polynomial{}});
    const FormReport zr = classify(zero);
    REQUIRE(zr.form1.has_value());
    CHECK(zr.form1->l1.is_zero());
    CHECK(zr.form1->l2.is_zero());
    CHECK(zr.verdict == Verdict::StructurallyNonexpansive);
}

TEST_CASE("classify rejects operators without a canonical shape") {
    // Images {-1, 0, z^2}: not degree <= 1, not a common power, not a shifted
    // derivative (image 0 nonzero but image 1 zero).
    const MonomialOperator op(2, {P({-1}), Polynomial{}, P({0, 0, 1})});
    const FormReport report = classify(op);
    CHECK_FALSE(report.form1.has_value());
    CHECK_FALSE(report.form2.has_value());
    CHECK_FALSE(report.form3.has_value());
    CHECK(report.verdict == Verdict::NoCanonicalForm);
}

TEST_CASE("halving substitution is refuted by the adversarial batch") {
    const RefuteConfig cfg{.trials = 100, .tol = 1e-7, .seed = 5};
    const RefutationResult result = test_nonexpansive(substitution_operator(4, {0.5, 0}), cfg);
    REQUIRE(result.counterexample.has_value());
    CHECK(result.counterexample->label != "random");  // found inside the adversarial batch
    const double ratio = result.counterexample->diam_lp / result.counterexample->diam_p;
    CHECK(ratio == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("nonexpansive operators survive refutation trials") {
    const RefuteConfig cfg{.trials = 2000, .tol = 1e-7, .seed = 11};
    CHECK_FALSE(test_nonexpansive(derivative_operator(5), cfg).counterexample.has_value());
    CHECK_FALSE(test_nonexpansive(substitution_operator(4, {2, 0}), cfg).counterexample.has_value());

    const MonomialOperator zero(3, {Polynomial{}, Polynomial{}, Polynomial{}, Polynomial{}});
    const RefutationResult vacuous = test_nonexpansive(zero, cfg);
    CHECK_FALSE(vacuous.counterexample.has_value());
    CHECK(vacuous.skipped_constant == vacuous.trials_run);
    CHECK(vacuous.note == "NoCounterexampleFound is a statistical statement, never a certificate");
}

TEST_CASE("single-zero probe flags genuinely split images") {
    const auto grid = default_alpha_grid();
    REQUIRE(grid.size() == 20);

    // L[(z+a)^2] = z^2 - a^2 splits for every a != 0.
    const MonomialOperator bad(2, {P({-1}), Polynomial{}, P({0, 0, 1})});
    const ProbeResult flagged = single_zero_probe(bad, grid);
    CHECK(flagged.violations.size() == grid.size());
    for (const ProbeViolation& v : flagged.violations) {
        CHECK(v.s == 2);
        CHECK(v.distinct_zeros == 2);
    }

    LinearFunctional l3;
    l3.weights = {{1, 0}, {-2, 1}, {0.5, 0.5}};
    const ProbeResult form2_clean = single_zero_probe(make_form2({-1, 1}, 4, l3, 2), grid);
    CHECK(form2_clean.violations.empty());

    // Necessary but not sufficient: the expanding substitution probes clean.
    const ProbeResult subst_clean = single_zero_probe(substitution_operator(4, {0.5, 0}), grid);
    CHECK(subst_clean.violations.empty());
}

TEST_CASE("apply is exactly linear") {
    Rng rng(801);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng.index(6));
        std::vector<Polynomial> images;
        for (int j = 0; j <= n; ++j) {
            std::vector<Complex> coeffs;
            const int deg = static_cast<int>(rng.index(7));
            for (int i = 0; i <= deg; ++i) coeffs.push_back(rng.in_disk(2.0));
            images.push_back(Polynomial(std::move(coeffs)));
        }
        const MonomialOperator op(n, std::move(images));

        std::vector<Complex> pc, qc;
        for (int i = 0; i <= n; ++i) pc.push_back(rng.in_disk(2.0));
        for (int i = 0; i <= n; ++i) qc.push_back(rng.in_disk(2.0));
        const Polynomial p(std::move(pc));
        const Polynomial q(std::move(qc));
        const Complex alpha = rng.in_disk(2.0);

        std::vector<std::pair<Complex, Polynomial>> mix{{alpha, p}, {{1, 0}, q}};
        const Polynomial lhs = op.apply(linear_combination(mix));
        std::vector<std::pair<Complex, Polynomial>> expected{{alpha, op.apply(p)},
                                                             {{1, 0}, op.apply(q)}};
        const Polynomial rhs = linear_combination(expected);
        CHECK(rel_distance(lhs, rhs) <= 1e-11);
    }
}

TEST_CASE("constructed canonical operators pass refutation and the probe") {
    Rng rng(802);
    const auto grid = default_alpha_grid();
    for (int rep = 0; rep < 3; ++rep) {
        const int n = 3 + static_cast<int>(rng.index(3));

        LinearFunctional l1, l2;
        for (int j = 0; j <= n; ++j) l1.weights.push_back(rng.in_annulus(0.5, 2.0));
        for (int j = 0; j <= n; ++j) l2.weights.push_back(rng.in_annulus(0.5, 2.0));
        LinearFunctional l3;
        for (int j = 0; j <= n; ++j) l3.weights.push_back(rng.in_annulus(0.5, 2.0));

        const std::vector<MonomialOperator> ops{
            make_form1(l1, l2, n),
            make_form2(rng.in_annulus(0.5, 2.0), 2 + static_cast<int>(rng.index(4)), l3, n),
            // Slope magnitude >= 1 >= d_{n,k} keeps form 3 nonexpansive.
            make_form3(rng.in_annulus(0.5, 2.0),
                       static_cast<int>(rng.index(static_cast<std::size_t>(n - 1))),
                       AffineMap{rng.in_annulus(1.0, 2.0), rng.in_disk(1.0)}, n)};
        for (const MonomialOperator& op : ops) {
            const RefuteConfig cfg{.trials = 300, .tol = 1e-7, .seed = mix_seed(802, rep)};
            CHECK_FALSE(test_nonexpansive(op, cfg).counterexample.has_value());
            CHECK(single_zero_probe(op, grid).violations.empty());
        }
    }
}

TEST_CASE("constructor -> classifier round trip on a sampled batch") {
    const SuiteResult result = suite_roundtrip(5, 60);
    CHECK(result.all_passed);
}
