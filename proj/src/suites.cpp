#include "polygeo/suites.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "polygeo/errors.hpp"
#include "polygeo/rng.hpp"

namespace polygeo {

namespace {

std::string poly_repro(const char* command, const Polynomial& p, const char* extra = "") {
    std::ostringstream os;
    os << "polygeo " << command << " --poly '" << polynomial_to_json(p).dump() << "'" << extra;
    return os.str();
}

Polynomial sample_polynomial(Rng& rng, int degree, bool by_roots) {
    if (by_roots) {
        std::vector<Complex> roots;
        for (int j = 0; j < degree; ++j) roots.push_back(rng.in_disk(2.0));
        return Polynomial::from_roots(roots, Complex{1.0, 0.0});
    }
    std::vector<Complex> coeffs;
    for (int j = 0; j <= degree; ++j) coeffs.push_back(rng.normal_complex());
    return Polynomial(std::move(coeffs));
}

LinearFunctional annulus_functional(Rng& rng, int n) {
    LinearFunctional l;
    for (int j = 0; j <= n; ++j) l.weights.push_back(rng.in_annulus(0.5, 2.0));
    return l;
}

}  // namespace

SuiteResult suite_gauss_lucas(std::uint64_t seed, long trials) {
    const double tol = 1e-7;
    Json failures = Json::array();
    long passes = 0;
    double worst_margin = 0.0;
    double worst_diameter_excess = -1.0;

    for (long i = 0; i < trials; ++i) {
        Rng rng(mix_seed(seed, 0x91ull, static_cast<std::uint64_t>(i)));
        const int degree = 2 + static_cast<int>(rng.index(9));
        const bool by_roots = rng.coin();
        Polynomial p = sample_polynomial(rng, degree, by_roots);
        for (int attempt = 0; p.degree() < 2 && attempt < 100; ++attempt) {
            p = sample_polynomial(rng, degree, by_roots);
        }

        std::string reason;
        try {
            const GaussLucasReport report = gauss_lucas_check(p, tol);
            for (const double m : report.margins) worst_margin = std::min(worst_margin, m);
            const double diam_p = diameter(report.roots);
            const double diam_dp = diameter(report.critical_points);
            worst_diameter_excess = std::max(worst_diameter_excess, diam_dp - diam_p);
            if (!report.pass) {
                reason = "containment failed";
            } else if (!(diam_dp <= diam_p + tol)) {
                reason = "derivative zero set has larger diameter";
            }
        } catch (const DomainError& e) {
            reason = std::string("solver failure: ") + e.what();
        }

        if (reason.empty()) {
            ++passes;
        } else {
            failures.push_back(Json{{"trial", i},
                                    {"reason", reason},
                                    {"repro", poly_repro("gauss-lucas", p, " --tol 1e-07")}});
        }
    }

    SuiteResult result;
    result.all_passed = passes == trials;
    result.summary = Json{{"suite", "gauss-lucas"},
                          {"seed", seed},
                          {"tol", tol},
                          {"trials", trials},
                          {"passes", passes},
                          {"worst_margin", worst_margin},
                          {"worst_diameter_excess", worst_diameter_excess},
                          {"failures", failures},
                          {"all_passed", result.all_passed}};
    return result;
}

SuiteResult suite_roundtrip(std::uint64_t seed, int per_form) {
    const double tol = 1e-6;
    const DnkSource dnk(EstimateBudget{16, 60}, 17);
    Json failures = Json::array();
    long passes = 0;
    long cases = 0;

    auto complex_close = [&](Complex actual, Complex expected) {
        return std::abs(actual - expected) <= tol * std::max(1.0, std::abs(expected));
    };
    auto record = [&](const MonomialOperator& op, const char* form, const std::string& why) {
        failures.push_back(Json{{"form", form},
                                {"reason", why},
                                {"repro", std::string("polygeo classify --op '") +
                                              operator_to_json(op).dump() + "'"}});
    };

    for (int form = 1; form <= 3; ++form) {
        for (int i = 0; i < per_form; ++i) {
            ++cases;
            Rng rng(mix_seed(seed, 0xF0 + static_cast<std::uint64_t>(form),
                             static_cast<std::uint64_t>(i)));
            const int n = 2 + static_cast<int>(rng.index(7));  // n in [2, 8]

            if (form == 1) {
                const LinearFunctional l1 = annulus_functional(rng, n);
                const LinearFunctional l2 = annulus_functional(rng, n);
                const MonomialOperator op = make_form1(l1, l2, n);
                const FormReport report = classify(op, 1e-7, dnk);
                std::string why;
                if (!report.form1) {
                    why = "form1 not recovered";
                } else {
                    for (int j = 0; j <= n && why.empty(); ++j) {
                        if (!complex_close(report.form1->l1.weights[j], l1.weights[j]) ||
                            !complex_close(report.form1->l2.weights[j], l2.weights[j])) {
                            why = "form1 weights drifted";
                        }
                    }
                }
                if (why.empty()) ++passes; else record(op, "form1", why);
            } else if (form == 2) {
                const Complex c = rng.in_annulus(0.5, 2.0);
                const int m = 2 + static_cast<int>(rng.index(7));  // m in [2, 8]
                const LinearFunctional l3 = annulus_functional(rng, n);
                const MonomialOperator op = make_form2(c, m, l3, n);
                const FormReport report = classify(op, 1e-7, dnk);
                std::string why;
                if (!report.form2) {
                    why = "form2 not recovered";
                } else if (report.form2->m != m) {
                    why = "multiplicity drifted";
                } else if (!complex_close(report.form2->c, c)) {
                    why = "center drifted";
                } else {
                    // l3 compared up to one global scalar.
                    std::size_t ref = 0;
                    for (std::size_t j = 0; j < l3.weights.size(); ++j) {
                        if (std::abs(l3.weights[j]) > std::abs(l3.weights[ref])) ref = j;
                    }
                    const Complex lambda = report.form2->l3.weights[ref] / l3.weights[ref];
                    for (int j = 0; j <= n && why.empty(); ++j) {
                        if (!complex_close(report.form2->l3.weights[j], lambda * l3.weights[j])) {
                            why = "functional drifted";
                        }
                    }
                }
                if (why.empty()) ++passes; else record(op, "form2", why);
            } else {
                const Complex c = rng.in_annulus(0.5, 2.0);
                const int k = static_cast<int>(rng.index(static_cast<std::size_t>(n - 1)));
                const AffineMap map{rng.in_annulus(0.5, 2.0), rng.in_annulus(0.5, 2.0)};
                const MonomialOperator op = make_form3(c, k, map, n);
                const FormReport report = classify(op, 1e-7, dnk);
                std::string why;
                if (!report.form3) {
                    why = "form3 not recovered";
                } else if (report.form3->k != k) {
                    why = "derivative order drifted";
                } else if (!complex_close(report.form3->c, c) ||
                           !complex_close(report.form3->map.a, map.a) ||
                           !complex_close(report.form3->map.b, map.b)) {
                    why = "parameters drifted";
                }
                if (why.empty()) ++passes; else record(op, "form3", why);
            }
        }
    }

    SuiteResult result;
    result.all_passed = passes == cases;
    result.summary = Json{{"suite", "roundtrip"},
                          {"seed", seed},
                          {"per_form", per_form},
                          {"cases", cases},
                          {"passes", passes},
                          {"failures", failures},
                          {"all_passed", result.all_passed}};
    return result;
}

SuiteResult suite_claim(std::uint64_t seed, int betas_per_l) {
    Json failures = Json::array();
    long passes = 0;
    long cases = 0;

    for (int l = 3; l <= 6; ++l) {
        for (int i = 0; i < betas_per_l; ++i) {
            ++cases;
            Rng rng(mix_seed(seed, static_cast<std::uint64_t>(l), static_cast<std::uint64_t>(i)));
            const Complex beta = rng.in_annulus(0.5, 2.0);
            const double tol = 1e-6 * std::max(1.0, std::abs(beta));

            std::string why;
            try {
                const auto solutions =
                    claim_solutions(l, beta, ClaimConfig{64, mix_seed(seed, l, i)});
                if (solutions.size() != 2) {
                    why = "expected exactly 2 solutions, got " + std::to_string(solutions.size());
                } else {
                    auto has = [&](Complex d, Complex g, Complex e) {
                        for (const ClaimSolution& s : solutions) {
                            if (std::abs(s.d - d) + std::abs(s.gamma - g) + std::abs(s.delta - e) <=
                                tol) {
                                return s.residual <= 1e-9;
                            }
                        }
                        return false;
                    };
                    if (!has(Complex{1, 0}, beta, Complex{0, 0})) why = "missing (1, beta, 0)";
                    else if (!has(Complex{-1, 0}, Complex{0, 0}, beta)) why = "missing (-1, 0, beta)";
                }
            } catch (const DomainError& e) {
                why = std::string("solver error: ") + e.what();
            }

            if (why.empty()) {
                ++passes;
            } else {
                std::ostringstream repro;
                repro << "polygeo suite claim --seed " << seed << "  # case l=" << l
                      << " beta=" << beta.real() << (beta.imag() < 0 ? "" : "+") << beta.imag()
                      << "i";
                failures.push_back(Json{{"l", l},
                                        {"beta", complex_to_json(beta)},
                                        {"reason", why},
                                        {"repro", repro.str()}});
            }
        }
    }

    // The hypothesis l >= 3 is sharp: l = 2 must be rejected.
    ++cases;
    bool rejected = false;
    try {
        claim_solutions(2, Complex{1.0, 0.0});
    } catch (const PreconditionViolated&) {
        rejected = true;
    }
    if (rejected) {
        ++passes;
    } else {
        failures.push_back(Json{{"l", 2},
                                {"reason", "l = 2 was not rejected"},
                                {"repro", "polygeo suite claim --seed " + std::to_string(seed)}});
    }

    SuiteResult result;
    result.all_passed = passes == cases;
    result.summary = Json{{"suite", "claim"},
                          {"seed", seed},
                          {"betas_per_l", betas_per_l},
                          {"cases", cases},
                          {"passes", passes},
                          {"failures", failures},
                          {"all_passed", result.all_passed}};
    return result;
}

SuiteResult suite_dnk_dichotomy(std::uint64_t seed, int starts, long random_evals) {
    Json rows = Json::array();
    Json failures = Json::array();
    const EstimateBudget budget{starts, 150};

    struct Saturating {
        int n, k;
    };
    for (const auto [n, k] : std::array<Saturating, 4>{{{4, 1}, {5, 1}, {6, 1}, {6, 2}}}) {
        const std::uint64_t est_seed = mix_seed(seed, n, k);
        const ExtremalEstimate est = estimate_dnk(n, k, budget, est_seed);
        const bool ok = est.best_ratio >= 0.999;
        rows.push_back(Json{{"n", n},
                            {"k", k},
                            {"side", "saturating"},
                            {"best_ratio", est.best_ratio},
                            {"degree_used", est.degree_used},
                            {"pass", ok}});
        if (!ok) {
            std::ostringstream repro;
            repro << "polygeo dnk --n " << n << " --k " << k << " --starts " << starts
                  << " --seed " << est_seed;
            failures.push_back(Json{{"n", n},
                                    {"k", k},
                                    {"reason", "saturating pair stayed below 0.999"},
                                    {"repro", repro.str()}});
        }
    }

    struct Strict {
        int n, k;
        double cap;
    };
    for (const auto [n, k, cap] :
         std::array<Strict, 2>{{{3, 1, 2.0 / 3.0 + 1e-3}, {4, 2, 1.0 - 1e-3}}}) {
        const std::uint64_t est_seed = mix_seed(seed, n, k);
        const ExtremalEstimate est = estimate_dnk(n, k, budget, est_seed);
        double max_seen = est.best_ratio;
        long skipped = 0;
        Polynomial worst_poly;
        for (long i = 0; i < random_evals; ++i) {
            Rng rng(mix_seed(seed, 0xEEull * n + static_cast<std::uint64_t>(k),
                             static_cast<std::uint64_t>(i)));
            const int m = k + 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n - k)));
            std::vector<Complex> roots;
            for (int j = 0; j < m; ++j) roots.push_back(rng.in_disk(3.0));
            const Polynomial p = Polynomial::from_roots(roots, Complex{1.0, 0.0});
            try {
                const double r = ratio(p, k);
                if (r > max_seen) {
                    max_seen = r;
                    worst_poly = p;
                }
            } catch (const DomainError&) {
                ++skipped;
            }
        }
        const bool ok = max_seen <= cap;
        rows.push_back(Json{{"n", n},
                            {"k", k},
                            {"side", "strict"},
                            {"cap", cap},
                            {"best_ratio", est.best_ratio},
                            {"max_seen", max_seen},
                            {"random_evals", random_evals},
                            {"skipped", skipped},
                            {"pass", ok}});
        if (!ok) {
            std::string repro;
            if (!worst_poly.is_zero()) {
                repro = poly_repro("diam", worst_poly) + " && " +
                        poly_repro("diam", worst_poly.derivative(k));
            } else {
                std::ostringstream os;
                os << "polygeo dnk --n " << n << " --k " << k << " --starts " << starts
                   << " --seed " << est_seed;
                repro = os.str();
            }
            failures.push_back(
                Json{{"n", n}, {"k", k}, {"reason", "ratio exceeded the cap"}, {"repro", repro}});
        }
    }

    SuiteResult result;
    result.all_passed = failures.empty();
    result.summary = Json{{"suite", "dnk-dichotomy"},
                          {"seed", seed},
                          {"starts", starts},
                          {"random_evals", random_evals},
                          {"rows", rows},
                          {"failures", failures},
                          {"all_passed", result.all_passed}};
    return result;
}

SuiteResult suite_adversarial(std::uint64_t seed) {
    Json cases = Json::array();
    Json failures = Json::array();
    long passes = 0;
    long total = 0;

    for (int t = 1; t <= 3; ++t) {
        for (const double m_val : std::array<double, 3>{10.0, 100.0, 1000.0}) {
            ++total;
            std::vector<Complex> coeffs(static_cast<std::size_t>(t) + 2, Complex{0.0, 0.0});
            coeffs[static_cast<std::size_t>(t) + 1] = {1.0, 0.0};
            coeffs[static_cast<std::size_t>(t) - 1] = {-m_val, 0.0};
            const Polynomial p(std::move(coeffs));
            const double expected = 2.0 * std::sqrt(m_val);

            std::string why;
            double actual = 0.0;
            try {
                actual = diameter(find_roots(p));
                if (std::abs(actual - expected) > 1e-6 * expected) {
                    why = "diameter off by more than 1e-6 relative";
                }
            } catch (const DomainError& e) {
                why = std::string("solver failure: ") + e.what();
            }
            cases.push_back(Json{{"t", t},
                                 {"M", m_val},
                                 {"expected", expected},
                                 {"actual", actual},
                                 {"pass", why.empty()}});
            if (why.empty()) {
                ++passes;
            } else {
                failures.push_back(
                    Json{{"t", t}, {"M", m_val}, {"reason", why}, {"repro", poly_repro("diam", p)}});
            }
        }
    }

    SuiteResult result;
    result.all_passed = passes == total;
    result.summary = Json{{"suite", "adversarial"},
                          {"seed", seed},
                          {"cases", cases},
                          {"passes", passes},
                          {"total", total},
                          {"failures", failures},
                          {"all_passed", result.all_passed}};
    return result;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "gauss-lucas") return suite_gauss_lucas(seed);
    if (name == "roundtrip") return suite_roundtrip(seed);
    if (name == "claim") return suite_claim(seed);
    if (name == "dnk-dichotomy") return suite_dnk_dichotomy(seed);
    if (name == "adversarial") return suite_adversarial(seed);
    throw DomainError("unknown suite: " + name +
                      " (expected gauss-lucas | roundtrip | claim | dnk-dichotomy | adversarial)");
}

}  // namespace polygeo
