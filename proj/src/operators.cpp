#include "polygeo/operators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "polygeo/errors.hpp"
#include "polygeo/geometry.hpp"
#include "polygeo/rng.hpp"

namespace polygeo {

namespace {

double binomial(int n, int k) {
    double acc = 1.0;
    for (int i = 1; i <= k; ++i) {
        acc *= static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return acc;
}

double falling_factorial(int j, int k) {
    double acc = 1.0;
    for (int i = 0; i < k; ++i) acc *= static_cast<double>(j - i);
    return acc;
}

double factorial(int n) {
    double acc = 1.0;
    for (int i = 2; i <= n; ++i) acc *= static_cast<double>(i);
    return acc;
}

Complex cpow_int(Complex z, int n) {
    Complex acc{1.0, 0.0};
    for (int i = 0; i < n; ++i) acc *= z;
    return acc;
}

std::string complex_str(Complex z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

}  // namespace

MonomialOperator::MonomialOperator(int n, std::vector<Polynomial> images)
    : n_(n), images_(std::move(images)) {
    if (n_ < 0) throw DomainError("operator degree bound must be nonnegative");
    if (images_.size() != static_cast<std::size_t>(n_) + 1) {
        throw DomainError("operator needs exactly n+1 monomial images");
    }
}

Polynomial MonomialOperator::apply(const Polynomial& p) const {
    if (p.degree() > n_) throw DegreeExceedsN("operator applied to polynomial of degree > n");
    std::vector<std::pair<Complex, Polynomial>> terms;
    for (int j = 0; j <= p.degree(); ++j) {
        terms.emplace_back(p.coeff(j), images_[static_cast<std::size_t>(j)]);
    }
    return linear_combination(terms);
}

MonomialOperator make_form1(const LinearFunctional& l1, const LinearFunctional& l2, int n) {
    if (l1.weights.size() != static_cast<std::size_t>(n) + 1 ||
        l2.weights.size() != static_cast<std::size_t>(n) + 1) {
        throw DomainError("functional weight length must be n+1");
    }
    std::vector<Polynomial> images;
    for (int j = 0; j <= n; ++j) {
        images.push_back(Polynomial({l2.weights[static_cast<std::size_t>(j)],
                                     l1.weights[static_cast<std::size_t>(j)]}));
    }
    return {n, std::move(images)};
}

MonomialOperator make_form2(Complex c, int m, const LinearFunctional& l3, int n) {
    if (m < 2) throw InvalidRange("form 2 requires m >= 2");
    if (l3.weights.size() != static_cast<std::size_t>(n) + 1) {
        throw DomainError("functional weight length must be n+1");
    }
    if (l3.is_zero()) throw DomainError("form 2 rejects the zero functional");
    const std::vector<Complex> repeated(static_cast<std::size_t>(m), c);
    const Polynomial base = Polynomial::from_roots(repeated, Complex{1.0, 0.0});
    std::vector<Polynomial> images;
    for (int j = 0; j <= n; ++j) {
        images.push_back(scale(base, l3.weights[static_cast<std::size_t>(j)]));
    }
    return {n, std::move(images)};
}

MonomialOperator make_form3(Complex c, int k, const AffineMap& map, int n) {
    if (std::abs(c) == 0.0) throw DomainError("form 3 requires c != 0");
    if (!map.invertible()) throw DomainError("form 3 requires an invertible affine map");
    if (k < 0 || k > n - 2) throw InvalidRange("form 3 requires 0 <= k <= n-2");
    std::vector<Polynomial> images;
    for (int j = 0; j <= n; ++j) {
        images.push_back(scale(Polynomial::monomial(j).compose_affine(map).derivative(k), c));
    }
    return {n, std::move(images)};
}

DnkValue DnkSource::lookup(int n, int k) const {
    if (const auto exact = dnk_exact(n, k)) return {*exact, DnkProvenance::Exact};
    const auto key = std::make_pair(n, k);
    if (const auto it = cache_.find(key); it != cache_.end()) return it->second;
    const ExtremalEstimate est = estimate_dnk(n, k, budget_, mix_seed(seed_, n, k));
    const DnkValue value{est.best_ratio, DnkProvenance::LowerBound};
    cache_.emplace(key, value);
    return value;
}

namespace {

std::optional<Form1Match> detect_form1(const MonomialOperator& op) {
    for (const Polynomial& q : op.images()) {
        if (q.degree() > 1) return std::nullopt;
    }
    Form1Match match;
    for (const Polynomial& q : op.images()) {
        match.l1.weights.push_back(q.coeff(1));
        match.l2.weights.push_back(q.coeff(0));
    }
    return match;
}

std::optional<Form2Match> detect_form2(const MonomialOperator& op, int first_nonzero,
                                       double tol, const RootConfig& rcfg) {
    const Polynomial& q = op.image(first_nonzero);
    const int m = q.degree();
    if (m < 2) return std::nullopt;
    for (const Polynomial& img : op.images()) {
        if (!img.is_zero() && img.degree() != m) return std::nullopt;
    }
    const ZeroSet zs = find_roots(q, rcfg);
    if (zs.points.size() != 1 || zs.points[0].multiplicity < 2) return std::nullopt;
    const Complex c = zs.points[0].location;

    const std::vector<Complex> repeated(static_cast<std::size_t>(m), c);
    const Polynomial base = Polynomial::from_roots(repeated, Complex{1.0, 0.0});
    double base_norm2 = 0.0;
    for (const Complex& v : base.coeffs()) base_norm2 += std::norm(v);

    Form2Match match;
    match.c = c;
    match.m = m;
    for (const Polynomial& img : op.images()) {
        if (img.is_zero()) {
            match.l3.weights.push_back({0.0, 0.0});
            continue;
        }
        // Least-deviation proportionality scalar against the monic power.
        Complex s{0.0, 0.0};
        for (int j = 0; j <= m; ++j) s += img.coeff(j) * std::conj(base.coeff(j));
        s /= base_norm2;
        if (coeff_distance(img, scale(base, s)) > tol * std::max(1.0, img.coeff_scale())) {
            return std::nullopt;
        }
        match.l3.weights.push_back(s);
    }
    return match;
}

std::optional<Form3Match> detect_form3(const MonomialOperator& op, int first_nonzero,
                                       double tol) {
    const int n = op.n();
    const int k = first_nonzero;
    if (k > n - 2) return std::nullopt;
    const Polynomial& base_img = op.image(k);
    const Polynomial& next_img = op.image(k + 1);
    if (base_img.degree() != 0 || next_img.degree() != 1) return std::nullopt;

    // images[k] = c k! a^k and images[k+1] = c (k+1)! a^k (a z + b) pin the
    // parameters; everything else is verification.
    const Complex v = base_img.coeff(0);
    const Complex a = next_img.coeff(1) / (static_cast<double>(k + 1) * v);
    const Complex b = next_img.coeff(0) / (static_cast<double>(k + 1) * v);
    if (std::abs(a) == 0.0) return std::nullopt;
    const Complex c = v / (factorial(k) * cpow_int(a, k));
    const AffineMap map{a, b};

    for (int j = 0; j <= n; ++j) {
        const Polynomial expected =
            j < k ? Polynomial{}
                  : scale(Polynomial::monomial(j - k).compose_affine(map),
                          c * falling_factorial(j, k) * cpow_int(a, k));
        const double scale_ref = std::max(1.0, std::max(op.image(j).coeff_scale(),
                                                        expected.coeff_scale()));
        if (coeff_distance(op.image(j), expected) > tol * scale_ref) return std::nullopt;
    }
    return Form3Match{c, k, map};
}

}  // namespace

FormReport classify(const MonomialOperator& op, double tol, const DnkSource& dnk) {
    FormReport report;

    int first_nonzero = -1;
    for (int j = 0; j <= op.n(); ++j) {
        if (!op.image(j).is_zero()) {
            first_nonzero = j;
            break;
        }
    }

    report.form1 = detect_form1(op);
    if (first_nonzero >= 0) {
        report.form2 = detect_form2(op, first_nonzero, tol, multiplicity_config());
        report.form3 = detect_form3(op, first_nonzero, tol);
    }

    if (report.form3) {
        const DnkValue bound = dnk.lookup(op.n(), report.form3->k);
        report.dnk_used = DnkUsed{op.n(), report.form3->k, bound};
        const double slope = std::abs(report.form3->map.a);
        if (slope >= bound.value - 1e-9) {
            report.verdict = Verdict::StructurallyNonexpansive;
            report.conditional = (bound.provenance == DnkProvenance::LowerBound);
            std::ostringstream os;
            os << "form 3 with |L'| = " << slope << " >= d_{" << op.n() << ","
               << report.form3->k << "} = " << bound.value;
            if (report.conditional) os << " (estimated lower bound; verdict conditional)";
            report.detail = os.str();
        } else {
            report.verdict = Verdict::ConditionViolated;
            std::ostringstream os;
            os << "form 3 matched but |L'| = " << slope << " < d_{" << op.n() << ","
               << report.form3->k << "} = " << bound.value
               << (bound.provenance == DnkProvenance::LowerBound ? " (estimated lower bound)"
                                                                 : "");
            report.detail = os.str();
        }
    } else if (report.form1 || report.form2) {
        report.verdict = Verdict::StructurallyNonexpansive;
        report.detail = report.form1 ? "form 1: range inside degree <= 1"
                                     : "form 2: rank one onto a fixed power";
    } else {
        report.verdict = Verdict::NoCanonicalForm;
        report.detail = "no canonical form matched";
    }
    return report;
}

RefutationResult test_nonexpansive(const MonomialOperator& op, const RefuteConfig& cfg) {
    if (cfg.trials < 1) throw DomainError("test_nonexpansive requires trials >= 1");
    const int n = op.n();
    RefutationResult result;
    result.note = "NoCounterexampleFound is a statistical statement, never a certificate";

    long index = 0;
    auto run_trial = [&](const Polynomial& p, const std::string& label) -> bool {
        const long trial = index++;
        ++result.trials_run;
        if (p.is_constant()) {
            ++result.skipped_constant;
            return false;
        }
        Polynomial lp;
        try {
            lp = op.apply(p);
        } catch (const DomainError&) {
            ++result.skipped_solver;
            return false;
        }
        if (lp.is_constant()) {
            ++result.skipped_constant;
            return false;
        }
        double diam_p = 0.0, diam_lp = 0.0;
        try {
            diam_p = diameter(find_roots(p, cfg.roots));
            diam_lp = diameter(find_roots(lp, cfg.roots));
        } catch (const NonConvergenceError&) {
            ++result.skipped_solver;
            return false;
        }
        if (diam_lp > diam_p + cfg.tol) {
            result.counterexample = Counterexample{p, diam_p, diam_lp, trial, label};
            return true;
        }
        return false;
    };

    // Adversarial batch 1: single-zero family (z + alpha)^s.
    for (int s = 1; s <= n; ++s) {
        for (const Complex& alpha : default_alpha_grid()) {
            const std::vector<Complex> roots(static_cast<std::size_t>(s), -alpha);
            const Polynomial p = Polynomial::from_roots(roots, Complex{1.0, 0.0});
            std::ostringstream label;
            label << "(z+" << complex_str(alpha) << ")^" << s;
            if (run_trial(p, label.str())) return result;
        }
    }
    // Adversarial batch 2: spread family z^{t+1} - M z^{t-1}.
    for (int t = 1; t <= n - 1; ++t) {
        for (const double m_val : std::array<double, 3>{10.0, 100.0, 1000.0}) {
            std::vector<Complex> coeffs(static_cast<std::size_t>(t) + 2, Complex{0.0, 0.0});
            coeffs[static_cast<std::size_t>(t) + 1] = {1.0, 0.0};
            coeffs[static_cast<std::size_t>(t) - 1] = {-m_val, 0.0};
            std::ostringstream label;
            label << "z^" << (t + 1) << " - " << m_val << " z^" << (t - 1);
            if (run_trial(Polynomial(std::move(coeffs)), label.str())) return result;
        }
    }

    // Random trials: half sampled by roots (known geometry), half by
    // coefficients (stresses conditioning).
    for (long i = 0; i < cfg.trials; ++i) {
        Rng rng(mix_seed(cfg.seed, 0x7e57ull, static_cast<std::uint64_t>(i)));
        const int degree = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n)));
        Polynomial p;
        if (rng.coin()) {
            std::vector<Complex> roots;
            for (int j = 0; j < degree; ++j) roots.push_back(rng.in_disk(2.0));
            p = Polynomial::from_roots(roots, Complex{1.0, 0.0});
        } else {
            std::vector<Complex> coeffs;
            for (int j = 0; j <= degree; ++j) coeffs.push_back(rng.normal_complex());
            p = Polynomial(std::move(coeffs));
        }
        if (run_trial(p, "random")) return result;
    }
    return result;
}

std::vector<Complex> default_alpha_grid() {
    std::vector<Complex> grid;
    const std::array<double, 4> radii{0.5, 1.0, 1.7, 2.6};
    for (const double r : radii) {
        for (int j = 0; j < 5; ++j) {
            const double angle = 6.283185307179586 * static_cast<double>(j) / 5.0 + 0.35;
            grid.emplace_back(r * std::cos(angle), r * std::sin(angle));
        }
    }
    return grid;
}

ProbeResult single_zero_probe(const MonomialOperator& op, std::span<const Complex> alpha_grid,
                              const RootConfig& cfg) {
    ProbeResult result;
    for (int s = 0; s <= op.n(); ++s) {
        // s = 0 gives L[1], which does not depend on alpha; probe it once.
        const std::size_t alphas = s == 0 ? std::min<std::size_t>(1, alpha_grid.size())
                                          : alpha_grid.size();
        for (std::size_t ai = 0; ai < alphas; ++ai) {
            const Complex alpha = alpha_grid[ai];
            std::vector<std::pair<Complex, Polynomial>> terms;
            for (int j = 0; j <= s; ++j) {
                terms.emplace_back(binomial(s, j) * cpow_int(alpha, j),
                                   op.image(s - j));
            }
            const Polynomial q = linear_combination(terms);
            ++result.cases_run;
            try {
                const int count = distinct_zero_count(q, cfg);
                if (count >= 2) result.violations.push_back({s, alpha, count});
            } catch (const NonConvergenceError&) {
                ++result.skipped;
            }
        }
    }
    return result;
}

namespace {

/// Solves a small complex linear system in place; returns false when singular.
bool solve_dense(std::vector<std::vector<Complex>> a, std::vector<Complex> rhs,
                 std::vector<Complex>& out) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        if (std::abs(a[pivot][col]) < 1e-300) return false;
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    out.assign(n, Complex{0.0, 0.0});
    for (std::size_t r = n; r-- > 0;) {
        Complex acc = rhs[r];
        for (std::size_t c = r + 1; c < n; ++c) acc -= a[r][c] * out[c];
        out[r] = acc / a[r][r];
    }
    return true;
}

}  // namespace

std::vector<ClaimSolution> claim_solutions(int l, Complex beta, const ClaimConfig& cfg) {
    if (l < 3) throw PreconditionViolated("claim_solutions requires l >= 3");
    if (beta == Complex{0.0, 0.0}) throw PreconditionViolated("claim_solutions requires beta != 0");

    // Coefficient matching of (w+beta)^l - w^l = d[(w+gamma)^l - (w+delta)^l]
    // gives d(gamma^i - delta^i) = beta^i for i = 1..l. Newton on the first
    // three equations from seeded starts, then the full identity is verified.
    std::vector<Complex> beta_pow(static_cast<std::size_t>(l) + 1);
    beta_pow[0] = {1.0, 0.0};
    for (int i = 1; i <= l; ++i) beta_pow[static_cast<std::size_t>(i)] = beta_pow[i - 1] * beta;

    const double beta_mag = std::abs(beta);
    std::vector<ClaimSolution> solutions;

    for (int start = 0; start < cfg.starts; ++start) {
        Rng rng(mix_seed(cfg.seed, 0xc1a1ull, static_cast<std::uint64_t>(start)));
        Complex d = rng.in_annulus(0.3, 2.0);
        Complex g = rng.in_disk(2.5 * std::max(1.0, beta_mag));
        Complex e = rng.in_disk(2.5 * std::max(1.0, beta_mag));

        bool converged = false;
        for (int it = 0; it < 60; ++it) {
            std::vector<Complex> f(3);
            std::vector<std::vector<Complex>> jac(3, std::vector<Complex>(3));
            double err = 0.0;
            for (int i = 1; i <= 3; ++i) {
                const Complex gi = cpow_int(g, i);
                const Complex ei = cpow_int(e, i);
                f[i - 1] = d * (gi - ei) - beta_pow[static_cast<std::size_t>(i)];
                jac[i - 1][0] = gi - ei;
                jac[i - 1][1] = d * static_cast<double>(i) * cpow_int(g, i - 1);
                jac[i - 1][2] = -d * static_cast<double>(i) * cpow_int(e, i - 1);
                err = std::max(err, std::abs(f[i - 1]) / std::max(1.0, std::pow(beta_mag, i)));
            }
            if (err <= 1e-13) {
                converged = true;
                break;
            }
            std::vector<Complex> step;
            if (!solve_dense(jac, f, step)) break;
            d -= step[0];
            g -= step[1];
            e -= step[2];
            if (std::abs(d) > 1e8 || std::abs(g) > 1e8 || std::abs(e) > 1e8) break;
        }
        if (!converged) continue;

        // Full coefficient check, i = 1..l.
        bool full = true;
        for (int i = 1; i <= l && full; ++i) {
            const Complex lhs = d * (cpow_int(g, i) - cpow_int(e, i));
            if (std::abs(lhs - beta_pow[static_cast<std::size_t>(i)]) >
                1e-10 * std::max(1.0, std::pow(std::max({beta_mag, std::abs(g), std::abs(e)}), i))) {
                full = false;
            }
        }
        if (!full) continue;

        // Identity residual over a spread of sample points.
        const std::array<Complex, 9> samples{Complex{0, 0},    Complex{1, 0},  Complex{-1, 0},
                                             Complex{0, 1},    Complex{0, -1}, Complex{2, 0},
                                             Complex{-0.5, 1.5}, Complex{1, 1}, Complex{-2, -1}};
        double residual = 0.0;
        for (const Complex& w : samples) {
            const Complex lhs = cpow_int(w + beta, l) - cpow_int(w, l);
            const Complex rhs = d * (cpow_int(w + g, l) - cpow_int(w + e, l));
            const double scale_w = std::pow(
                std::abs(w) + std::max({beta_mag, std::abs(g), std::abs(e)}) + 1.0, l);
            residual = std::max(residual, std::abs(lhs - rhs) / scale_w);
        }
        if (residual > 1e-9) continue;

        const double dedupe_tol = 1e-6 * std::max(1.0, beta_mag);
        bool duplicate = false;
        for (const ClaimSolution& known : solutions) {
            if (std::abs(known.d - d) + std::abs(known.gamma - g) + std::abs(known.delta - e) <
                dedupe_tol) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) solutions.push_back({d, g, e, residual});
    }

    std::sort(solutions.begin(), solutions.end(), [](const ClaimSolution& a, const ClaimSolution& b) {
        const std::array<double, 6> ka{a.d.real(),     a.d.imag(),     a.gamma.real(),
                                       a.gamma.imag(), a.delta.real(), a.delta.imag()};
        const std::array<double, 6> kb{b.d.real(),     b.d.imag(),     b.gamma.real(),
                                       b.gamma.imag(), b.delta.real(), b.delta.imag()};
        return ka < kb;
    });
    return solutions;
}

BasisMatrixResult shifted_power_basis_matrix(std::span<const Complex> lambdas, int l) {
    if (lambdas.size() != static_cast<std::size_t>(l) + 1) {
        throw DomainError("shifted_power_basis_matrix needs exactly l+1 shifts");
    }
    BasisMatrixResult result;
    for (const Complex& lambda : lambdas) {
        std::vector<Complex> row(static_cast<std::size_t>(l) + 1);
        for (int j = 0; j <= l; ++j) {
            row[static_cast<std::size_t>(j)] = binomial(l, j) * cpow_int(lambda, l - j);
        }
        result.rows.push_back(std::move(row));
    }

    result.scale = 1.0;
    for (const auto& row : result.rows) {
        double norm2 = 0.0;
        for (const Complex& v : row) norm2 += std::norm(v);
        result.scale *= std::sqrt(norm2);
    }

    // Determinant by elimination with partial pivoting.
    std::vector<std::vector<Complex>> a = result.rows;
    Complex det{1.0, 0.0};
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        if (std::abs(a[pivot][col]) == 0.0) {
            det = {0.0, 0.0};
            break;
        }
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    result.det_magnitude = std::abs(det);
    result.nonsingular = result.det_magnitude > 1e-10 * result.scale;
    return result;
}

}  // namespace polygeo
