#include "polygeo/extremal.hpp"

#include <algorithm>
#include <cmath>

#include "polygeo/errors.hpp"
#include "polygeo/geometry.hpp"
#include "polygeo/nelder_mead.hpp"
#include "polygeo/rng.hpp"

namespace polygeo {

namespace {

std::vector<Complex> sorted_roots(std::vector<Complex> roots) {
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

bool lex_less_roots(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
}

}  // namespace

double ratio(const Polynomial& p, int k, const RootConfig& cfg) {
    if (k < 0) throw DomainError("ratio: derivative order must be nonnegative");
    if (p.degree() < 1 || p.degree() < k + 1) {
        throw DegreeTooLow("ratio requires degree(p) >= max(1, k+1)");
    }
    // Cluster structure decides singleton-ness; the diameters themselves are
    // taken over the raw approximations. Cluster centers can be displaced by
    // noise-floor merges, which an optimizer driving this objective would
    // exploit; raw stars only ever widen a set, so the quotient stays a lower
    // bound near saturation instead of drifting above it.
    const ZeroSet zp = find_roots(p, cfg);
    if (zp.points.size() <= 1) return 0.0;  // all roots coincide; so do those of P^(k)
    if (k == 0) return 1.0;                 // identical zero set
    const ZeroSet zk = find_roots(p.derivative(k), cfg);
    if (zk.points.size() <= 1) return 0.0;  // singleton image
    return diameter(std::span<const Complex>(zk.approximations)) /
           diameter(std::span<const Complex>(zp.approximations));
}

std::optional<double> dnk_exact(int n, int k) {
    if (2 * k <= n - 2) return 1.0;
    if (n == 3 && k == 1) return 2.0 / 3.0;
    return std::nullopt;
}

ExtremalEstimate estimate_dnk(int n, int k, const EstimateBudget& budget, std::uint64_t seed) {
    if (n < 2) throw InvalidRange("estimate_dnk requires n >= 2");
    if (k < 0 || k > n - 2) throw InvalidRange("estimate_dnk requires 0 <= k <= n-2");

    const RootConfig rcfg = multiplicity_config();  // one config for every evaluation
    ExtremalEstimate est;
    est.n = n;
    est.k = k;
    est.starts = budget.starts;
    est.seed = seed;

    auto safe_ratio = [&](const std::vector<Complex>& roots) -> double {
        ++est.evaluations;
        try {
            return ratio(Polynomial::from_roots(roots, Complex{1.0, 0.0}), k, rcfg);
        } catch (const DomainError&) {
            ++est.failed_evaluations;
            return 0.0;
        }
    };

    // Max with a deterministic tie-break: on equal ratio the lexicographically
    // smaller witness encoding wins.
    auto consider = [&](const std::vector<Complex>& roots, int degree_m) {
        const std::vector<Complex> canonical = sorted_roots(roots);
        const double value = safe_ratio(canonical);
        const bool first = est.witness_roots.empty();
        if (first || value > est.best_ratio ||
            (value == est.best_ratio && lex_less_roots(canonical, est.witness_roots))) {
            est.best_ratio = value;
            est.witness_roots = canonical;
            est.degree_used = degree_m;
        }
    };

    // Degree sweep: the gauge pin needs two roots, so the sweep effectively
    // starts at m = 2; degree-1 configurations only contain the excluded
    // all-roots-coincide ray.
    for (int m = std::max(2, k + 1); m <= n; ++m) {
        const int dim = 2 * (m - 2);

        auto roots_from_params = [m](const std::vector<double>& params) {
            std::vector<Complex> roots{Complex{0.0, 0.0}, Complex{1.0, 0.0}};
            for (int j = 0; j < m - 2; ++j) {
                roots.emplace_back(params[2 * static_cast<std::size_t>(j)],
                                   params[2 * static_cast<std::size_t>(j) + 1]);
            }
            return roots;
        };

        std::vector<std::vector<double>> starts;
        // Structured collided-root starts: extras split between the pins.
        for (int zeros = 0; zeros <= m - 2; ++zeros) {
            std::vector<double> params;
            for (int j = 0; j < m - 2; ++j) {
                params.push_back(j < zeros ? 0.0 : 1.0);
                params.push_back(0.0);
            }
            starts.push_back(std::move(params));
        }
        for (int s = 0; s < budget.starts; ++s) {
            Rng rng(mix_seed(seed, static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(s)));
            std::vector<double> params;
            for (int j = 0; j < m - 2; ++j) {
                const Complex r = rng.in_disk(3.0);
                params.push_back(r.real());
                params.push_back(r.imag());
            }
            starts.push_back(std::move(params));
        }

        for (const auto& start : starts) {
            if (dim == 0) {
                consider(roots_from_params(start), m);
                continue;
            }
            auto objective = [&](const std::vector<double>& params) {
                return -safe_ratio(roots_from_params(params));
            };
            const SimplexResult local =
                nelder_mead(objective, start, 0.5, budget.local_iters, 1e-12, 1e-9);
            consider(roots_from_params(local.x), m);
        }
    }

    est.converged_fraction =
        est.evaluations > 0
            ? 1.0 - static_cast<double>(est.failed_evaluations) / static_cast<double>(est.evaluations)
            : 1.0;
    return est;
}

std::vector<DnkRow> dnk_table(int n_max, const EstimateBudget& budget, std::uint64_t seed) {
    if (n_max < 2) throw InvalidRange("dnk_table requires n_max >= 2");
    std::vector<DnkRow> rows;
    for (int n = 2; n <= n_max; ++n) {
        for (int k = 0; k <= n - 2; ++k) {
            DnkRow row;
            row.estimate = estimate_dnk(n, k, budget,
                                        mix_seed(seed, static_cast<std::uint64_t>(n),
                                                 static_cast<std::uint64_t>(k)));
            if (const auto exact = dnk_exact(n, k)) {
                row.exact = true;
                row.exact_value = *exact;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace polygeo
