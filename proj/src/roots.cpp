#include "polygeo/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <functional>
#include <numeric>

#include "polygeo/errors.hpp"
#include "polygeo/rng.hpp"

namespace polygeo {

namespace {

constexpr double kTwoPi = 6.283185307179586;

/// Horner evaluation of p and p' in one pass.
std::pair<Complex, Complex> eval_with_derivative(const std::vector<Complex>& c, Complex z) {
    Complex p{0.0, 0.0};
    Complex dp{0.0, 0.0};
    for (std::size_t i = c.size(); i > 0; --i) {
        dp = dp * z + p;
        p = p * z + c[i - 1];
    }
    return {p, dp};
}

double relative_residual(const std::vector<Complex>& c, double scale, int deg, Complex z) {
    const Complex value = [&] {
        Complex acc{0.0, 0.0};
        for (std::size_t i = c.size(); i > 0; --i) acc = acc * z + c[i - 1];
        return acc;
    }();
    const double weight = scale * std::pow(std::max(1.0, std::abs(z)), deg);
    if (!(weight > 0.0) || !std::isfinite(weight)) return 0.0;
    return std::abs(value) / weight;
}

/// Single-linkage grouping. `thresholds[i][j]` is the merge distance for the
/// pair (i, j); `merged_threshold` reports the largest threshold that fired.
std::vector<std::vector<std::size_t>> link_clusters(
    const std::vector<Complex>& pts,
    const std::function<double(std::size_t, std::size_t)>& threshold,
    double* merged_threshold) {
    const std::size_t n = pts.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double limit = threshold(i, j);
            if (std::abs(pts[i] - pts[j]) <= limit) {
                parent[find(i)] = find(j);
                if (merged_threshold) *merged_threshold = std::max(*merged_threshold, limit);
            }
        }
    }
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::erase_if(groups, [](const auto& g) { return g.empty(); });
    return groups;
}

/// Newton polish of a multiplicity-m cluster center: a root of multiplicity m
/// of p is a simple (hence well-conditioned) root of p^{(m-1)}.
Complex refine_multiple_center(const Polynomial& p, Complex center, int multiplicity,
                               double radius) {
    const Polynomial pm = p.derivative(multiplicity - 1);
    if (pm.degree() < 1) return center;
    const auto& c = pm.coeffs();
    Complex z = center;
    for (int it = 0; it < 30; ++it) {
        auto [v, dv] = eval_with_derivative(c, z);
        if (std::abs(dv) == 0.0) break;
        const Complex step = v / dv;
        z -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
    }
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return center;
    if (std::abs(z - center) > radius) return center;  // left the cluster; keep the mean
    return z;
}

}  // namespace

ZeroSet find_roots(const Polynomial& p, const RootConfig& cfg) {
    const int deg = p.degree();
    if (deg < 1) throw ConstantPolynomialError{};

    const std::vector<Complex>& c = p.coeffs();
    const double scale = p.coeff_scale();
    const std::size_t n = static_cast<std::size_t>(deg);

    // Initial guesses on a circle of the coefficient root bound, angles
    // jittered by the seeded generator to break symmetric configurations.
    double bound = 0.0;
    for (std::size_t j = 0; j < n; ++j) bound = std::max(bound, std::abs(c[j] / c[n]));
    const double radius0 = 1.0 + bound;
    Rng rng(mix_seed(cfg.seed, 0x5eedc0de));
    std::vector<Complex> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double angle = kTwoPi * (static_cast<double>(i) + 0.3 + 0.4 * rng.uniform()) /
                             static_cast<double>(n);
        z[i] = radius0 * Complex{std::cos(angle), std::sin(angle)};
    }

    bool converged = false;
    double best_max_residual = std::numeric_limits<double>::infinity();
    int polish_left = -1;  // extra sweeps after the residual criterion is met
    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        // Gauss-Seidel Aberth sweep.
        for (std::size_t i = 0; i < n; ++i) {
            auto [pv, dv] = eval_with_derivative(c, z[i]);
            if (std::abs(pv) == 0.0) continue;
            if (std::abs(dv) == 0.0) {
                // Stationary point of p; nudge off it.
                z[i] += 1e-6 * (1.0 + std::abs(z[i]));
                continue;
            }
            const Complex newton = pv / dv;
            Complex repulsion{0.0, 0.0};
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const Complex d = z[i] - z[j];
                if (std::abs(d) < 1e-290) continue;
                repulsion += Complex{1.0, 0.0} / d;
            }
            const Complex denom = Complex{1.0, 0.0} - newton * repulsion;
            z[i] -= (std::abs(denom) > 1e-290) ? newton / denom : newton;
        }

        double max_residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            max_residual = std::max(max_residual, relative_residual(c, scale, deg, z[i]));
        }
        best_max_residual = std::min(best_max_residual, max_residual);
        if (max_residual <= cfg.residual_tol) {
            if (polish_left < 0) polish_left = 2;
            if (polish_left-- == 0) {
                converged = true;
                break;
            }
        } else {
            polish_left = -1;
        }
        if (iter + 1 == cfg.max_iter && max_residual <= cfg.residual_tol) converged = true;
    }
    if (!converged) throw NonConvergenceError(best_max_residual);

    double max_abs = 0.0;
    for (const Complex& v : z) max_abs = std::max(max_abs, std::abs(v));
    const bool auto_mode = !(cfg.cluster_radius > 0.0);
    const double base_radius = 1e-9 * (1.0 + max_abs);

    // Auto clustering merges by backward error: near a multiplicity-m root at
    // distance rho the Newton correction |P/P'| is about rho/m, so a multiple
    // of the joint correction covers the whole noise star while leaving
    // resolved simple roots alone.
    auto newton_size = [&](Complex w) {
        auto [pv, dv] = eval_with_derivative(c, w);
        const double cap = 0.05 * (1.0 + std::abs(w));
        if (std::abs(dv) < 1e-290) return cap;
        return std::min(std::abs(pv / dv), cap);
    };

    double reported_radius = auto_mode ? base_radius : cfg.cluster_radius;
    std::vector<Complex> centers = z;
    std::vector<int> mult(n, 1);
    std::vector<std::vector<std::size_t>> members(n);
    for (std::size_t i = 0; i < n; ++i) members[i] = {i};
    for (;;) {
        std::vector<double> corrections;
        if (auto_mode) {
            corrections.reserve(centers.size());
            for (const Complex& w : centers) corrections.push_back(newton_size(w));
        }
        auto threshold = [&](std::size_t i, std::size_t j) {
            if (!auto_mode) return cfg.cluster_radius;
            return std::max(1e-9 * (1.0 + std::abs(centers[i]) + std::abs(centers[j])),
                            12.0 * (corrections[i] + corrections[j]));
        };
        auto groups = link_clusters(centers, threshold, auto_mode ? &reported_radius : nullptr);
        if (groups.size() == centers.size()) break;
        std::vector<Complex> merged;
        std::vector<int> merged_mult;
        std::vector<std::vector<std::size_t>> merged_members;
        for (const auto& g : groups) {
            Complex sum{0.0, 0.0};
            int m = 0;
            std::vector<std::size_t> joined;
            for (std::size_t idx : g) {
                sum += centers[idx] * static_cast<double>(mult[idx]);
                m += mult[idx];
                joined.insert(joined.end(), members[idx].begin(), members[idx].end());
            }
            merged.push_back(sum / static_cast<double>(m));
            merged_mult.push_back(m);
            merged_members.push_back(std::move(joined));
        }
        centers = std::move(merged);
        mult = std::move(merged_mult);
        members = std::move(merged_members);
    }

    // Refinement may only move a center within the observed cluster spread;
    // a farther Newton target belongs to some other feature of p.
    for (std::size_t i = 0; i < centers.size(); ++i) {
        if (mult[i] >= 2) {
            double spread = 0.0;
            for (std::size_t idx : members[i]) {
                spread = std::max(spread, std::abs(z[idx] - centers[i]));
            }
            const double guard = 4.0 * spread + 1e-9 * (1.0 + std::abs(centers[i]));
            centers[i] = refine_multiple_center(p, centers[i], mult[i], guard);
        }
    }
    const double radius = reported_radius;

    ZeroSet zs;
    zs.cluster_radius = radius;
    zs.approximations = z;
    std::sort(zs.approximations.begin(), zs.approximations.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    for (std::size_t i = 0; i < centers.size(); ++i) {
        zs.points.push_back({centers[i], mult[i]});
        zs.residual_bound =
            std::max(zs.residual_bound, relative_residual(c, scale, deg, centers[i]));
    }
    std::sort(zs.points.begin(), zs.points.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return zs;
}

int distinct_zero_count(const Polynomial& p, const RootConfig& cfg) {
    if (p.degree() < 1) return 0;  // zero polynomial and nonzero constants have no zeros
    return static_cast<int>(find_roots(p, cfg).points.size());
}

}  // namespace polygeo
