#pragma once

#include <cstdint>
#include <vector>

#include "polygeo/poly.hpp"

namespace polygeo {

/// Passing this as RootConfig::cluster_radius selects adaptive clustering:
/// two approximations merge when their distance is within a multiple of the
/// joint Newton correction |P/P'|, which tracks the attainable accuracy of a
/// multiple root in doubles without over-merging resolved simple roots.
inline constexpr double kClusterAuto = 0.0;

/// Configuration for the simultaneous-iteration root solver.
///
/// The default cluster radius (1e-6) suits simple-root work. Callers that
/// expect multiplicities should use a coarser radius (1e-3) or kClusterAuto;
/// see multiplicity_config().
struct RootConfig {
    int max_iter = 200;
    /// Relative: a center r is converged when
    /// |P(r)| <= residual_tol * coeff_scale * max(1,|r|)^degree.
    double residual_tol = 1e-12;
    double cluster_radius = 1e-6;
    std::uint64_t seed = 0;
};

/// RootConfig preset for callers that expect multiple roots.
inline RootConfig multiplicity_config() {
    RootConfig cfg;
    cfg.cluster_radius = kClusterAuto;
    return cfg;
}

struct RootCluster {
    Complex location;
    int multiplicity = 1;
};

/// Multiset of roots grouped into clusters; the sum of multiplicities equals
/// the degree of the generating polynomial.
struct ZeroSet {
    std::vector<RootCluster> points;
    double cluster_radius = 0.0;
    /// Largest relative residual over the returned centers.
    double residual_bound = 0.0;
    /// Raw converged approximations (degree many, unclustered), sorted.
    /// Diagnostic: consumers that must not inherit cluster-center bias, such
    /// as the extremal ratio, measure on these.
    std::vector<Complex> approximations;

    int total_multiplicity() const {
        int total = 0;
        for (const auto& p : points) total += p.multiplicity;
        return total;
    }
    std::vector<Complex> locations() const {
        std::vector<Complex> out;
        out.reserve(points.size());
        for (const auto& p : points) out.push_back(p.location);
        return out;
    }
};

/// Computes all degree(p) roots, counted with multiplicity, by Aberth-Ehrlich
/// simultaneous iteration from seeded initial guesses on a perturbed circle.
/// Clusters within the configured radius are merged (multiplicity = cluster
/// size) and centers of multiple clusters are polished on the (m-1)-th
/// derivative.
///
/// Throws ConstantPolynomialError for degree < 1 and NonConvergenceError when
/// the iteration cap is reached without meeting the residual criterion.
ZeroSet find_roots(const Polynomial& p, const RootConfig& cfg = {});

/// 0 for the zero polynomial and nonzero constants; otherwise the number of
/// clusters found by find_roots. Propagates NonConvergenceError.
int distinct_zero_count(const Polynomial& p, const RootConfig& cfg = multiplicity_config());

}  // namespace polygeo
