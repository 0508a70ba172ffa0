#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polygeo/poly.hpp"
#include "polygeo/roots.hpp"

namespace polygeo {

struct EstimateBudget {
    int starts = 200;      ///< random starts per swept degree
    int local_iters = 150; ///< simplex iterations per start
};

/// Lower-bound certificate for d_{n,k}: the best diameter ratio found, with
/// the witness root configuration that attains it.
struct ExtremalEstimate {
    int n = 0, k = 0;
    double best_ratio = 0.0;
    std::vector<Complex> witness_roots;
    int degree_used = 0;
    int starts = 0;
    std::uint64_t seed = 0;
    double converged_fraction = 1.0;
    long evaluations = 0;
    long failed_evaluations = 0;
};

/// diam Z(P^(k)) / diam Z(P). Requires degree(p) >= max(1, k+1). Returns 0
/// when all roots of p coincide (then Z(P^(k)) is the same singleton); returns
/// exactly 1 for k = 0 since P^(0) = P. Clustering is adaptive by default:
/// near-saturating configurations ride the collision boundary, where a fixed
/// merge radius would bias the diameters.
double ratio(const Polynomial& p, int k, const RootConfig& cfg = multiplicity_config());

/// Maximizes the diameter ratio over root configurations of each degree
/// m in [k+1, n], with the affine gauge fixed by pinning the first two roots
/// at 0 and 1 (valid because the ratio is affine invariant; the all-roots-
/// equal ray is excluded by the pin). Local search is a derivative-free
/// simplex method from seeded random starts (remaining roots uniform in the
/// disk of radius 3) plus structured collided-root starts such as {0,0,1,..}.
/// The returned best_ratio is re-evaluated on the witness, so it is a
/// certified lower bound for d_{n,k}.
ExtremalEstimate estimate_dnk(int n, int k, const EstimateBudget& budget, std::uint64_t seed);

/// Exact d_{n,k} where known: 1 when 2k <= n-2, 2/3 at (n,k) = (3,1).
std::optional<double> dnk_exact(int n, int k);

struct DnkRow {
    ExtremalEstimate estimate;
    bool exact = false;
    double exact_value = 0.0;  ///< meaningful only when exact
};

/// Complete (n,k) grid for n <= n_max; rows are flagged exact where the
/// constant is pinned, estimates (lower bounds) otherwise.
std::vector<DnkRow> dnk_table(int n_max, const EstimateBudget& budget, std::uint64_t seed);

}  // namespace polygeo
