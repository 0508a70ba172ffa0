#include "polygeo/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace polygeo {

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> x0, double step, int max_iter, double ftol,
                          double xtol) {
    const std::size_t n = x0.size();
    SimplexResult result;
    if (n == 0) {
        result.x = std::move(x0);
        result.fx = f(result.x);
        result.evaluations = 1;
        return result;
    }

    std::vector<std::vector<double>> x(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) x[i + 1][i] += step;
    std::vector<double> fx(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        fx[i] = f(x[i]);
        ++result.evaluations;
    }

    std::vector<std::size_t> idx(n + 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<double> centroid(n), xr(n), xe(n), xc(n);

    for (int it = 0; it < max_iter; ++it) {
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
        ++result.iterations;

        const double fbest = fx[idx[0]];
        const double fworst = fx[idx[n]];
        double spread = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                spread = std::max(spread, std::fabs(x[idx[i]][j] - x[idx[0]][j]));
            }
        }
        if (std::fabs(fworst - fbest) <= ftol && spread <= xtol) break;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) centroid[j] += x[idx[i]][j];
        }
        for (std::size_t j = 0; j < n; ++j) centroid[j] /= static_cast<double>(n);

        const std::vector<double>& xw = x[idx[n]];
        for (std::size_t j = 0; j < n; ++j) xr[j] = centroid[j] + (centroid[j] - xw[j]);
        const double fr = f(xr);
        ++result.evaluations;

        if (fr < fbest) {
            for (std::size_t j = 0; j < n; ++j) xe[j] = centroid[j] + 2.0 * (xr[j] - centroid[j]);
            const double fe = f(xe);
            ++result.evaluations;
            if (fe < fr) {
                x[idx[n]] = xe;
                fx[idx[n]] = fe;
            } else {
                x[idx[n]] = xr;
                fx[idx[n]] = fr;
            }
            continue;
        }
        if (fr < fx[idx[n - 1]]) {
            x[idx[n]] = xr;
            fx[idx[n]] = fr;
            continue;
        }

        if (fr < fworst) {  // outside contraction
            for (std::size_t j = 0; j < n; ++j) xc[j] = centroid[j] + 0.5 * (xr[j] - centroid[j]);
        } else {  // inside contraction
            for (std::size_t j = 0; j < n; ++j) xc[j] = centroid[j] + 0.5 * (xw[j] - centroid[j]);
        }
        const double fk = f(xc);
        ++result.evaluations;
        if (fk < std::min(fr, fworst)) {
            x[idx[n]] = xc;
            fx[idx[n]] = fk;
            continue;
        }

        // Shrink toward the best vertex.
        const std::vector<double> xb = x[idx[0]];
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                x[idx[i]][j] = xb[j] + 0.5 * (x[idx[i]][j] - xb[j]);
            }
            fx[idx[i]] = f(x[idx[i]]);
            ++result.evaluations;
        }
    }

    const auto best = std::min_element(idx.begin(), idx.end(),
                                       [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    result.x = x[*best];
    result.fx = fx[*best];
    return result;
}

}  // namespace polygeo
