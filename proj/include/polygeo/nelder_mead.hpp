#pragma once

#include <functional>
#include <vector>

namespace polygeo {

struct SimplexResult {
    std::vector<double> x;
    double fx = 0.0;
    int iterations = 0;
    int evaluations = 0;
};

/// Plain Nelder-Mead minimization (reflection 1, expansion 2, contraction 0.5,
/// shrink 0.5). Deterministic; suited to piecewise-smooth objectives where
/// gradients are unreliable. dim == 0 degenerates to a single evaluation.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> x0, double step, int max_iter,
                          double ftol = 1e-12, double xtol = 1e-10);

}  // namespace polygeo
