#pragma once

#include <optional>
#include <span>
#include <vector>

#include "surftrap/errors.hpp"

namespace surftrap {

struct FitDiagnostics {
    std::vector<double> coefficients; // model-specific, see each fit
    double residual_rms = 0.0;        // weighted RMS residual
    std::size_t n_points = 0;
};

/// Weighted linear least squares y = c0 + c1 x, closed form.
/// coefficients = {intercept, slope}. Accumulation runs in ascending-x order
/// (ties by input index) so results are bit-reproducible under input
/// permutation. Throws DegenerateDesign when all x coincide.
FitDiagnostics linfit(std::span<const double> xs, std::span<const double> ys,
                      std::span<const double> weights = {});

/// Weighted quadratic fit in vertex form a (x - xv)^2 + c via monomial-basis
/// normal equations. coefficients = {a, xv, c}. With require_positive set,
/// throws DegenerateFit when a <= 0.
FitDiagnostics quadfit_vertex(std::span<const double> xs, std::span<const double> ys,
                              std::span<const double> weights = {},
                              bool require_positive = false);

} // namespace surftrap
