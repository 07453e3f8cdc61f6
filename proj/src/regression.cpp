#include "surftrap/regression.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace surftrap {

namespace {

// Ascending-x evaluation order (ties broken by input index) keeps the
// accumulated sums identical under any input permutation.
std::vector<std::size_t> sorted_order(std::span<const double> xs) {
    std::vector<std::size_t> idx(xs.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    return idx;
}

void check_inputs(std::span<const double> xs, std::span<const double> ys,
                  std::span<const double> weights, std::size_t min_points) {
    if (xs.size() != ys.size()) {
        throw InsufficientData("x and y lengths differ");
    }
    if (!weights.empty() && weights.size() != xs.size()) {
        throw InsufficientData("weight length differs from data length");
    }
    if (xs.size() < min_points) {
        throw InsufficientData("fit needs at least " + std::to_string(min_points) +
                               " points, got " + std::to_string(xs.size()));
    }
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw InsufficientData("weights must be non-negative");
        }
    }
}

double weight_at(std::span<const double> weights, std::size_t i) {
    return weights.empty() ? 1.0 : weights[i];
}

} // namespace

FitDiagnostics linfit(std::span<const double> xs, std::span<const double> ys,
                      std::span<const double> weights) {
    check_inputs(xs, ys, weights, 2);
    const auto order = sorted_order(xs);

    double sw = 0.0, swx = 0.0, swy = 0.0;
    for (std::size_t i : order) {
        const double w = weight_at(weights, i);
        sw += w;
        swx += w * xs[i];
        swy += w * ys[i];
    }
    if (!(sw > 0.0)) {
        throw DegenerateDesign("all weights vanish");
    }
    const double xbar = swx / sw;
    const double ybar = swy / sw;

    // Centered sums for conditioning.
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i : order) {
        const double w = weight_at(weights, i);
        const double dx = xs[i] - xbar;
        sxx += w * dx * dx;
        sxy += w * dx * (ys[i] - ybar);
    }
    if (!(sxx > 0.0)) {
        throw DegenerateDesign("all x values coincide");
    }
    const double slope = sxy / sxx;
    const double intercept = ybar - slope * xbar;

    double ss = 0.0;
    for (std::size_t i : order) {
        const double w = weight_at(weights, i);
        const double r = ys[i] - (intercept + slope * xs[i]);
        ss += w * r * r;
    }
    FitDiagnostics d;
    d.coefficients = {intercept, slope};
    d.residual_rms = std::sqrt(ss / sw);
    d.n_points = xs.size();
    return d;
}

FitDiagnostics quadfit_vertex(std::span<const double> xs, std::span<const double> ys,
                              std::span<const double> weights, bool require_positive) {
    check_inputs(xs, ys, weights, 3);
    const auto order = sorted_order(xs);

    double sw = 0.0, swx = 0.0;
    for (std::size_t i : order) {
        const double w = weight_at(weights, i);
        sw += w;
        swx += w * xs[i];
    }
    if (!(sw > 0.0)) {
        throw DegenerateDesign("all weights vanish");
    }
    const double xbar = swx / sw;

    // Normal equations in the shifted monomial basis {1, u, u^2}, u = x-xbar.
    double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    double rhs[3] = {0, 0, 0};
    for (std::size_t i : order) {
        const double w = weight_at(weights, i);
        const double u = xs[i] - xbar;
        const double u2 = u * u;
        const double basis[3] = {1.0, u, u2};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                m[r][c] += w * basis[r] * basis[c];
            }
            rhs[r] += w * basis[r] * ys[i];
        }
    }

    // Gaussian elimination with partial pivoting, fixed order.
    int perm[3] = {0, 1, 2};
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::abs(m[perm[r]][col]) > std::abs(m[perm[pivot]][col])) pivot = r;
        }
        std::swap(perm[col], perm[pivot]);
        const double diag = m[perm[col]][col];
        if (std::abs(diag) < 1e-300) {
            throw DegenerateDesign("singular quadratic design matrix");
        }
        for (int r = col + 1; r < 3; ++r) {
            const double factor = m[perm[r]][col] / diag;
            for (int c = col; c < 3; ++c) {
                m[perm[r]][c] -= factor * m[perm[col]][c];
            }
            rhs[perm[r]] -= factor * rhs[perm[col]];
        }
    }
    double coef[3];
    for (int col = 2; col >= 0; --col) {
        double v = rhs[perm[col]];
        for (int c = col + 1; c < 3; ++c) {
            v -= m[perm[col]][c] * coef[c];
        }
        coef[col] = v / m[perm[col]][col];
    }

    const double a = coef[2];
    if (require_positive && !(a > 0.0)) {
        throw DegenerateFit("quadratic curvature is not positive");
    }
    double xv, cmin;
    if (a != 0.0) {
        const double uv = -coef[1] / (2.0 * a);
        xv = xbar + uv;
        cmin = coef[0] + coef[1] * uv + a * uv * uv;
    } else {
        xv = xbar;
        cmin = coef[0];
    }

    double ss = 0.0;
    for (std::size_t i : order) {
        const double w = weight_at(weights, i);
        const double u = xs[i] - xbar;
        const double r = ys[i] - (coef[0] + coef[1] * u + coef[2] * u * u);
        ss += w * r * r;
    }
    FitDiagnostics d;
    d.coefficients = {a, xv, cmin};
    d.residual_rms = std::sqrt(ss / sw);
    d.n_points = xs.size();
    return d;
}

} // namespace surftrap
