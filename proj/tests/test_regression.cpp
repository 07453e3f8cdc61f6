#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "surftrap/regression.hpp"

using namespace surftrap;

namespace {

// Independent extended-precision weighted least squares via centered normal
// equations in long double.
void linfit_oracle(const std::vector<double>& xs, const std::vector<double>& ys,
                   const std::vector<double>& ws, long double& intercept,
                   long double& slope) {
    long double sw = 0, swx = 0, swy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const long double w = ws.empty() ? 1.0L : ws[i];
        sw += w;
        swx += w * xs[i];
        swy += w * ys[i];
    }
    const long double xb = swx / sw, yb = swy / sw;
    long double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const long double w = ws.empty() ? 1.0L : ws[i];
        sxx += w * (xs[i] - xb) * (xs[i] - xb);
        sxy += w * (xs[i] - xb) * (ys[i] - yb);
    }
    slope = sxy / sxx;
    intercept = yb - slope * xb;
}

} // namespace

TEST_SUITE_BEGIN("regression");

TEST_CASE("exact line recovered") {
    std::vector<double> xs, ys;
    for (int i = 0; i < 12; ++i) {
        xs.push_back(i);
        ys.push_back(2.0 * i + 1.0);
    }
    const auto fit = linfit(xs, ys);
    CHECK(fit.coefficients[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(fit.coefficients[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fit.residual_rms == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fit.n_points == 12);
}

TEST_CASE("zero-weight point is excluded exactly") {
    std::vector<double> xs = {0, 1, 2, 3, 4};
    std::vector<double> ys = {0, 1, 2, 3, 100.0}; // outlier
    std::vector<double> ws = {1, 1, 1, 1, 0};
    const auto fit = linfit(xs, ys, ws);
    CHECK(fit.coefficients[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fit.coefficients[0] == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("random sets match the extended-precision oracle") {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> xd(-3.0, 7.0);
    std::normal_distribution<double> nd(0.0, 0.3);
    std::uniform_real_distribution<double> wd(0.1, 5.0);
    for (int rep = 0; rep < 25; ++rep) {
        std::vector<double> xs, ys, ws;
        for (int i = 0; i < 100; ++i) {
            const double x = xd(rng);
            xs.push_back(x);
            ys.push_back(-1.7 * x + 0.4 + nd(rng));
            ws.push_back(wd(rng));
        }
        long double i0, s0;
        linfit_oracle(xs, ys, ws, i0, s0);
        const auto fit = linfit(xs, ys, ws);
        CHECK(fit.coefficients[1] ==
              doctest::Approx(static_cast<double>(s0)).epsilon(1e-10));
        CHECK(fit.coefficients[0] ==
              doctest::Approx(static_cast<double>(i0)).epsilon(1e-10));
    }
}

TEST_CASE("permutation invariance is exact") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> xd(-1.0, 1.0);
    std::vector<double> xs, ys;
    for (int i = 0; i < 40; ++i) {
        xs.push_back(xd(rng));
        ys.push_back(std::sin(3.0 * xs.back()));
    }
    const auto ref = linfit(xs, ys);

    std::vector<std::size_t> idx(xs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<double> xs2, ys2;
    for (std::size_t i : idx) {
        xs2.push_back(xs[i]);
        ys2.push_back(ys[i]);
    }
    const auto shuffled = linfit(xs2, ys2);
    CHECK(ref.coefficients[0] == shuffled.coefficients[0]); // bitwise
    CHECK(ref.coefficients[1] == shuffled.coefficients[1]);
}

TEST_CASE("affine x-rescaling transforms coefficients exactly") {
    std::mt19937_64 rng(3141);
    std::uniform_real_distribution<double> xd(0.0, 10.0);
    std::vector<double> xs, ys;
    for (int i = 0; i < 60; ++i) {
        xs.push_back(xd(rng));
        ys.push_back(0.25 * xs.back() - 2.0 + 0.01 * std::cos(xs.back()));
    }
    const double alpha = 3.5, beta = -1.25;
    std::vector<double> xs2;
    for (double x : xs) xs2.push_back(alpha * x + beta);

    const auto f1 = linfit(xs, ys);
    const auto f2 = linfit(xs2, ys);
    // slope' = slope/alpha, intercept' = intercept - slope*beta/alpha
    CHECK(f2.coefficients[1] ==
          doctest::Approx(f1.coefficients[1] / alpha).epsilon(1e-10));
    CHECK(f2.coefficients[0] ==
          doctest::Approx(f1.coefficients[0] - f1.coefficients[1] * beta / alpha)
              .epsilon(1e-10));
}

TEST_CASE("degenerate designs rejected") {
    std::vector<double> xs = {2.0, 2.0, 2.0};
    std::vector<double> ys = {1.0, 2.0, 3.0};
    CHECK_THROWS_AS(linfit(xs, ys), DegenerateDesign);
    CHECK_THROWS_AS(linfit(std::vector<double>{1.0}, std::vector<double>{2.0}),
                    InsufficientData);
}

TEST_CASE("quadratic vertex fit recovers an exact parabola") {
    std::vector<double> xs, ys;
    for (int i = -6; i <= 6; ++i) {
        const double x = 0.5 * i;
        xs.push_back(x);
        ys.push_back(3.0 * (x - 1.25) * (x - 1.25) + 0.75);
    }
    const auto fit = quadfit_vertex(xs, ys);
    CHECK(fit.coefficients[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fit.coefficients[1] == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(fit.coefficients[2] == doctest::Approx(0.75).epsilon(1e-11));
    CHECK(fit.residual_rms == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("flat data flags non-positive curvature") {
    std::vector<double> xs = {0, 1, 2, 3, 4};
    std::vector<double> ys = {2, 2, 2, 2, 2};
    const auto fit = quadfit_vertex(xs, ys);
    CHECK(std::abs(fit.coefficients[0]) < 1e-12);
    CHECK_THROWS_AS(quadfit_vertex(xs, ys, {}, /*require_positive=*/true),
                    DegenerateFit);
}

TEST_CASE("noisy parabola matches extended-precision solution") {
    std::mt19937_64 rng(777);
    std::normal_distribution<double> nd(0.0, 0.05);
    std::vector<double> xs, ys;
    for (int i = 0; i < 80; ++i) {
        const double x = -4.0 + 0.1 * i;
        xs.push_back(x);
        ys.push_back(1.8 * (x - 0.6) * (x - 0.6) - 3.0 + nd(rng));
    }
    // Oracle: solve the 3x3 normal equations in long double, monomial basis.
    long double m[3][3] = {}, rhs[3] = {};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const long double b[3] = {1.0L, xs[i], static_cast<long double>(xs[i]) * xs[i]};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) m[r][c] += b[r] * b[c];
            rhs[r] += b[r] * ys[i];
        }
    }
    for (int col = 0; col < 3; ++col) {
        for (int r = col + 1; r < 3; ++r) {
            const long double f = m[r][col] / m[col][col];
            for (int c = col; c < 3; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    long double coef[3];
    for (int col = 2; col >= 0; --col) {
        long double v = rhs[col];
        for (int c = col + 1; c < 3; ++c) v -= m[col][c] * coef[c];
        coef[col] = v / m[col][col];
    }
    const double a = static_cast<double>(coef[2]);
    const double xv = static_cast<double>(-coef[1] / (2.0L * coef[2]));

    const auto fit = quadfit_vertex(xs, ys);
    CHECK(fit.coefficients[0] == doctest::Approx(a).epsilon(1e-8));
    CHECK(fit.coefficients[1] == doctest::Approx(xv).epsilon(1e-8));
}

TEST_SUITE_END();
