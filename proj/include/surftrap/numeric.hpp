#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <vector>

namespace surftrap::numeric {

/// Golden-section minimum of f on [a, b] to absolute x tolerance xtol.
/// Assumes a single interior minimum in the bracket.
double golden_min(const std::function<double(double)>& f, double a, double b,
                  double xtol);

/// Bisection root of f on [a, b]; f(a), f(b) must differ in sign.
double bisect_root(const std::function<double(double)>& f, double a, double b,
                   double xtol);

/// Brent root of f on a sign-changing bracket [a, b].
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double xtol, int max_iter = 200);

/// Gauss-Legendre nodes/weights on [-1, 1]; cached per order.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

/// Integral of f over [a, b] with a fixed-order Gauss-Legendre rule.
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int order);

/// Tanh-sinh (double-exponential) quadrature on (a, b). Robust against
/// integrable endpoint singularities such as the sqrt turning points of the
/// tunneling action.
double integrate_tanh_sinh(const std::function<double(double)>& f, double a,
                           double b, double rel_tol = 1e-10);

/// Log-spaced grid from a to b inclusive (a, b > 0).
std::vector<double> log_grid(double a, double b, int n);

/// Linear grid from a to b inclusive.
std::vector<double> linear_grid(double a, double b, int n);

} // namespace surftrap::numeric
