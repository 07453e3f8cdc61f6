#include "surftrap/numeric.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace surftrap::numeric {

double golden_min(const std::function<double(double)>& f, double a, double b,
                  double xtol) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > xtol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

double bisect_root(const std::function<double(double)>& f, double a, double b,
                   double xtol) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) {
        throw std::invalid_argument("bisect_root: endpoints do not bracket a root");
    }
    while (b - a > xtol) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

double brent_root(const std::function<double(double)>& f, double a, double b,
                  double xtol, int max_iter) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) {
        throw std::invalid_argument("brent_root: endpoints do not bracket a root");
    }
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol = 2.0 * 2.220446049250313e-16 * std::abs(b) + 0.5 * xtol;
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || fb == 0.0) return b;
        if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
            d = m; e = m;
        } else {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q; else p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
                e = d; d = p / q;
            } else {
                d = m; e = m;
            }
        }
        a = b; fa = fb;
        b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa;
            d = b - a; e = d;
        }
    }
    return b;
}

namespace {

GaussRule make_gauss_rule(int order) {
    // Newton iteration on Legendre polynomials; standard Golub-Welsch-free
    // construction, deterministic.
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(3.14159265358979323846 * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

} // namespace

const GaussRule& gauss_legendre(int order) {
    static std::mutex mtx;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) {
        it = cache.emplace(order, make_gauss_rule(order)).first;
    }
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int order) {
    const GaussRule& rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < order; ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return half * sum;
}

double integrate_tanh_sinh(const std::function<double(double)>& f, double a,
                           double b, double rel_tol) {
    // Nodes x = mid + half*tanh(pi/2 sinh(t)); levels halve the step until
    // the estimate stabilizes. Integrand is never evaluated at the
    // endpoints, which absorbs sqrt-type edge singularities.
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    if (half == 0.0) return 0.0;
    const double t_max = 3.8;
    auto eval_point = [&](double t) {
        const double sh = std::sinh(t);
        const double ch = std::cosh(t);
        const double u = 1.5707963267948966 * sh;
        const double x = mid + half * std::tanh(u);
        const double sech = 1.0 / std::cosh(u);
        const double w = 1.5707963267948966 * ch * sech * sech;
        if (x <= a || x >= b || w == 0.0) return 0.0;
        return w * f(x);
    };
    double h = 1.0;
    double sum = eval_point(0.0);
    for (double t = h; t <= t_max; t += h) {
        sum += eval_point(t) + eval_point(-t);
    }
    double integral = half * h * sum;
    for (int level = 1; level <= 10; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= t_max; t += 2.0 * h) {
            add += eval_point(t) + eval_point(-t);
        }
        sum += add;
        const double next = half * h * sum;
        const double change = std::abs(next - integral);
        integral = next;
        if (level >= 3 && change <= rel_tol * std::abs(integral)) break;
    }
    return integral;
}

std::vector<double> log_grid(double a, double b, int n) {
    if (!(a > 0.0 && b > a) || n < 2) {
        throw std::invalid_argument("log_grid: requires 0 < a < b and n >= 2");
    }
    std::vector<double> g(n);
    const double la = std::log(a);
    const double lb = std::log(b);
    for (int i = 0; i < n; ++i) {
        g[i] = std::exp(la + (lb - la) * i / (n - 1));
    }
    g.front() = a;
    g.back() = b;
    return g;
}

std::vector<double> linear_grid(double a, double b, int n) {
    if (n < 1) throw std::invalid_argument("linear_grid: n >= 1");
    std::vector<double> g(n);
    if (n == 1) {
        g[0] = a;
        return g;
    }
    for (int i = 0; i < n; ++i) {
        g[i] = a + (b - a) * i / (n - 1);
    }
    g.back() = b;
    return g;
}

} // namespace surftrap::numeric
