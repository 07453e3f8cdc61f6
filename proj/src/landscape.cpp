#include "surftrap/landscape.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include "surftrap/numeric.hpp"
#include "surftrap/regression.hpp"

namespace surftrap {

namespace {

constexpr double kPositionTol = 5e-11;  // m, refinement tolerance (0.05 nm)
constexpr int kAxisGridPoints = 2400;
constexpr int kCrestGridPoints = 900;
constexpr int kSaddleGridPoints = 151;

struct Extremum {
    double z = 0.0;
    double u = 0.0;
};

struct AxisScan {
    std::optional<Extremum> minimum;  // interior trap minimum (largest-z one)
    std::optional<Extremum> barrier;  // interior maximum surface-side of it
    double u_lo = 0.0;
    double u_hi = 0.0;
};

// Log-spaced scan of f over [lo, hi] plus golden refinement of the trap
// minimum and the barrier crest. The log grid keeps sub-nm resolution at the
// surface while spanning the 100 um magnetic-trap scale.
AxisScan scan_axis(const std::function<double(double)>& f, double lo, double hi,
                   int n_points) {
    const auto grid = numeric::log_grid(lo, hi, n_points);
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        vals[i] = f(grid[i]);
    }

    AxisScan scan;
    scan.u_lo = vals.front();
    scan.u_hi = vals.back();

    std::vector<std::size_t> minima;
    std::vector<std::size_t> maxima;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        if (vals[i] < vals[i - 1] && vals[i] <= vals[i + 1]) minima.push_back(i);
        if (vals[i] > vals[i - 1] && vals[i] >= vals[i + 1]) maxima.push_back(i);
    }

    if (!minima.empty()) {
        // Trap basin is the outermost interior minimum.
        const std::size_t i = minima.back();
        const double z = numeric::golden_min(f, grid[i - 1], grid[i + 1], kPositionTol);
        scan.minimum = Extremum{z, f(z)};
    }
    if (!maxima.empty()) {
        // Barrier crest: the outermost interior maximum on the surface side
        // of the minimum (or of the window when no minimum exists).
        const double z_cap = scan.minimum ? scan.minimum->z
                                          : std::numeric_limits<double>::infinity();
        std::optional<std::size_t> pick;
        for (std::size_t i : maxima) {
            if (grid[i] < z_cap) pick = i;
        }
        if (pick) {
            const std::size_t i = *pick;
            auto neg = [&](double z) { return -f(z); };
            const double z = numeric::golden_min(neg, grid[i - 1], grid[i + 1], kPositionTol);
            scan.barrier = Extremum{z, f(z)};
        }
    }
    return scan;
}

SearchWindow clamp_window(SearchWindow window) {
    window.lo = std::max(window.lo, kZFloor);
    if (!(window.hi > window.lo)) {
        throw DomainError("search window must satisfy z_floor <= lo < hi");
    }
    return window;
}

LandscapeReport report_from_scan(const AxisScan& scan) {
    LandscapeReport report;
    if (scan.minimum) {
        report.has_trap = true;
        report.z_min = scan.minimum->z;
        report.u_min = scan.minimum->u;
    } else {
        report.has_trap = false;
        report.z_min = std::numeric_limits<double>::quiet_NaN();
        report.u_min = std::numeric_limits<double>::quiet_NaN();
    }
    if (scan.barrier) {
        report.z_barrier = scan.barrier->z;
        report.u_barrier = scan.barrier->u;
        if (scan.minimum) {
            report.barrier_height = scan.barrier->u - scan.minimum->u;
        }
    }
    if (scan.minimum) {
        if (report.barrier_height) {
            report.trap_depth = *report.barrier_height;
        } else {
            // Window-limited depth when no crest lies inside the window.
            report.trap_depth = std::min(scan.u_lo, scan.u_hi) - scan.minimum->u;
        }
    }
    return report;
}

} // namespace

LandscapeReport find_minimum_on_axis(const TrapConfiguration& cfg, SearchWindow window) {
    window = clamp_window(window);
    const TrapModel model(cfg);
    auto f = [&](double z) { return model.total_on_axis(z); };
    const AxisScan scan = scan_axis(f, window.lo, window.hi, kAxisGridPoints);
    if (!scan.minimum && !scan.barrier) {
        throw NoStationaryPoint("window [" + std::to_string(window.lo) + ", " +
                                std::to_string(window.hi) +
                                "] holds no interior stationary point");
    }
    return report_from_scan(scan);
}

namespace {

// Barrier-crest energy at transverse offset x (y = 0), or nullopt where the
// ridge has vanished.
std::optional<Extremum> crest_at_offset(const TrapModel& model, double x,
                                        double z_lo, double z_hi) {
    auto f = [&](double z) { return model.total(x, 0.0, z); };
    const AxisScan scan = scan_axis(f, z_lo, z_hi, kCrestGridPoints);
    if (!scan.barrier) return std::nullopt;
    return scan.barrier;
}

} // namespace

std::optional<SaddlePoint> find_saddle_points(const TrapConfiguration& cfg,
                                              SearchWindow x_window,
                                              SearchWindow z_window) {
    z_window = clamp_window(z_window);
    const TrapModel model(cfg);
    const LandscapeReport axis = find_minimum_on_axis(cfg, z_window);
    if (!axis.has_trap || !axis.z_barrier) {
        throw NoSaddle("on-axis landscape has no barrier to escape over");
    }

    // Crest lies between the surface and the basin floor; cap the per-column
    // scan there with margin.
    const double z_hi = std::min(z_window.hi, std::max(axis.z_min, 2e-6));
    const double x_lo = std::max(0.0, x_window.lo);
    const double x_hi = x_window.hi;
    if (!(x_hi > x_lo)) {
        throw DomainError("saddle search window must satisfy 0 <= lo < hi");
    }

    const auto xs = numeric::linear_grid(x_lo, x_hi, kSaddleGridPoints);
    std::vector<std::optional<Extremum>> crest(xs.size());
    std::size_t n_defined = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        crest[i] = crest_at_offset(model, xs[i], z_window.lo, z_hi);
        if (!crest[i]) break; // ridge has folded; larger x has none either
        ++n_defined;
    }
    if (n_defined == 0) {
        throw NoSaddle("barrier ridge not resolvable in the x window");
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < n_defined; ++i) {
        if (crest[i]->u < crest[best]->u) best = i;
    }
    if (best == 0) {
        return std::nullopt; // ridge is lowest on axis: no transverse channel
    }

    double x_saddle;
    if (best + 1 < n_defined) {
        // Interior minimum of the ridge energy: refine.
        auto ridge = [&](double x) {
            const auto c = crest_at_offset(model, x, z_window.lo, z_hi);
            return c ? c->u : std::numeric_limits<double>::infinity();
        };
        x_saddle = numeric::golden_min(ridge, xs[best - 1], xs[best + 1], 1e-8);
    } else {
        // Ridge energy still falling where the ridge ends (or at the window
        // edge): the cheapest crossing is that boundary point.
        x_saddle = xs[best];
    }
    const auto c = crest_at_offset(model, x_saddle, z_window.lo, z_hi);
    if (!c) return std::nullopt;
    return SaddlePoint{x_saddle, c->z, c->u};
}

LandscapeReport with_saddle(const TrapConfiguration& cfg, LandscapeReport report,
                            SearchWindow x_window, SearchWindow z_window) {
    if (!report.has_trap || !report.z_barrier) return report;
    const auto saddle = find_saddle_points(cfg, x_window, z_window);
    if (saddle) {
        report.saddle_x = saddle->x;
        report.saddle_z = saddle->z;
        report.u_saddle = saddle->u;
        report.trap_depth = std::min(report.trap_depth, saddle->u - report.u_min);
    }
    return report;
}

SweepTable sweep_z0(const TrapConfiguration& cfg_base, std::span<const double> z0_list,
                    SearchWindow window, int threads) {
    if (z0_list.empty()) {
        throw DomainError("sweep_z0: z0 list must be non-empty");
    }
    for (std::size_t i = 1; i < z0_list.size(); ++i) {
        if (!(z0_list[i] >= z0_list[i - 1])) {
            throw DomainError("sweep_z0: z0 list must be sorted ascending");
        }
    }

    SweepTable table;
    table.records.resize(z0_list.size());

    auto compute = [&](std::size_t i) {
        SweepRecord rec;
        rec.z0 = z0_list[i];
        TrapConfiguration cfg = cfg_base;
        cfg.magnet.z0 = z0_list[i];
        try {
            rec.report = find_minimum_on_axis(cfg, window);
        } catch (const NoStationaryPoint&) {
            // Trap fully opened: a valid regime, not a failure.
            LandscapeReport open;
            open.has_trap = false;
            open.z_min = std::numeric_limits<double>::quiet_NaN();
            open.u_min = std::numeric_limits<double>::quiet_NaN();
            rec.report = open;
        } catch (const Error& e) {
            rec.error = e.code();
        }
        table.records[i] = std::move(rec);
    };

    const int n_threads = std::max(1, threads);
    if (n_threads == 1 || z0_list.size() < 2) {
        for (std::size_t i = 0; i < z0_list.size(); ++i) compute(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        const std::size_t n = z0_list.size();
        for (int t = 0; t < n_threads; ++t) {
            pool.emplace_back([&]() {
                for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                    compute(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    return table;
}

namespace {

struct SegmentedFit {
    double value_at_break = 0.0; // fitted z_min at the breakpoint
    double slope_left = 0.0;
    double slope_right = 0.0;
    double ss = std::numeric_limits<double>::infinity();
};

// Continuous two-segment least squares with the kink fixed at b:
// y = a + s_left min(x-b, 0) + s_right max(x-b, 0).
SegmentedFit segmented_ls(std::span<const double> xs, std::span<const double> ys,
                          double b) {
    double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    double rhs[3] = {0, 0, 0};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double basis[3] = {1.0, std::min(xs[i] - b, 0.0), std::max(xs[i] - b, 0.0)};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) m[r][c] += basis[r] * basis[c];
            rhs[r] += basis[r] * ys[i];
        }
    }
    int perm[3] = {0, 1, 2};
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::abs(m[perm[r]][col]) > std::abs(m[perm[pivot]][col])) pivot = r;
        }
        std::swap(perm[col], perm[pivot]);
        const double diag = m[perm[col]][col];
        if (std::abs(diag) < 1e-300) return {};
        for (int r = col + 1; r < 3; ++r) {
            const double factor = m[perm[r]][col] / diag;
            for (int c = col; c < 3; ++c) m[perm[r]][c] -= factor * m[perm[col]][c];
            rhs[perm[r]] -= factor * rhs[perm[col]];
        }
    }
    double coef[3];
    for (int col = 2; col >= 0; --col) {
        double v = rhs[perm[col]];
        for (int c = col + 1; c < 3; ++c) v -= m[perm[col]][c] * coef[c];
        coef[col] = v / m[perm[col]][col];
    }
    SegmentedFit fit;
    fit.value_at_break = coef[0];
    fit.slope_left = coef[1];
    fit.slope_right = coef[2];
    fit.ss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double pred = coef[0] + coef[1] * std::min(xs[i] - b, 0.0) +
                            coef[2] * std::max(xs[i] - b, 0.0);
        const double r = ys[i] - pred;
        fit.ss += r * r;
    }
    return fit;
}

} // namespace

RegimeFit fit_two_regimes(const SweepTable& table) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& rec : table.records) {
        if (rec.report && rec.report->has_trap && std::isfinite(rec.report->z_min)) {
            xs.push_back(rec.z0);
            ys.push_back(rec.report->z_min);
        }
    }
    const std::size_t n = xs.size();
    if (n < 8) {
        throw InsufficientData("two-regime fit needs >= 4 trapped points per regime");
    }

    // Exhaustive breakpoint scan over the sweep points, leaving at least four
    // points on each side; tie-break toward the smaller |z0|.
    double best_ss = std::numeric_limits<double>::infinity();
    double best_b = 0.0;
    SegmentedFit best;
    for (std::size_t k = 3; k + 4 <= n; ++k) {
        const double b = xs[k];
        const SegmentedFit fit = segmented_ls(xs, ys, b);
        const bool better = fit.ss < best_ss ||
                            (fit.ss == best_ss && std::abs(b) < std::abs(best_b));
        if (better) {
            best_ss = fit.ss;
            best_b = b;
            best = fit;
        }
    }

    RegimeFit fit;
    fit.slope_ii = best.slope_left;
    fit.slope_i = best.slope_right;
    // y = slope x + intercept form on each side of the kink.
    fit.intercept_ii = best.value_at_break - best.slope_left * best_b;
    fit.intercept_i = best.value_at_break - best.slope_right * best_b;
    fit.breakpoint_z0 = best_b;
    fit.residual_rms = std::sqrt(best_ss / n);
    return fit;
}

} // namespace surftrap
