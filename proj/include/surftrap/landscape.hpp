#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "surftrap/potential.hpp"

namespace surftrap {

/// Stationary-point characterization of one on-axis landscape. Positions are
/// resolved to 0.1 nm or better. When has_trap is false no interior minimum
/// exists and z_min/u_min are NaN. The barrier, when present, sits on the
/// surface side of the minimum (z_barrier < z_min).
struct LandscapeReport {
    double z_min = 0.0; // m
    double u_min = 0.0; // J
    std::optional<double> z_barrier;       // m
    std::optional<double> u_barrier;       // J
    std::optional<double> barrier_height;  // J, u_barrier - u_min
    std::optional<double> saddle_x;        // m, positive representative
    std::optional<double> saddle_z;        // m
    std::optional<double> u_saddle;        // J
    double trap_depth = 0.0; // J, min of barrier height and saddle-limited depth
    bool has_trap = false;
};

struct SearchWindow {
    double lo = 0.0;
    double hi = 0.0;
};

inline constexpr SearchWindow kDefaultZWindow{kZFloor, 120e-6};
inline constexpr SearchWindow kDefaultXWindow{0.0, 250e-6};

/// Locates the on-axis trap minimum and the surface-side barrier inside the
/// window by a log-spaced scan plus golden-section refinement. trap_depth is
/// barrier-limited when a barrier exists, else limited by the window edges.
/// Throws NoStationaryPoint when the window holds no interior stationary
/// point at all.
LandscapeReport find_minimum_on_axis(const TrapConfiguration& cfg,
                                     SearchWindow window = kDefaultZWindow);

/// Transverse escape saddle of the barrier ridge.
struct SaddlePoint {
    double x = 0.0; // m, positive representative of the +/- pair
    double z = 0.0; // m
    double u = 0.0; // J
};

/// Tracks the barrier-crest energy E(x) at transverse offsets x >= 0 and
/// returns the interior minimum of E, the lowest crossing of the ridge.
/// Returns nullopt when E is minimal on axis (no transverse escape channel);
/// throws NoBarrier-> NoSaddle when the on-axis landscape has no barrier.
std::optional<SaddlePoint> find_saddle_points(const TrapConfiguration& cfg,
                                              SearchWindow x_window = kDefaultXWindow,
                                              SearchWindow z_window = kDefaultZWindow);

/// Applies the saddle reduction to a report: trap_depth becomes
/// min(barrier height, u_saddle - u_min).
LandscapeReport with_saddle(const TrapConfiguration& cfg, LandscapeReport report,
                            SearchWindow x_window = kDefaultXWindow,
                            SearchWindow z_window = kDefaultZWindow);

struct SweepRecord {
    double z0 = 0.0; // m
    std::optional<LandscapeReport> report;
    std::string error; // empty on success; in-row error code otherwise
};

struct SweepTable {
    std::vector<SweepRecord> records;
};

/// One record per z0, cfg otherwise fixed; input order preserved. Rows where
/// the landscape is monotone (trap fully opened) carry a trap-less report;
/// genuine per-record failures land in the error field. Records are
/// independent and computed on `threads` workers when threads > 1.
SweepTable sweep_z0(const TrapConfiguration& cfg_base, std::span<const double> z0_list,
                    SearchWindow window = kDefaultZWindow, int threads = 1);

/// Two-regime description of z_min(z0): the tracking branch (slope near 1)
/// and the surface-pinned branch (slope near 0).
struct RegimeFit {
    double slope_i = 0.0;
    double intercept_i = 0.0;  // m
    double slope_ii = 0.0;
    double intercept_ii = 0.0; // m
    double breakpoint_z0 = 0.0; // m
    double residual_rms = 0.0;  // m
};

/// Piecewise-linear least squares with a single breakpoint chosen by
/// exhaustive scan over split positions (deterministic tie-break toward the
/// smaller |z0|). Regime (i) is the large-z0 side. Requires at least four
/// trapped records on each side.
RegimeFit fit_two_regimes(const SweepTable& table);

} // namespace surftrap
