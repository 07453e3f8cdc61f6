#pragma once

#include <span>
#include <vector>

#include "surftrap/landscape.hpp"

namespace surftrap {

/// Zeeman factor gF*mF of the trapped state. The default (F=2, mF=2) gives 1
/// and is distinct from the RF-transition factor gF*delta_mF.
inline constexpr double kDefaultTrapZeeman = 1.0;

/// Field at the trap bottom:
/// B_A = b_offset + m wz^2 (z_min - z0)^2 / (2 gF mF muB), the field whose
/// Zeeman energy reproduces the harmonic potential at z_min relative to the
/// magnetic minimum. Constant in the tracking regime (sag term only), rising
/// quadratically once z_min is pinned at the surface barrier.
double field_at_atoms(const TrapConfiguration& cfg, const LandscapeReport& report,
                      double gf_mf_trap = kDefaultTrapZeeman,
                      const PhysicalConstants& consts = PhysicalConstants{});

/// RF transition frequency gF dmF muB B / h in Hz.
double rf_resonance(double b_field, const Species& species,
                    const PhysicalConstants& consts = PhysicalConstants{});

struct RfPoint {
    double z0 = 0.0;             // m
    double b_field = 0.0;        // T
    double rf_freq = 0.0;        // Hz
    double rf_uncertainty = 0.0; // Hz
};

/// RfPoint with rf_freq locked to the field by the transition relation.
RfPoint make_rf_point(double z0, double b_field, double rf_uncertainty,
                      const Species& species,
                      const PhysicalConstants& consts = PhysicalConstants{});

struct QuadraticFitResult {
    double omega_z = 0.0;      // rad/s
    double b_offset = 0.0;     // T
    double z_ref = 0.0;        // m, vertex position
    double residual_rms = 0.0; // T
};

/// Weighted least-squares parabola B(z0) = b_offset +
/// m wz^2 (z_ref - z0)^2 / (2 gF mF muB); weights from rf_uncertainty.
/// Throws InsufficientData below four points and DegenerateFit when the
/// recovered curvature is not positive.
QuadraticFitResult fit_quadratic_rise(std::span<const RfPoint> points,
                                      const Species& species,
                                      double gf_mf_trap = kDefaultTrapZeeman,
                                      const PhysicalConstants& consts = PhysicalConstants{});

} // namespace surftrap
