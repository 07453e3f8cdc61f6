#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "surftrap/condensate.hpp"
#include "surftrap/landscape.hpp"

namespace surftrap {

enum class RampShape {
    PaperSinSquared,    // z0(t) = start + (end-start) sin^2(pi t / tau); back at start at t = tau
    MonotoneHalfPeriod, // z0(t) = start + (end-start) sin^2(pi t / 2 tau); monotone start -> end
};

struct RampSpec {
    double z0_start = 0.0;   // m
    double z0_end = 0.0;     // m
    double tau = 0.0;        // s, approach duration
    double hold = 0.0;       // s, dwell at z0_end (monotone shape only)
    double return_time = 0.0; // s, withdrawal duration
    RampShape shape = RampShape::MonotoneHalfPeriod;
};

/// Magnetic-minimum position at time t in [0, tau].
double ramp_position(double t, const RampSpec& ramp);

/// Fraction of the Thomas-Fermi energy distribution above the trap depth D:
/// 0 when mu <= D, 1 - N(D)/N(mu) otherwise, 1 when the trap is open.
double evaporation_fraction(const TrapConfiguration& cfg, const LandscapeReport& report,
                            double mu, const TFOptions& options = TFOptions{});

/// Semiclassical transmission through a 1D barrier profile u(z):
/// T = exp(-2 Integral sqrt(2m(u-E))/hbar dz) over the classically forbidden
/// interval inside [z_lo, z_hi]. The interval endpoints are located by
/// bisection between the crest and the bracket edges.
double wkb_transmission_1d(const std::function<double(double)>& u, double mass,
                           double energy, double z_lo, double z_hi,
                           const PhysicalConstants& consts = PhysicalConstants{});

/// Transmission through the on-axis barrier of the configured landscape at
/// the given total energy. Throws NoBarrier without a barrier, AboveBarrier
/// for energy >= u_barrier and DomainError for energy < u_min.
double wkb_transmission(const TrapConfiguration& cfg, double energy,
                        SearchWindow window = kDefaultZWindow);

struct SurvivalRecord {
    double z0 = 0.0;          // m
    double fraction = 1.0;    // clamp(1 - evap_loss - tunnel_loss, 0, 1)
    double evap_loss = 0.0;
    double tunnel_loss = 0.0;
    std::string error;        // empty on success
};

/// Survival after one approach/hold/return cycle per target z0. Evaporation
/// is evaluated at closest approach; tunneling accumulates as
/// 1 - exp(-attempt_rate T t_exposure) with t_exposure the time the ramp
/// spends in the surface-pinned regime. Records are independent; per-record
/// failures land in the error field.
std::vector<SurvivalRecord> survival_curve(const TrapConfiguration& cfg_base,
                                           const RampSpec& ramp, double n_atoms,
                                           std::span<const double> z0_list,
                                           double attempt_rate,
                                           SearchWindow window = kDefaultZWindow,
                                           SearchWindow x_window = kDefaultXWindow,
                                           int threads = 1,
                                           const TFOptions& tf_options = TFOptions{});

} // namespace surftrap
