#pragma once

#include <optional>

#include "surftrap/errors.hpp"

namespace surftrap {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Fundamental constants, SI units, CODATA-2018 values.
struct PhysicalConstants {
    double hbar = 1.054571817e-34;     // J s
    double c = 299792458.0;            // m/s
    double eps0 = 8.8541878128e-12;    // F/m
    double kB = 1.380649e-23;          // J/K
    double muB = 9.2740100783e-24;     // J/T
    double g_accel = 9.80665;          // m/s^2

    double planck() const { return kTwoPi * hbar; } // h, J s
};

/// Atomic species parameters. Frequencies are angular (rad/s).
struct Species {
    double mass = 0.0;      // kg
    double alpha0 = 0.0;    // F m^2, static polarizability
    double gamma = 0.0;     // rad/s, natural linewidth of the excited state
    double lambda_d1 = 0.0; // m
    double lambda_d2 = 0.0; // m
    double a_scatt = 0.0;   // m, s-wave scattering length
    double gF = 0.0;        // Lande factor of the trapped hyperfine manifold
    int mF = 0;             // magnetic quantum number of the trapped state
    int delta_mF = 0;       // quantum-number change of the RF transition
};

/// Dielectric surface parameters. phi_factor is the Lifshitz correction
/// Phi(eps) for the retarded surface potential. When c4_override is set,
/// compute_c4 returns it verbatim instead of evaluating the formula.
struct SurfaceMaterial {
    double n_index = 0.0;
    double eps_static = 0.0;
    double phi_factor = 0.0;
    std::optional<double> c4_override; // J m^4
};

/// C4 with provenance: formula evaluation or configured override.
struct C4Coefficient {
    double value = 0.0; // J m^4
    bool from_override = false;
};

/// Rb-87 record: polarizability 5.26e-39 F m^2, linewidth 2pi x 6 MHz,
/// D1/D2 at 794.98/780.24 nm, a = 5.31 nm, trapped state F=2, mF=2 with
/// single-quantum RF transitions.
Species rb87_default();

/// Glass prism: n = 1.5, eps(0) = 2.25, Phi = 0.29. Carries the override
/// C4 = 1.78e-55 J m^4 used by the figure presets; clear c4_override to
/// evaluate the dielectric formula instead.
SurfaceMaterial glass_default();

/// C4 = (1/4 pi eps0) * (3 hbar c alpha0 / 8 pi) * (eps-1)/(eps+1) * Phi,
/// or the override when configured.
C4Coefficient compute_c4(const SurfaceMaterial& surface, const Species& species,
                         const PhysicalConstants& consts = PhysicalConstants{});

void validate(const PhysicalConstants& consts);
void validate(const Species& species);
void validate(const SurfaceMaterial& surface);

} // namespace surftrap
