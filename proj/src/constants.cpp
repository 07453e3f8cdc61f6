#include "surftrap/constants.hpp"

#include <cmath>

namespace surftrap {

Species rb87_default() {
    Species s;
    s.mass = 1.44316e-25;        // kg, 86.909 u
    s.alpha0 = 5.26e-39;         // F m^2
    s.gamma = kTwoPi * 6.0e6;    // rad/s, 5P linewidth
    s.lambda_d1 = 794.98e-9;     // m
    s.lambda_d2 = 780.24e-9;     // m
    s.a_scatt = 5.31e-9;         // m, ~100.4 Bohr radii
    s.gF = 0.5;                  // F=2 manifold
    s.mF = 2;
    s.delta_mF = 1;
    return s;
}

SurfaceMaterial glass_default() {
    SurfaceMaterial m;
    m.n_index = 1.5;
    m.eps_static = 2.25;
    m.phi_factor = 0.29;
    m.c4_override = 1.78e-55; // J m^4, figure-preset value
    return m;
}

C4Coefficient compute_c4(const SurfaceMaterial& surface, const Species& species,
                         const PhysicalConstants& consts) {
    if (surface.c4_override) {
        return {*surface.c4_override, true};
    }
    const double coulomb = 1.0 / (4.0 * kPi * consts.eps0);
    const double dipole = 3.0 * consts.hbar * consts.c * species.alpha0 / (8.0 * kPi);
    const double dielectric =
        (surface.eps_static - 1.0) / (surface.eps_static + 1.0) * surface.phi_factor;
    return {coulomb * dipole * dielectric, false};
}

void validate(const PhysicalConstants& consts) {
    if (!(consts.hbar > 0.0 && consts.c > 0.0 && consts.eps0 > 0.0 &&
          consts.kB > 0.0 && consts.muB > 0.0 && consts.g_accel > 0.0)) {
        throw ValidationError("physical constants must be strictly positive");
    }
}

void validate(const Species& species) {
    if (!(species.mass > 0.0)) {
        throw ValidationError("species.mass must be > 0");
    }
    if (!(species.alpha0 > 0.0)) {
        throw ValidationError("species.alpha0 must be > 0");
    }
    if (!(species.gamma > 0.0)) {
        throw ValidationError("species.gamma must be > 0");
    }
    if (!(species.lambda_d1 > species.lambda_d2)) {
        throw ValidationError("species.lambda_d1 must exceed lambda_d2 (D-line ordering)");
    }
    if (!(species.lambda_d2 > 0.0)) {
        throw ValidationError("species.lambda_d2 must be > 0");
    }
    if (!(species.a_scatt > 0.0)) {
        throw ValidationError("species.a_scatt must be > 0");
    }
}

void validate(const SurfaceMaterial& surface) {
    if (!(surface.n_index > 1.0)) {
        throw ValidationError("surface.n_index must be > 1");
    }
    if (!(surface.eps_static > 1.0)) {
        throw ValidationError("surface.eps_static must be > 1");
    }
    if (!(surface.phi_factor > 0.0 && surface.phi_factor < 1.0)) {
        throw ValidationError("surface.phi_factor must lie in (0, 1)");
    }
    if (surface.c4_override && !(*surface.c4_override >= 0.0)) {
        throw ValidationError("surface.c4_override must be >= 0");
    }
}

} // namespace surftrap
