#pragma once

#include <optional>

#include "surftrap/constants.hpp"

namespace surftrap {

enum class Polarization { TE, TM };

/// Blue-detuned beam undergoing total internal reflection at the prism.
struct EvanescentBeam {
    double wavelength = 0.0; // m
    double power = 0.0;      // W
    double angle = 0.0;      // rad, incidence angle at the prism face
    double waist_x = 0.0;    // m
    double waist_y = 0.0;    // m
    Polarization polarization = Polarization::TE;
    std::optional<double> enhancement_override; // replaces the Fresnel factor
};

/// Harmonic magnetic trap with minimum at (0, 0, z0). z0 < 0 places the
/// minimum behind the surface.
struct MagneticTrap {
    double omega_x = 0.0; // rad/s
    double omega_y = 0.0; // rad/s
    double omega_z = 0.0; // rad/s
    double z0 = 0.0;      // m, signed
    double b_offset = 0.0; // T, field at the magnetic minimum
};

/// Full parameter set for one potential landscape. z is measured from the
/// prism surface into vacuum; the prism hangs upside down, so gravity pulls
/// along +z and enters with gravity_sign = -1.
struct TrapConfiguration {
    Species species;
    SurfaceMaterial surface;
    EvanescentBeam beam;
    MagneticTrap magnet;
    double gravity_sign = -1.0;
    bool ew_enabled = true;
};

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0; // m, z > 0 is the vacuum side
};

/// The retarded surface formula diverges at contact; evaluations below this
/// distance are rejected.
inline constexpr double kZFloor = 1e-9; // m

enum class DetuningAverage { Arithmetic, LineStrength };

// Derived beam quantities -------------------------------------------------

/// 1/e decay length of the evanescent intensity envelope,
/// lambda_p = 1 / (k sqrt(n^2 sin^2 theta - 1)). Throws SubcriticalAngle
/// when n sin(theta) <= 1.
double penetration_depth(const EvanescentBeam& beam, const SurfaceMaterial& surface);

/// Mean of the angular detunings from the D1 and D2 lines; positive for blue
/// detuning. LineStrength averages 2/3 D2 + 1/3 D1 on inverse detunings.
double mean_detuning(const EvanescentBeam& beam, const Species& species,
                     DetuningAverage average = DetuningAverage::Arithmetic,
                     const PhysicalConstants& consts = PhysicalConstants{});

/// Intensity enhancement of the evanescent field over the incident beam:
/// the polarization-resolved Fresnel factor, or the configured override.
double intensity_enhancement(const EvanescentBeam& beam, const SurfaceMaterial& surface);

/// Peak evanescent intensity I_ev = T * 2P / (pi wx wy).
double peak_intensity(const EvanescentBeam& beam, const SurfaceMaterial& surface);

/// Barrier peak U0 = (pi c^2 Gamma / 2 omega^3) * I_ev / Delta.
double dipole_u0(const EvanescentBeam& beam, const Species& species,
                 const SurfaceMaterial& surface,
                 const PhysicalConstants& consts = PhysicalConstants{});

// Potential terms, all in Joules ------------------------------------------

/// Retarded surface potential -C4/z^4. Throws DomainError below kZFloor.
double u_cp(double z, double c4);

/// U0 exp(-z/lambda_p - 2x^2/wx^2 - 2y^2/wy^2); zero when the beam is off.
double u_ew(const Point3& p, const TrapConfiguration& cfg);

/// m/2 (wx^2 x^2 + wy^2 y^2 + wz^2 (z-z0)^2).
double u_magnetic(const Point3& p, const TrapConfiguration& cfg);

/// gravity_sign * m g z.
double u_gravity(double z, const TrapConfiguration& cfg);

/// Four-term sum, evaluated in the fixed order CP + EW + magnetic + gravity.
double u_total(const Point3& p, const TrapConfiguration& cfg);

/// Precompiled evaluator for hot loops. Folds every configuration-derived
/// coefficient (C4, U0, decay constants) so a point evaluation is a handful
/// of flops; all landscape scans and quadratures run on this.
class TrapModel {
public:
    explicit TrapModel(const TrapConfiguration& cfg,
                       const PhysicalConstants& consts = PhysicalConstants{});

    double cp(double z) const;
    double ew(double x, double y, double z) const;
    double magnetic(double x, double y, double z) const;
    double gravity(double z) const;
    double total(double x, double y, double z) const;
    double total_on_axis(double z) const { return total(0.0, 0.0, z); }

    /// Analytic gradient of the total potential.
    void gradient(double x, double y, double z, double grad[3]) const;

    double c4() const { return c4_; }
    double u0() const { return u0_; }
    double lambda_p() const { return lambda_p_; }
    double mass() const { return mass_; }
    double omega_x() const { return omega_x_; }
    double omega_y() const { return omega_y_; }
    double omega_z() const { return omega_z_; }
    double z0() const { return z0_; }
    double waist_x() const { return waist_x_; }
    double waist_y() const { return waist_y_; }
    /// Gravitational sag g/omega_z^2 of the bare magnetic trap.
    double sag() const { return sag_; }
    bool ew_enabled() const { return ew_on_; }
    const PhysicalConstants& constants() const { return consts_; }

private:
    PhysicalConstants consts_;
    double c4_ = 0.0;
    double u0_ = 0.0;        // 0 when the beam is disabled
    double lambda_p_ = 0.0;  // m; 1 when beam disabled (unused)
    double inv_lambda_p_ = 0.0;
    double inv_wx2_ = 0.0;   // 2/wx^2
    double inv_wy2_ = 0.0;   // 2/wy^2
    double mass_ = 0.0;
    double omega_x_ = 0.0, omega_y_ = 0.0, omega_z_ = 0.0;
    double z0_ = 0.0;
    double waist_x_ = 0.0, waist_y_ = 0.0;
    double mg_signed_ = 0.0; // gravity_sign * m * g
    double sag_ = 0.0;
    bool ew_on_ = false;
};

} // namespace surftrap
