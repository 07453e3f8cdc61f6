#include "surftrap/potential.hpp"

#include <cmath>

namespace surftrap {

namespace {

double critical_check(const EvanescentBeam& beam, const SurfaceMaterial& surface) {
    const double ns = surface.n_index * std::sin(beam.angle);
    if (!(ns > 1.0)) {
        throw SubcriticalAngle("n sin(theta) = " + std::to_string(ns) +
                               " <= 1: no total internal reflection");
    }
    return ns;
}

} // namespace

double penetration_depth(const EvanescentBeam& beam, const SurfaceMaterial& surface) {
    const double ns = critical_check(beam, surface);
    const double k = kTwoPi / beam.wavelength;
    return 1.0 / (k * std::sqrt(ns * ns - 1.0));
}

double mean_detuning(const EvanescentBeam& beam, const Species& species,
                     DetuningAverage average, const PhysicalConstants& consts) {
    const double two_pi_c = kTwoPi * consts.c;
    const double d1 = two_pi_c * (1.0 / beam.wavelength - 1.0 / species.lambda_d1);
    const double d2 = two_pi_c * (1.0 / beam.wavelength - 1.0 / species.lambda_d2);
    if (d1 == 0.0 || d2 == 0.0) {
        throw ZeroDetuning("laser wavelength coincides with a D line");
    }
    if (average == DetuningAverage::LineStrength) {
        // 2/3 D2 + 1/3 D1 combined on inverse detunings.
        const double inv = (2.0 / 3.0) / d2 + (1.0 / 3.0) / d1;
        if (inv == 0.0) {
            throw ZeroDetuning("line-strength-weighted detuning vanishes");
        }
        return 1.0 / inv;
    }
    return 0.5 * (d1 + d2);
}

double intensity_enhancement(const EvanescentBeam& beam, const SurfaceMaterial& surface) {
    if (beam.enhancement_override) {
        return *beam.enhancement_override;
    }
    const double ns = critical_check(beam, surface);
    const double n2 = surface.n_index * surface.n_index;
    const double cos2 = std::cos(beam.angle) * std::cos(beam.angle);
    const double sin2 = ns * ns / n2; // sin^2 theta
    const double te = 4.0 * n2 * cos2 / (n2 - 1.0);
    if (beam.polarization == Polarization::TE) {
        return te;
    }
    return te * (2.0 * n2 * sin2 - 1.0) / ((n2 + 1.0) * sin2 - 1.0);
}

double peak_intensity(const EvanescentBeam& beam, const SurfaceMaterial& surface) {
    const double t = intensity_enhancement(beam, surface);
    return t * 2.0 * beam.power / (kPi * beam.waist_x * beam.waist_y);
}

double dipole_u0(const EvanescentBeam& beam, const Species& species,
                 const SurfaceMaterial& surface, const PhysicalConstants& consts) {
    const double i_ev = peak_intensity(beam, surface);
    const double delta = mean_detuning(beam, species, DetuningAverage::Arithmetic, consts);
    const double omega = kTwoPi * consts.c / beam.wavelength;
    return kPi * consts.c * consts.c * species.gamma / (2.0 * omega * omega * omega) *
           i_ev / delta;
}

double u_cp(double z, double c4) {
    if (!(z >= kZFloor)) {
        throw DomainError("u_cp: z below the 1 nm floor of the retarded formula");
    }
    const double z2 = z * z;
    return -c4 / (z2 * z2);
}

double u_ew(const Point3& p, const TrapConfiguration& cfg) {
    if (!cfg.ew_enabled) return 0.0;
    if (!(p.z >= 0.0)) {
        throw DomainError("u_ew: z must be >= 0");
    }
    return TrapModel(cfg).ew(p.x, p.y, p.z);
}

double u_magnetic(const Point3& p, const TrapConfiguration& cfg) {
    const MagneticTrap& t = cfg.magnet;
    const double dz = p.z - t.z0;
    return 0.5 * cfg.species.mass *
           (t.omega_x * t.omega_x * p.x * p.x + t.omega_y * t.omega_y * p.y * p.y +
            t.omega_z * t.omega_z * dz * dz);
}

double u_gravity(double z, const TrapConfiguration& cfg) {
    return cfg.gravity_sign * cfg.species.mass * PhysicalConstants{}.g_accel * z;
}

double u_total(const Point3& p, const TrapConfiguration& cfg) {
    return TrapModel(cfg).total(p.x, p.y, p.z);
}

TrapModel::TrapModel(const TrapConfiguration& cfg, const PhysicalConstants& consts)
    : consts_(consts) {
    c4_ = compute_c4(cfg.surface, cfg.species, consts).value;
    mass_ = cfg.species.mass;
    omega_x_ = cfg.magnet.omega_x;
    omega_y_ = cfg.magnet.omega_y;
    omega_z_ = cfg.magnet.omega_z;
    z0_ = cfg.magnet.z0;
    waist_x_ = cfg.beam.waist_x;
    waist_y_ = cfg.beam.waist_y;
    mg_signed_ = cfg.gravity_sign * mass_ * consts.g_accel;
    sag_ = omega_z_ > 0.0 ? consts.g_accel / (omega_z_ * omega_z_) : 0.0;
    ew_on_ = cfg.ew_enabled;
    if (ew_on_) {
        lambda_p_ = penetration_depth(cfg.beam, cfg.surface);
        inv_lambda_p_ = 1.0 / lambda_p_;
        u0_ = dipole_u0(cfg.beam, cfg.species, cfg.surface, consts);
        inv_wx2_ = 2.0 / (waist_x_ * waist_x_);
        inv_wy2_ = 2.0 / (waist_y_ * waist_y_);
    } else {
        lambda_p_ = 1.0;
        inv_lambda_p_ = 0.0;
        u0_ = 0.0;
        inv_wx2_ = 0.0;
        inv_wy2_ = 0.0;
    }
}

double TrapModel::cp(double z) const {
    if (!(z >= kZFloor)) {
        throw DomainError("potential: z below the 1 nm floor");
    }
    const double z2 = z * z;
    return -c4_ / (z2 * z2);
}

double TrapModel::ew(double x, double y, double z) const {
    if (!ew_on_) return 0.0;
    return u0_ * std::exp(-z * inv_lambda_p_ - x * x * inv_wx2_ - y * y * inv_wy2_);
}

double TrapModel::magnetic(double x, double y, double z) const {
    const double dz = z - z0_;
    return 0.5 * mass_ *
           (omega_x_ * omega_x_ * x * x + omega_y_ * omega_y_ * y * y +
            omega_z_ * omega_z_ * dz * dz);
}

double TrapModel::gravity(double z) const { return mg_signed_ * z; }

double TrapModel::total(double x, double y, double z) const {
    return cp(z) + ew(x, y, z) + magnetic(x, y, z) + gravity(z);
}

void TrapModel::gradient(double x, double y, double z, double grad[3]) const {
    const double z2 = z * z;
    const double dcp = 4.0 * c4_ / (z2 * z2 * z);
    const double ew_val = ew(x, y, z);
    const double dz = z - z0_;
    grad[0] = -2.0 * x * inv_wx2_ * ew_val + mass_ * omega_x_ * omega_x_ * x;
    grad[1] = -2.0 * y * inv_wy2_ * ew_val + mass_ * omega_y_ * omega_y_ * y;
    grad[2] = dcp - inv_lambda_p_ * ew_val + mass_ * omega_z_ * omega_z_ * dz + mg_signed_;
}

} // namespace surftrap
