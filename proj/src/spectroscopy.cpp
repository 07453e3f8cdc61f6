#include "surftrap/spectroscopy.hpp"

#include <cmath>
#include <vector>

#include "surftrap/regression.hpp"

namespace surftrap {

double field_at_atoms(const TrapConfiguration& cfg, const LandscapeReport& report,
                      double gf_mf_trap, const PhysicalConstants& consts) {
    if (!report.has_trap || !std::isfinite(report.z_min)) {
        throw NoTrap("field_at_atoms requires a trapped landscape");
    }
    if (!(gf_mf_trap > 0.0)) {
        throw DomainError("trapped-state Zeeman factor must be > 0");
    }
    const double dz = report.z_min - cfg.magnet.z0;
    const double wz = cfg.magnet.omega_z;
    return cfg.magnet.b_offset +
           cfg.species.mass * wz * wz * dz * dz / (2.0 * gf_mf_trap * consts.muB);
}

double rf_resonance(double b_field, const Species& species,
                    const PhysicalConstants& consts) {
    if (!(b_field >= 0.0)) {
        throw DomainError("rf_resonance: field must be >= 0");
    }
    return species.gF * species.delta_mF * consts.muB * b_field / consts.planck();
}

RfPoint make_rf_point(double z0, double b_field, double rf_uncertainty,
                      const Species& species, const PhysicalConstants& consts) {
    return RfPoint{z0, b_field, rf_resonance(b_field, species, consts), rf_uncertainty};
}

QuadraticFitResult fit_quadratic_rise(std::span<const RfPoint> points,
                                      const Species& species, double gf_mf_trap,
                                      const PhysicalConstants& consts) {
    if (points.size() < 4) {
        throw InsufficientData("quadratic rise fit needs >= 4 points");
    }
    if (!(gf_mf_trap > 0.0)) {
        throw DomainError("trapped-state Zeeman factor must be > 0");
    }
    std::vector<double> xs, ys, ws;
    xs.reserve(points.size());
    ys.reserve(points.size());
    ws.reserve(points.size());
    bool all_weighted = true;
    const double rf_per_field = species.gF * species.delta_mF * consts.muB / consts.planck();
    for (const auto& p : points) {
        xs.push_back(p.z0);
        ys.push_back(p.b_field);
        if (p.rf_uncertainty > 0.0 && rf_per_field != 0.0) {
            const double sigma_b = p.rf_uncertainty / std::abs(rf_per_field);
            ws.push_back(1.0 / (sigma_b * sigma_b));
        } else {
            all_weighted = false;
        }
    }
    const auto fit = all_weighted
                         ? quadfit_vertex(xs, ys, ws, /*require_positive=*/true)
                         : quadfit_vertex(xs, ys, {}, /*require_positive=*/true);

    const double a = fit.coefficients[0]; // T / m^2
    QuadraticFitResult result;
    result.omega_z = std::sqrt(2.0 * a * gf_mf_trap * consts.muB / species.mass);
    result.z_ref = fit.coefficients[1];
    result.b_offset = fit.coefficients[2];
    result.residual_rms = fit.residual_rms;
    return result;
}

} // namespace surftrap
