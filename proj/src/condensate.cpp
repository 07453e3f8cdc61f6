#include "surftrap/condensate.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "surftrap/numeric.hpp"

namespace surftrap {

double g_interaction(const Species& species, const PhysicalConstants& consts) {
    return 4.0 * kPi * consts.hbar * consts.hbar * species.a_scatt / species.mass;
}

double tf_mu_harmonic(double omega_bar, double n_atoms, const Species& species,
                      const PhysicalConstants& consts) {
    if (n_atoms <= 0.0) return 0.0;
    const double abar = std::sqrt(consts.hbar / (species.mass * omega_bar));
    return 0.5 * consts.hbar * omega_bar *
           std::pow(15.0 * n_atoms * species.a_scatt / abar, 0.4);
}

namespace {

// Basin-restricted Thomas-Fermi number integral. The basin is the connected
// region around (0, 0, z_min) below the barrier crest; columns clip at the
// crest position and the transverse extent clips at the saddle when the trial
// mu reaches those energies (spill).
class TFSolver {
public:
    TFSolver(const TrapConfiguration& cfg, const LandscapeReport& report,
             const TFOptions& options)
        : model_(cfg), report_(report), options_(options) {
        if (!report.has_trap || !std::isfinite(report.z_min)) {
            throw NoTrap("Thomas-Fermi solver needs a trapped landscape");
        }
        g_int_ = g_interaction(cfg.species);
        z_guard_ = report.z_barrier ? *report.z_barrier : kZFloor;
        cap_u_ = std::numeric_limits<double>::infinity();
        if (report.barrier_height) cap_u_ = *report.barrier_height;
        if (report.u_saddle) cap_u_ = std::min(cap_u_, *report.u_saddle - report.u_min);
    }

    double u_rel(double x, double y, double z) const {
        return model_.total(x, y, z) - report_.u_min;
    }

    // Volume integral of max(0, mu - u_rel); spill flag set when the support
    // touches the basin boundary.
    double integral(double mu, bool* spilled) const {
        if (spilled) *spilled = false;
        if (!(mu > 0.0)) return 0.0;
        if (spilled && mu >= cap_u_) *spilled = true;

        const double m = model_.mass();
        // z reach along the axis.
        const double rz = std::sqrt(2.0 * mu / (m * model_.omega_z() * model_.omega_z()));
        double z_hi = report_.z_min + rz;
        while (u_rel(0.0, 0.0, z_hi) <= mu) z_hi = report_.z_min + (z_hi - report_.z_min) * 1.6;

        // Transverse reach: harmonic estimate extended by the evanescent
        // energy released off axis (the beam envelope decays with |x|, |y|).
        const double mu_ext = mu + model_.ew(0.0, 0.0, report_.z_min);
        double x_max = 1.3 * std::sqrt(2.0 * mu_ext / (m * model_.omega_x() * model_.omega_x()));
        double y_max = 1.3 * std::sqrt(2.0 * mu_ext / (m * model_.omega_y() * model_.omega_y()));
        if (report_.saddle_x && report_.u_saddle && mu >= *report_.u_saddle - report_.u_min) {
            x_max = std::min(x_max, *report_.saddle_x);
            if (spilled) *spilled = true;
        }

        bool clipped = false;
        auto column = [&](double x, double y) {
            return column_integral(x, y, mu, z_hi, &clipped);
        };

        // Quadrant symmetry: integrand is even in x and in y.
        const auto& rule = numeric::gauss_legendre(options_.transverse_order);
        double sum_x = 0.0;
        const double hx = 0.5 * x_max;
        const double hy = 0.5 * y_max;
        for (int i = 0; i < options_.transverse_order; ++i) {
            const double x = hx + hx * rule.nodes[i];
            double sum_y = 0.0;
            for (int j = 0; j < options_.transverse_order; ++j) {
                const double y = hy + hy * rule.nodes[j];
                sum_y += rule.weights[j] * column(x, y);
            }
            sum_x += rule.weights[i] * hy * sum_y;
        }
        if (clipped && spilled) *spilled = true;
        return 4.0 * hx * sum_x;
    }

    double number_at(double mu, bool* spilled = nullptr) const {
        return integral(mu, spilled) / g_int_;
    }

    double g_int() const { return g_int_; }
    const TrapModel& model() const { return model_; }
    const LandscapeReport& report() const { return report_; }

private:
    // Integral of (mu - u_rel) over the column's classically allowed
    // interval around the basin floor.
    double column_integral(double x, double y, double mu, double z_hi,
                           bool* clipped) const {
        auto f = [&](double z) { return u_rel(x, y, z); };
        const double zc = numeric::golden_min(f, z_guard_, z_hi, 1e-10);
        const double uc = f(zc);
        if (uc >= mu) return 0.0;

        double z_lo_col;
        if (f(z_guard_) <= mu) {
            z_lo_col = z_guard_; // support touches the crest: spill
            if (clipped) *clipped = true;
        } else {
            z_lo_col = numeric::bisect_root([&](double z) { return f(z) - mu; },
                                            z_guard_, zc, 1e-12);
        }
        double z_hi_col;
        if (f(z_hi) <= mu) {
            z_hi_col = z_hi;
            if (clipped) *clipped = true;
        } else {
            z_hi_col = numeric::bisect_root([&](double z) { return f(z) - mu; },
                                            zc, z_hi, 1e-12);
        }
        auto integrand = [&](double z) { return std::max(0.0, mu - f(z)); };
        return numeric::integrate_gl(integrand, z_lo_col, z_hi_col, options_.axial_order);
    }

    TrapModel model_;
    LandscapeReport report_;
    TFOptions options_;
    double g_int_ = 0.0;
    double z_guard_ = kZFloor;
    double cap_u_ = 0.0;
};

LandscapeReport default_report(const TrapConfiguration& cfg) {
    return find_minimum_on_axis(cfg);
}

} // namespace

double tf_number_at_mu(const TrapConfiguration& cfg, const LandscapeReport& report,
                       double mu, const TFOptions& options) {
    return TFSolver(cfg, report, options).number_at(mu);
}

namespace {

struct MuSolution {
    double mu = 0.0;
    bool spilled = false;
};

MuSolution solve_mu(const TFSolver& solver, double n_atoms, const TFOptions& options,
                    const TrapConfiguration& cfg) {
    if (n_atoms < 0.0) {
        throw DomainError("atom number must be >= 0");
    }
    if (n_atoms == 0.0) return {0.0, false};

    const double omega_bar = std::cbrt(cfg.magnet.omega_x * cfg.magnet.omega_y *
                                       cfg.magnet.omega_z);
    double hi = 4.0 * tf_mu_harmonic(omega_bar, n_atoms, cfg.species);
    int guard = 0;
    while (solver.number_at(hi) < n_atoms) {
        hi *= 2.0;
        if (++guard > 60) {
            throw NonConvergence("could not bracket the chemical potential");
        }
    }
    auto fn = [&](double mu) { return solver.number_at(mu) - n_atoms; };
    const double mu = numeric::brent_root(fn, 0.0, hi, hi * 1e-8);

    bool spilled = false;
    const double n_check = solver.number_at(mu, &spilled);
    if (std::abs(n_check - n_atoms) > options.rel_tol_n * n_atoms) {
        throw NonConvergence("chemical-potential solve missed the atom-number tolerance");
    }
    return {mu, spilled};
}

} // namespace

double tf_chemical_potential(const TrapConfiguration& cfg, double n_atoms,
                             const TFOptions& options) {
    const LandscapeReport report = default_report(cfg);
    if (!report.has_trap) {
        throw NoTrap("landscape has no trapped minimum");
    }
    TFSolver solver(cfg, report, options);
    return solve_mu(solver, n_atoms, options, cfg).mu;
}

TFProfile tf_profile(const TrapConfiguration& cfg, const LandscapeReport& report,
                     double n_atoms, const TFOptions& options) {
    if (!report.has_trap) {
        throw NoTrap("landscape has no trapped minimum");
    }
    TFSolver solver(cfg, report, options);
    const MuSolution sol = solve_mu(solver, n_atoms, options, cfg);
    return TFProfile(cfg, report, sol.mu, n_atoms, sol.spilled);
}

TFProfile tf_profile(const TrapConfiguration& cfg, double n_atoms,
                     const TFOptions& options) {
    return tf_profile(cfg, default_report(cfg), n_atoms, options);
}

TFProfile::TFProfile(const TrapConfiguration& cfg, const LandscapeReport& report,
                     double mu, double n_atoms, bool spilled)
    : model_(std::make_shared<TrapModel>(cfg)),
      mu_(mu),
      n_atoms_(n_atoms),
      g_int_(g_interaction(cfg.species)),
      u_min_(report.u_min),
      spilled_(spilled) {
    const double m = cfg.species.mass;
    radii_ = {std::sqrt(2.0 * mu / (m * cfg.magnet.omega_x * cfg.magnet.omega_x)),
              std::sqrt(2.0 * mu / (m * cfg.magnet.omega_y * cfg.magnet.omega_y)),
              std::sqrt(2.0 * mu / (m * cfg.magnet.omega_z * cfg.magnet.omega_z))};
}

double TFProfile::density_at(const Point3& p) const {
    const double u_rel = model_->total(p.x, p.y, p.z) - u_min_;
    return std::max(0.0, mu_ - u_rel) / g_int_;
}

double tf_density(const TrapConfiguration& cfg, double mu, const Point3& p) {
    if (!(mu >= 0.0)) {
        throw DomainError("tf_density: mu must be >= 0");
    }
    const LandscapeReport report = default_report(cfg);
    if (!report.has_trap) {
        throw NoTrap("landscape has no trapped minimum");
    }
    TrapModel model(cfg);
    const double u_rel = model.total(p.x, p.y, p.z) - report.u_min;
    return std::max(0.0, mu - u_rel) / g_interaction(cfg.species);
}

double energy_spread(const TrapConfiguration& cfg, double n_atoms,
                     const TFOptions& options) {
    return tf_chemical_potential(cfg, n_atoms, options);
}

} // namespace surftrap
