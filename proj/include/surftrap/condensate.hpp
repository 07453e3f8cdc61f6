#pragma once

#include <array>
#include <memory>

#include "surftrap/landscape.hpp"
#include "surftrap/potential.hpp"

namespace surftrap {

/// Interaction constant g = 4 pi hbar^2 a / m.
double g_interaction(const Species& species,
                     const PhysicalConstants& consts = PhysicalConstants{});

/// Thomas-Fermi chemical potential of a pure harmonic trap,
/// mu = (hbar wbar / 2) (15 N a / abar)^{2/5}.
double tf_mu_harmonic(double omega_bar, double n_atoms, const Species& species,
                      const PhysicalConstants& consts = PhysicalConstants{});

struct TFOptions {
    double rel_tol_n = 1e-4; // relative tolerance on the atom number
    int transverse_order = 40; // Gauss-Legendre order per transverse half-axis
    int axial_order = 24;      // Gauss-Legendre order per z column
};

/// Thomas-Fermi solution inside one landscape. mu is measured from the
/// potential minimum. density_at evaluates max(0, mu - (U - U_min)) / g; the
/// evaluator is an immutable closure over the configuration, safe to share.
class TFProfile {
public:
    TFProfile(const TrapConfiguration& cfg, const LandscapeReport& report,
              double mu, double n_atoms, bool spilled = false);

    double mu() const { return mu_; }
    double n_atoms() const { return n_atoms_; }
    double g_int() const { return g_int_; }
    double u_min() const { return u_min_; }
    /// Harmonic-approximation radii sqrt(2 mu / m omega_i^2).
    std::array<double, 3> tf_radii() const { return radii_; }
    /// True when mu reached the basin depth and the cloud would spill.
    bool spilled() const { return spilled_; }

    double density_at(const Point3& p) const; // m^-3

private:
    std::shared_ptr<const TrapModel> model_;
    double mu_ = 0.0;
    double n_atoms_ = 0.0;
    double g_int_ = 0.0;
    double u_min_ = 0.0;
    std::array<double, 3> radii_{};
    bool spilled_ = false;
};

/// Atom number the basin holds at chemical potential mu:
/// N(mu) = Integral max(0, mu - (U - U_min)) / g over the trap basin, the
/// connected region around the minimum bounded by the barrier crest (and the
/// saddle energy when the report carries one).
double tf_number_at_mu(const TrapConfiguration& cfg, const LandscapeReport& report,
                       double mu, const TFOptions& options = TFOptions{});

/// Chemical potential solving N(mu) = n_atoms by bracketed root finding on
/// the monotone number integral. Throws NoTrap without a trapped landscape
/// and NonConvergence when the tolerance cannot be met.
double tf_chemical_potential(const TrapConfiguration& cfg, double n_atoms,
                             const TFOptions& options = TFOptions{});

/// As above but returns the full profile (radii, spill flag, evaluator).
TFProfile tf_profile(const TrapConfiguration& cfg, double n_atoms,
                     const TFOptions& options = TFOptions{});
TFProfile tf_profile(const TrapConfiguration& cfg, const LandscapeReport& report,
                     double n_atoms, const TFOptions& options = TFOptions{});

/// max(0, mu - (u_total(p) - u_min)) / g. The literal Thomas-Fermi formula;
/// it carries no basin mask, so points beyond the barrier may report a
/// nonzero value. Normalization integrals apply the basin restriction.
double tf_density(const TrapConfiguration& cfg, double mu, const Point3& p);

/// The chemical potential, exposed under the name the loss model uses.
double energy_spread(const TrapConfiguration& cfg, double n_atoms,
                     const TFOptions& options = TFOptions{});

} // namespace surftrap
