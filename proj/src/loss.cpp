#include "surftrap/loss.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "surftrap/numeric.hpp"

namespace surftrap {

double ramp_position(double t, const RampSpec& ramp) {
    if (!(ramp.tau > 0.0)) {
        throw DomainError("ramp tau must be > 0");
    }
    if (!(t >= 0.0 && t <= ramp.tau)) {
        throw DomainError("ramp time outside [0, tau]");
    }
    const double span = ramp.z0_end - ramp.z0_start;
    double s;
    if (ramp.shape == RampShape::PaperSinSquared) {
        const double v = std::sin(kPi * t / ramp.tau);
        s = v * v;
    } else {
        const double v = std::sin(kPi * t / (2.0 * ramp.tau));
        s = v * v;
    }
    return ramp.z0_start + span * s;
}

double evaporation_fraction(const TrapConfiguration& cfg, const LandscapeReport& report,
                            double mu, const TFOptions& options) {
    if (!(mu >= 0.0)) {
        throw DomainError("evaporation_fraction: mu must be >= 0");
    }
    if (!report.has_trap) return 1.0;
    const double depth = report.trap_depth;
    if (mu <= depth) return 0.0;
    const double n_mu = tf_number_at_mu(cfg, report, mu, options);
    if (!(n_mu > 0.0)) return 1.0;
    const double n_depth = tf_number_at_mu(cfg, report, depth, options);
    return std::clamp(1.0 - n_depth / n_mu, 0.0, 1.0);
}

double wkb_transmission_1d(const std::function<double(double)>& u, double mass,
                           double energy, double z_lo, double z_hi,
                           const PhysicalConstants& consts) {
    if (!(z_hi > z_lo)) {
        throw DomainError("wkb: bracket must satisfy z_lo < z_hi");
    }
    auto neg = [&](double z) { return -u(z); };
    const double z_crest = numeric::golden_min(neg, z_lo, z_hi, (z_hi - z_lo) * 1e-12);
    const double u_crest = u(z_crest);
    if (energy >= u_crest) {
        throw AboveBarrier("energy at or above the barrier crest");
    }
    if (!(u(z_lo) < energy)) {
        throw DomainError("wkb: z_lo is not classically allowed at this energy");
    }
    auto shifted = [&](double z) { return u(z) - energy; };
    const double xtol = (z_hi - z_lo) * 1e-13;
    const double a = numeric::bisect_root(shifted, z_lo, z_crest, xtol);
    double b;
    const double fhi = shifted(z_hi);
    if (fhi > 0.0) {
        throw DomainError("wkb: z_hi is not classically allowed at this energy");
    }
    b = (fhi == 0.0) ? z_hi : numeric::bisect_root(shifted, z_crest, z_hi, xtol);

    const double pref = std::sqrt(2.0 * mass) / consts.hbar;
    auto kappa = [&](double z) {
        return pref * std::sqrt(std::max(0.0, u(z) - energy));
    };
    const double action = numeric::integrate_tanh_sinh(kappa, a, b, 1e-9);
    const double t = std::exp(-2.0 * action);
    return std::min(t, 1.0);
}

double wkb_transmission(const TrapConfiguration& cfg, double energy,
                        SearchWindow window) {
    const LandscapeReport report = find_minimum_on_axis(cfg, window);
    if (!report.z_barrier || !report.u_barrier) {
        throw NoBarrier("landscape has no on-axis barrier");
    }
    if (energy >= *report.u_barrier) {
        throw AboveBarrier("energy at or above the barrier crest");
    }
    if (!report.has_trap) {
        throw NoTrap("wkb transmission needs a trapped landscape");
    }
    if (energy < report.u_min) {
        throw DomainError("energy below the trap minimum");
    }
    const TrapModel model(cfg);
    auto u = [&](double z) { return model.total_on_axis(z); };
    return wkb_transmission_1d(u, cfg.species.mass, energy, window.lo, report.z_min);
}

namespace {

// Fraction of the approach path (path coordinate s in [0, 1]) spent at or
// beyond the pin point s_pin, plus hold and return legs.
double exposure_time(const RampSpec& ramp, double s_pin) {
    if (s_pin > 1.0) return 0.0; // never reaches the pinned regime
    const double s = std::max(s_pin, 0.0);
    const double theta = std::asin(std::sqrt(std::clamp(s, 0.0, 1.0)));
    if (ramp.shape == RampShape::PaperSinSquared) {
        // In and back out within tau; hold/return occur at the start point.
        double t = ramp.tau * (1.0 - 2.0 * theta / kPi);
        if (s_pin <= 0.0) t += ramp.hold + ramp.return_time;
        return t;
    }
    const double frac_in = 1.0 - 2.0 * theta / kPi; // monotone half period
    return ramp.tau * frac_in + ramp.hold + ramp.return_time * frac_in;
}

struct PinProbe {
    bool valid = false;
    double z0_pin = 0.0; // largest z0 that is surface-pinned
};

// Pinned: the trap minimum no longer tracks the magnetic minimum (offset
// grows past 1.5x the gravitational sag), or the trap has opened entirely.
bool is_pinned(const TrapConfiguration& base, double z0, double sag,
               SearchWindow window) {
    TrapConfiguration cfg = base;
    cfg.magnet.z0 = z0;
    try {
        const LandscapeReport r = find_minimum_on_axis(cfg, window);
        if (!r.has_trap) return true;
        return (r.z_min - z0) > 1.5 * sag;
    } catch (const NoStationaryPoint&) {
        return true;
    }
}

PinProbe locate_pin_boundary(const TrapConfiguration& base, double z0_low,
                             double z0_high, SearchWindow window) {
    const TrapModel model(base);
    const double sag = model.sag();
    PinProbe probe;
    if (!is_pinned(base, z0_low, sag, window)) {
        return probe; // nothing in range is pinned
    }
    if (is_pinned(base, z0_high, sag, window)) {
        probe.valid = true;
        probe.z0_pin = z0_high;
        return probe;
    }
    double lo = z0_low, hi = z0_high;
    for (int i = 0; i < 40 && (hi - lo) > 1e-8; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (is_pinned(base, mid, sag, window)) lo = mid; else hi = mid;
    }
    probe.valid = true;
    probe.z0_pin = lo;
    return probe;
}

} // namespace

std::vector<SurvivalRecord> survival_curve(const TrapConfiguration& cfg_base,
                                           const RampSpec& ramp, double n_atoms,
                                           std::span<const double> z0_list,
                                           double attempt_rate,
                                           SearchWindow window, SearchWindow x_window,
                                           int threads, const TFOptions& tf_options) {
    if (!(attempt_rate >= 0.0)) {
        throw DomainError("attempt rate must be >= 0");
    }
    std::vector<SurvivalRecord> records(z0_list.size());

    double z0_low = ramp.z0_start;
    for (double z0 : z0_list) z0_low = std::min(z0_low, z0);
    const PinProbe pin =
        locate_pin_boundary(cfg_base, z0_low, ramp.z0_start, window);

    auto compute = [&](std::size_t i) {
        SurvivalRecord rec;
        rec.z0 = z0_list[i];
        TrapConfiguration cfg = cfg_base;
        cfg.magnet.z0 = rec.z0;
        try {
            LandscapeReport report;
            bool open = false;
            try {
                report = find_minimum_on_axis(cfg, window);
                open = !report.has_trap;
            } catch (const NoStationaryPoint&) {
                open = true;
            }
            if (open) {
                rec.evap_loss = 1.0;
                rec.tunnel_loss = 0.0;
                rec.fraction = 0.0;
                records[i] = std::move(rec);
                return;
            }
            if (report.z_barrier) {
                report = with_saddle(cfg, report, x_window, window);
            }
            const TFProfile profile = tf_profile(cfg, report, n_atoms, tf_options);
            const double mu = profile.mu();
            rec.evap_loss = evaporation_fraction(cfg, report, mu, tf_options);

            double tunnel = 0.0;
            if (report.z_barrier && report.u_barrier && attempt_rate > 0.0) {
                // Representative tunneling energy: mid-height of the occupied
                // energy band, capped below the crest.
                const double e_band = std::min(mu, report.trap_depth);
                const double energy = report.u_min + 0.5 * e_band;
                double transmission = 0.0;
                if (energy >= *report.u_barrier) {
                    transmission = 1.0;
                } else if (energy >= report.u_min) {
                    const TrapModel model(cfg);
                    auto u = [&](double z) { return model.total_on_axis(z); };
                    transmission = wkb_transmission_1d(u, cfg.species.mass, energy,
                                                       window.lo, report.z_min);
                }
                double s_pin = 2.0; // beyond range: no exposure
                if (pin.valid) {
                    const double span = rec.z0 - ramp.z0_start;
                    if (span == 0.0) {
                        s_pin = (ramp.z0_start <= pin.z0_pin) ? 0.0 : 2.0;
                    } else {
                        s_pin = (pin.z0_pin - ramp.z0_start) / span;
                        if (span > 0.0) {
                            // Receding ramp never enters the pinned regime
                            // unless it starts there.
                            s_pin = (ramp.z0_start <= pin.z0_pin) ? 0.0 : 2.0;
                        }
                    }
                }
                const double t_exp = exposure_time(ramp, s_pin);
                tunnel = 1.0 - std::exp(-attempt_rate * transmission * t_exp);
            }
            rec.tunnel_loss = tunnel;
            rec.fraction = std::clamp(1.0 - rec.evap_loss - rec.tunnel_loss, 0.0, 1.0);
        } catch (const Error& e) {
            rec.error = e.code();
            rec.fraction = 0.0;
            rec.evap_loss = 0.0;
            rec.tunnel_loss = 0.0;
        }
        records[i] = std::move(rec);
    };

    const int n_threads = std::max(1, threads);
    if (n_threads == 1 || z0_list.size() < 2) {
        for (std::size_t i = 0; i < z0_list.size(); ++i) compute(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        const std::size_t n = z0_list.size();
        for (int t = 0; t < n_threads; ++t) {
            pool.emplace_back([&]() {
                for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                    compute(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    return records;
}

} // namespace surftrap
