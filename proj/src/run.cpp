#include "surftrap/run.hpp"

#include <cmath>

#include "surftrap/condensate.hpp"
#include "surftrap/loss.hpp"
#include "surftrap/numeric.hpp"
#include "surftrap/spectroscopy.hpp"

namespace surftrap {

namespace {

const PhysicalConstants kConsts{};

std::string opt_cell(const std::optional<double>& v) {
    return v ? format_si(*v) : std::string();
}

std::string uK(double joule) { return format_si(joule / kConsts.kB * 1e6); }

SearchWindow z_window(const ScenarioConfig& cfg) {
    return {cfg.landscape.z_lo, cfg.landscape.z_hi};
}

SearchWindow x_window(const ScenarioConfig& cfg) {
    return {0.0, cfg.landscape.x_hi};
}

ResultTable run_potential_cut(const ScenarioConfig& cfg) {
    ResultTable table;
    table.schema = "potential-cut/v1";
    table.columns = {"z_m", "u_cp_J", "u_ew_J", "u_magn_J", "u_g_J", "u_tot_J", "u_tot_uK"};
    const TrapModel model(cfg.trap);
    const auto grid = numeric::linear_grid(cfg.cut.z_start, cfg.cut.z_stop, cfg.cut.n_points);
    for (double z : grid) {
        const double cp = model.cp(z);
        const double ew = model.ew(cfg.cut.x, cfg.cut.y, z);
        const double magn = model.magnetic(cfg.cut.x, cfg.cut.y, z);
        const double grav = model.gravity(z);
        const double tot = cp + ew + magn + grav;
        table.rows.push_back({format_si(z), format_si(cp), format_si(ew), format_si(magn),
                              format_si(grav), format_si(tot), uK(tot)});
    }
    return table;
}

ResultTable run_potential_map(const ScenarioConfig& cfg) {
    ResultTable table;
    table.schema = "potential-map/v1";
    table.columns = {"x_m", "z_m", "u_tot_J", "u_tot_uK"};
    const TrapModel model(cfg.trap);
    const auto xs = numeric::linear_grid(cfg.map.x_min, cfg.map.x_max, cfg.map.nx);
    const auto zs = numeric::linear_grid(cfg.map.z_min, cfg.map.z_max, cfg.map.nz);
    for (double x : xs) {
        for (double z : zs) {
            const double u = model.total(x, 0.0, z);
            table.rows.push_back({format_si(x), format_si(z), format_si(u), uK(u)});
        }
    }
    return table;
}

std::vector<std::string> report_cells(double z0, const LandscapeReport& r) {
    return {format_si(z0),
            r.has_trap ? format_si(r.z_min) : std::string(),
            r.has_trap ? format_si(r.u_min) : std::string(),
            opt_cell(r.z_barrier),
            opt_cell(r.u_barrier),
            opt_cell(r.barrier_height),
            opt_cell(r.saddle_x),
            r.has_trap ? format_si(r.trap_depth) : std::string(),
            format_bool(r.has_trap)};
}

ResultTable run_minimize(const ScenarioConfig& cfg) {
    ResultTable table;
    table.schema = "minimize/v1";
    table.columns = {"z0_m", "z_min_m", "u_min_J", "z_barrier_m", "u_barrier_J",
                     "barrier_height_J", "saddle_x_m", "trap_depth_J", "has_trap"};
    LandscapeReport report = find_minimum_on_axis(cfg.trap, z_window(cfg));
    if (cfg.landscape.with_saddle) {
        report = with_saddle(cfg.trap, report, x_window(cfg), z_window(cfg));
    }
    table.rows.push_back(report_cells(cfg.trap.magnet.z0, report));
    return table;
}

ResultTable run_sweep_z0(const ScenarioConfig& cfg) {
    ResultTable table;
    table.schema = "sweep-z0/v1";
    table.columns = {"z0_m", "z_min_m", "u_min_J", "z_barrier_m", "u_barrier_J",
                     "barrier_height_J", "trap_depth_J", "has_trap", "b_a_T", "error"};
    const auto z0s = cfg.sweep_z0_values();
    const SweepTable sweep = sweep_z0(cfg.trap, z0s, z_window(cfg), cfg.threads);
    for (const auto& rec : sweep.records) {
        std::vector<std::string> row(table.columns.size());
        row[0] = format_si(rec.z0);
        if (rec.report) {
            const LandscapeReport& r = *rec.report;
            if (r.has_trap) {
                row[1] = format_si(r.z_min);
                row[2] = format_si(r.u_min);
                row[6] = format_si(r.trap_depth);
                TrapConfiguration trap = cfg.trap;
                trap.magnet.z0 = rec.z0;
                row[8] = format_si(field_at_atoms(trap, r, cfg.gf_mf_trap));
            }
            row[3] = opt_cell(r.z_barrier);
            row[4] = opt_cell(r.u_barrier);
            row[5] = opt_cell(r.barrier_height);
            row[7] = format_bool(r.has_trap);
        } else {
            row[7] = format_bool(false);
        }
        row[9] = rec.error;
        table.rows.push_back(std::move(row));
    }
    try {
        const RegimeFit fit = fit_two_regimes(sweep);
        table.comments.push_back("regime_fit slope_i=" + format_si(fit.slope_i) +
                                 " intercept_i_m=" + format_si(fit.intercept_i) +
                                 " slope_ii=" + format_si(fit.slope_ii) +
                                 " breakpoint_z0_m=" + format_si(fit.breakpoint_z0) +
                                 " residual_rms_m=" + format_si(fit.residual_rms));
    } catch (const InsufficientData&) {
        // Sweep does not span both regimes; no fit line.
    }
    return table;
}

ResultTable run_tf_density(const ScenarioConfig& cfg) {
    ResultTable table;
    table.schema = "tf-density/v1";
    table.columns = {"z_m", "density_m3"};
    LandscapeReport report = find_minimum_on_axis(cfg.trap, z_window(cfg));
    if (cfg.landscape.with_saddle) {
        report = with_saddle(cfg.trap, report, x_window(cfg), z_window(cfg));
    }
    const TFProfile profile = tf_profile(cfg.trap, report, cfg.n_atoms);
    table.comments.push_back("mu_J=" + format_si(profile.mu()));
    table.comments.push_back("mu_uK=" + uK(profile.mu()));
    const auto radii = profile.tf_radii();
    table.comments.push_back("tf_radius_x_m=" + format_si(radii[0]) +
                             " tf_radius_y_m=" + format_si(radii[1]) +
                             " tf_radius_z_m=" + format_si(radii[2]));
    table.comments.push_back("spilled=" + std::string(profile.spilled() ? "1" : "0"));
    const auto grid = numeric::linear_grid(cfg.cut.z_start, cfg.cut.z_stop, cfg.cut.n_points);
    for (double z : grid) {
        table.rows.push_back(
            {format_si(z), format_si(profile.density_at({cfg.cut.x, cfg.cut.y, z}))});
    }
    return table;
}

ResultTable run_rf_map(const ScenarioConfig& cfg) {
    ResultTable table;
    table.schema = "rf-map/v1";
    table.columns = {"z0_m", "b_field_T", "rf_freq_Hz"};
    const auto z0s = cfg.sweep_z0_values();
    const SweepTable sweep = sweep_z0(cfg.trap, z0s, z_window(cfg), cfg.threads);
    for (const auto& rec : sweep.records) {
        if (!rec.report || !rec.report->has_trap) continue;
        TrapConfiguration trap = cfg.trap;
        trap.magnet.z0 = rec.z0;
        const double b = field_at_atoms(trap, *rec.report, cfg.gf_mf_trap);
        const double f = rf_resonance(b, cfg.trap.species);
        table.rows.push_back({format_si(rec.z0), format_si(b), format_si(f)});
    }
    return table;
}

ResultTable run_loss_curve(const ScenarioConfig& cfg) {
    ResultTable table;
    table.schema = "loss-curve/v1";
    table.columns = {"z0_m", "fraction", "evap_loss", "tunnel_loss", "error"};
    const auto z0s = cfg.sweep_z0_values();
    const auto records =
        survival_curve(cfg.trap, cfg.ramp, cfg.n_atoms, z0s, cfg.attempt_rate_or_default(),
                       z_window(cfg), x_window(cfg), cfg.threads);
    table.comments.push_back("attempt_rate_hz=" + format_si(cfg.attempt_rate_or_default()));
    for (const auto& rec : records) {
        table.rows.push_back({format_si(rec.z0), format_si(rec.fraction),
                              format_si(rec.evap_loss), format_si(rec.tunnel_loss),
                              rec.error});
    }
    return table;
}

ResultTable run_ramp_profile(const ScenarioConfig& cfg) {
    ResultTable table;
    table.schema = "ramp-profile/v1";
    table.columns = {"t_s", "z0_m"};
    const int n = 201;
    const auto ts = numeric::linear_grid(0.0, cfg.ramp.tau, n);
    for (double t : ts) {
        table.rows.push_back({format_si(t), format_si(ramp_position(t, cfg.ramp))});
    }
    return table;
}

} // namespace

const std::vector<std::string>& subcommand_names() {
    static const std::vector<std::string> names = {
        "potential-cut", "potential-map", "minimize", "sweep-z0",
        "tf-density",    "rf-map",        "loss-curve", "ramp-profile"};
    return names;
}

ResultTable run_subcommand(const std::string& name, const ScenarioConfig& cfg) {
    validate(cfg);
    if (name == "potential-cut") return run_potential_cut(cfg);
    if (name == "potential-map") return run_potential_map(cfg);
    if (name == "minimize") return run_minimize(cfg);
    if (name == "sweep-z0") return run_sweep_z0(cfg);
    if (name == "tf-density") return run_tf_density(cfg);
    if (name == "rf-map") return run_rf_map(cfg);
    if (name == "loss-curve") return run_loss_curve(cfg);
    if (name == "ramp-profile") return run_ramp_profile(cfg);
    throw ValidationError("unknown subcommand: " + name);
}

ResultTable run_subcommand(const std::string& name, const ScenarioConfig& cfg,
                           const std::string& output_path) {
    ResultTable table = run_subcommand(name, cfg);
    if (!output_path.empty()) {
        write_csv(table, output_path);
    }
    return table;
}

} // namespace surftrap
