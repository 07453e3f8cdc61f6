#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surftrap/landscape.hpp"
#include "surftrap/loss.hpp"
#include "surftrap/potential.hpp"

namespace surftrap {

struct SweepSpec {
    double z0_start = 0.0; // m
    double z0_stop = 0.0;  // m
    int n_points = 0;
};

struct CutSpec {
    double z_start = 0.0; // m
    double z_stop = 0.0;  // m
    int n_points = 0;
    double x = 0.0; // m
    double y = 0.0; // m
};

struct MapSpec {
    double x_min = 0.0, x_max = 0.0; // m
    int nx = 0;
    double z_min = 0.0, z_max = 0.0; // m
    int nz = 0;
};

struct LandscapeSpec {
    double z_lo = kZFloor;  // m
    double z_hi = 120e-6;   // m
    double x_hi = 250e-6;   // m, saddle search extent
    bool with_saddle = true; // apply the saddle reduction in reports
};

/// Full scenario: one trap configuration plus the sweep/ramp/output controls
/// of the CLI subcommands. Produced by load_config; every nested physical
/// invariant is re-validated on load.
struct ScenarioConfig {
    TrapConfiguration trap;
    double gf_mf_trap = 1.0;       // trapped-state Zeeman factor gF*mF
    double n_atoms = 1e5;
    std::optional<double> attempt_rate; // Hz; defaults to omega_z / 2 pi
    double rf_uncertainty = 1e3;   // Hz, attached to emitted RF points
    RampSpec ramp;
    SweepSpec sweep;
    CutSpec cut;
    MapSpec map;
    LandscapeSpec landscape;
    int threads = 1;

    double attempt_rate_or_default() const;
    std::vector<double> sweep_z0_values() const; // ascending
};

/// The simulation parameter set of the paper's figures: 500 mW at 47.5 deg,
/// 170 x 240 um waists, 25/200/200 Hz trap, C4 override 1.78e-55 J m^4.
ScenarioConfig paper_fig2_preset();

/// Flat sectioned key-value text. Unknown sections or keys are rejected;
/// omitted keys keep their paper-fig2 preset values. Throws ParseError with
/// a line number or ValidationError naming the violated invariant.
ScenarioConfig parse_config_text(std::string_view text,
                                 const std::string& origin = "<inline>");
ScenarioConfig load_config(const std::string& path);

/// Canonical serialization; reloading reproduces the configuration exactly.
std::string serialize_config(const ScenarioConfig& cfg);

/// Applies `section.key=value` overrides (CLI --set) on top of a loaded
/// configuration, then re-validates.
void apply_overrides(ScenarioConfig& cfg,
                     std::span<const std::pair<std::string, std::string>> overrides);

void validate(const ScenarioConfig& cfg);

} // namespace surftrap
