#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "surftrap/condensate.hpp"
#include "surftrap/config.hpp"
#include "surftrap/landscape.hpp"
#include "surftrap/loss.hpp"
#include "surftrap/potential.hpp"
#include "surftrap/run.hpp"
#include "surftrap/spectroscopy.hpp"
#include "surftrap/table.hpp"

namespace py = pybind11;
using namespace surftrap;

PYBIND11_MODULE(_surftrap, m) {
    m.doc() = "Surface-trap toolkit: magnetic + evanescent-wave potentials, "
              "landscape analysis, Thomas-Fermi profiles, RF spectroscopy and "
              "barrier-loss estimates";

    py::register_exception<Error>(m, "SurftrapError");

    py::class_<PhysicalConstants>(m, "PhysicalConstants")
        .def(py::init<>())
        .def_readwrite("hbar", &PhysicalConstants::hbar)
        .def_readwrite("c", &PhysicalConstants::c)
        .def_readwrite("eps0", &PhysicalConstants::eps0)
        .def_readwrite("kB", &PhysicalConstants::kB)
        .def_readwrite("muB", &PhysicalConstants::muB)
        .def_readwrite("g_accel", &PhysicalConstants::g_accel)
        .def("planck", &PhysicalConstants::planck);

    py::class_<Species>(m, "Species")
        .def(py::init<>())
        .def_readwrite("mass", &Species::mass)
        .def_readwrite("alpha0", &Species::alpha0)
        .def_readwrite("gamma", &Species::gamma)
        .def_readwrite("lambda_d1", &Species::lambda_d1)
        .def_readwrite("lambda_d2", &Species::lambda_d2)
        .def_readwrite("a_scatt", &Species::a_scatt)
        .def_readwrite("gF", &Species::gF)
        .def_readwrite("mF", &Species::mF)
        .def_readwrite("delta_mF", &Species::delta_mF);

    py::class_<SurfaceMaterial>(m, "SurfaceMaterial")
        .def(py::init<>())
        .def_readwrite("n_index", &SurfaceMaterial::n_index)
        .def_readwrite("eps_static", &SurfaceMaterial::eps_static)
        .def_readwrite("phi_factor", &SurfaceMaterial::phi_factor)
        .def_readwrite("c4_override", &SurfaceMaterial::c4_override);

    py::class_<C4Coefficient>(m, "C4Coefficient")
        .def_readonly("value", &C4Coefficient::value)
        .def_readonly("from_override", &C4Coefficient::from_override);

    py::enum_<Polarization>(m, "Polarization")
        .value("TE", Polarization::TE)
        .value("TM", Polarization::TM);

    py::class_<EvanescentBeam>(m, "EvanescentBeam")
        .def(py::init<>())
        .def_readwrite("wavelength", &EvanescentBeam::wavelength)
        .def_readwrite("power", &EvanescentBeam::power)
        .def_readwrite("angle", &EvanescentBeam::angle)
        .def_readwrite("waist_x", &EvanescentBeam::waist_x)
        .def_readwrite("waist_y", &EvanescentBeam::waist_y)
        .def_readwrite("polarization", &EvanescentBeam::polarization)
        .def_readwrite("enhancement_override", &EvanescentBeam::enhancement_override);

    py::class_<MagneticTrap>(m, "MagneticTrap")
        .def(py::init<>())
        .def_readwrite("omega_x", &MagneticTrap::omega_x)
        .def_readwrite("omega_y", &MagneticTrap::omega_y)
        .def_readwrite("omega_z", &MagneticTrap::omega_z)
        .def_readwrite("z0", &MagneticTrap::z0)
        .def_readwrite("b_offset", &MagneticTrap::b_offset);

    py::class_<TrapConfiguration>(m, "TrapConfiguration")
        .def(py::init<>())
        .def_readwrite("species", &TrapConfiguration::species)
        .def_readwrite("surface", &TrapConfiguration::surface)
        .def_readwrite("beam", &TrapConfiguration::beam)
        .def_readwrite("magnet", &TrapConfiguration::magnet)
        .def_readwrite("gravity_sign", &TrapConfiguration::gravity_sign)
        .def_readwrite("ew_enabled", &TrapConfiguration::ew_enabled);

    py::class_<Point3>(m, "Point3")
        .def(py::init<>())
        .def(py::init([](double x, double y, double z) { return Point3{x, y, z}; }),
             py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("x", &Point3::x)
        .def_readwrite("y", &Point3::y)
        .def_readwrite("z", &Point3::z);

    m.attr("Z_FLOOR") = kZFloor;
    py::enum_<DetuningAverage>(m, "DetuningAverage")
        .value("Arithmetic", DetuningAverage::Arithmetic)
        .value("LineStrength", DetuningAverage::LineStrength);

    m.def("rb87_default", &rb87_default);
    m.def("glass_default", &glass_default);
    m.def("compute_c4", &compute_c4, py::arg("surface"), py::arg("species"),
          py::arg("consts") = PhysicalConstants{});
    m.def("penetration_depth", &penetration_depth);
    m.def("mean_detuning", &mean_detuning, py::arg("beam"), py::arg("species"),
          py::arg("average") = DetuningAverage::Arithmetic,
          py::arg("consts") = PhysicalConstants{});
    m.def("intensity_enhancement", &intensity_enhancement);
    m.def("peak_intensity", &peak_intensity);
    m.def("dipole_u0", &dipole_u0, py::arg("beam"), py::arg("species"), py::arg("surface"),
          py::arg("consts") = PhysicalConstants{});
    m.def("u_cp", &u_cp, py::arg("z"), py::arg("c4"));
    m.def("u_ew", &u_ew);
    m.def("u_magnetic", &u_magnetic);
    m.def("u_gravity", &u_gravity);
    m.def("u_total", &u_total);

    py::class_<SearchWindow>(m, "SearchWindow")
        .def(py::init<>())
        .def(py::init([](double lo, double hi) { return SearchWindow{lo, hi}; }),
             py::arg("lo"), py::arg("hi"))
        .def_readwrite("lo", &SearchWindow::lo)
        .def_readwrite("hi", &SearchWindow::hi);

    py::class_<LandscapeReport>(m, "LandscapeReport")
        .def_readonly("z_min", &LandscapeReport::z_min)
        .def_readonly("u_min", &LandscapeReport::u_min)
        .def_readonly("z_barrier", &LandscapeReport::z_barrier)
        .def_readonly("u_barrier", &LandscapeReport::u_barrier)
        .def_readonly("barrier_height", &LandscapeReport::barrier_height)
        .def_readonly("saddle_x", &LandscapeReport::saddle_x)
        .def_readonly("saddle_z", &LandscapeReport::saddle_z)
        .def_readonly("u_saddle", &LandscapeReport::u_saddle)
        .def_readonly("trap_depth", &LandscapeReport::trap_depth)
        .def_readonly("has_trap", &LandscapeReport::has_trap);

    py::class_<SaddlePoint>(m, "SaddlePoint")
        .def_readonly("x", &SaddlePoint::x)
        .def_readonly("z", &SaddlePoint::z)
        .def_readonly("u", &SaddlePoint::u);

    py::class_<SweepRecord>(m, "SweepRecord")
        .def_readonly("z0", &SweepRecord::z0)
        .def_readonly("report", &SweepRecord::report)
        .def_readonly("error", &SweepRecord::error);

    py::class_<SweepTable>(m, "SweepTable")
        .def_readonly("records", &SweepTable::records);

    py::class_<RegimeFit>(m, "RegimeFit")
        .def_readonly("slope_i", &RegimeFit::slope_i)
        .def_readonly("intercept_i", &RegimeFit::intercept_i)
        .def_readonly("slope_ii", &RegimeFit::slope_ii)
        .def_readonly("intercept_ii", &RegimeFit::intercept_ii)
        .def_readonly("breakpoint_z0", &RegimeFit::breakpoint_z0)
        .def_readonly("residual_rms", &RegimeFit::residual_rms);

    m.def("find_minimum_on_axis", &find_minimum_on_axis, py::arg("cfg"),
          py::arg("window") = kDefaultZWindow);
    m.def("find_saddle_points", &find_saddle_points, py::arg("cfg"),
          py::arg("x_window") = kDefaultXWindow, py::arg("z_window") = kDefaultZWindow);
    m.def("with_saddle", &with_saddle, py::arg("cfg"), py::arg("report"),
          py::arg("x_window") = kDefaultXWindow, py::arg("z_window") = kDefaultZWindow);
    m.def(
        "sweep_z0",
        [](const TrapConfiguration& cfg, const std::vector<double>& z0s,
           SearchWindow window, int threads) {
            return sweep_z0(cfg, z0s, window, threads);
        },
        py::arg("cfg"), py::arg("z0_list"), py::arg("window") = kDefaultZWindow,
        py::arg("threads") = 1);
    m.def("fit_two_regimes", &fit_two_regimes);

    py::class_<TFProfile>(m, "TFProfile")
        .def_property_readonly("mu", &TFProfile::mu)
        .def_property_readonly("n_atoms", &TFProfile::n_atoms)
        .def_property_readonly("g_int", &TFProfile::g_int)
        .def_property_readonly("u_min", &TFProfile::u_min)
        .def_property_readonly("tf_radii", &TFProfile::tf_radii)
        .def_property_readonly("spilled", &TFProfile::spilled)
        .def("density_at", &TFProfile::density_at);

    py::class_<TFOptions>(m, "TFOptions")
        .def(py::init<>())
        .def_readwrite("rel_tol_n", &TFOptions::rel_tol_n)
        .def_readwrite("transverse_order", &TFOptions::transverse_order)
        .def_readwrite("axial_order", &TFOptions::axial_order);

    m.def("g_interaction", &g_interaction, py::arg("species"),
          py::arg("consts") = PhysicalConstants{});
    m.def("tf_mu_harmonic", &tf_mu_harmonic, py::arg("omega_bar"), py::arg("n_atoms"),
          py::arg("species"), py::arg("consts") = PhysicalConstants{});
    m.def("tf_chemical_potential", &tf_chemical_potential, py::arg("cfg"),
          py::arg("n_atoms"), py::arg("options") = TFOptions{});
    m.def("tf_profile",
          py::overload_cast<const TrapConfiguration&, double, const TFOptions&>(&tf_profile),
          py::arg("cfg"), py::arg("n_atoms"), py::arg("options") = TFOptions{});
    m.def("tf_density", &tf_density, py::arg("cfg"), py::arg("mu"), py::arg("p"));
    m.def("energy_spread", &energy_spread, py::arg("cfg"), py::arg("n_atoms"),
          py::arg("options") = TFOptions{});

    py::class_<RfPoint>(m, "RfPoint")
        .def(py::init<>())
        .def_readwrite("z0", &RfPoint::z0)
        .def_readwrite("b_field", &RfPoint::b_field)
        .def_readwrite("rf_freq", &RfPoint::rf_freq)
        .def_readwrite("rf_uncertainty", &RfPoint::rf_uncertainty);

    py::class_<QuadraticFitResult>(m, "QuadraticFitResult")
        .def_readonly("omega_z", &QuadraticFitResult::omega_z)
        .def_readonly("b_offset", &QuadraticFitResult::b_offset)
        .def_readonly("z_ref", &QuadraticFitResult::z_ref)
        .def_readonly("residual_rms", &QuadraticFitResult::residual_rms);

    m.def("field_at_atoms", &field_at_atoms, py::arg("cfg"), py::arg("report"),
          py::arg("gf_mf_trap") = kDefaultTrapZeeman,
          py::arg("consts") = PhysicalConstants{});
    m.def("rf_resonance", &rf_resonance, py::arg("b_field"), py::arg("species"),
          py::arg("consts") = PhysicalConstants{});
    m.def("make_rf_point", &make_rf_point, py::arg("z0"), py::arg("b_field"),
          py::arg("rf_uncertainty"), py::arg("species"),
          py::arg("consts") = PhysicalConstants{});
    m.def(
        "fit_quadratic_rise",
        [](const std::vector<RfPoint>& points, const Species& species, double gf_mf_trap) {
            return fit_quadratic_rise(points, species, gf_mf_trap);
        },
        py::arg("points"), py::arg("species"), py::arg("gf_mf_trap") = kDefaultTrapZeeman);

    py::enum_<RampShape>(m, "RampShape")
        .value("PaperSinSquared", RampShape::PaperSinSquared)
        .value("MonotoneHalfPeriod", RampShape::MonotoneHalfPeriod);

    py::class_<RampSpec>(m, "RampSpec")
        .def(py::init<>())
        .def_readwrite("z0_start", &RampSpec::z0_start)
        .def_readwrite("z0_end", &RampSpec::z0_end)
        .def_readwrite("tau", &RampSpec::tau)
        .def_readwrite("hold", &RampSpec::hold)
        .def_readwrite("return_time", &RampSpec::return_time)
        .def_readwrite("shape", &RampSpec::shape);

    py::class_<SurvivalRecord>(m, "SurvivalRecord")
        .def_readonly("z0", &SurvivalRecord::z0)
        .def_readonly("fraction", &SurvivalRecord::fraction)
        .def_readonly("evap_loss", &SurvivalRecord::evap_loss)
        .def_readonly("tunnel_loss", &SurvivalRecord::tunnel_loss)
        .def_readonly("error", &SurvivalRecord::error);

    m.def("ramp_position", &ramp_position);
    m.def("evaporation_fraction", &evaporation_fraction, py::arg("cfg"), py::arg("report"),
          py::arg("mu"), py::arg("options") = TFOptions{});
    m.def("wkb_transmission", &wkb_transmission, py::arg("cfg"), py::arg("energy"),
          py::arg("window") = kDefaultZWindow);
    m.def(
        "survival_curve",
        [](const TrapConfiguration& cfg, const RampSpec& ramp, double n_atoms,
           const std::vector<double>& z0s, double attempt_rate, SearchWindow window,
           SearchWindow x_window, int threads) {
            return survival_curve(cfg, ramp, n_atoms, z0s, attempt_rate, window, x_window,
                                  threads);
        },
        py::arg("cfg"), py::arg("ramp"), py::arg("n_atoms"), py::arg("z0_list"),
        py::arg("attempt_rate"), py::arg("window") = kDefaultZWindow,
        py::arg("x_window") = kDefaultXWindow, py::arg("threads") = 1);

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("z0_start", &SweepSpec::z0_start)
        .def_readwrite("z0_stop", &SweepSpec::z0_stop)
        .def_readwrite("n_points", &SweepSpec::n_points);

    py::class_<CutSpec>(m, "CutSpec")
        .def(py::init<>())
        .def_readwrite("z_start", &CutSpec::z_start)
        .def_readwrite("z_stop", &CutSpec::z_stop)
        .def_readwrite("n_points", &CutSpec::n_points)
        .def_readwrite("x", &CutSpec::x)
        .def_readwrite("y", &CutSpec::y);

    py::class_<MapSpec>(m, "MapSpec")
        .def(py::init<>())
        .def_readwrite("x_min", &MapSpec::x_min)
        .def_readwrite("x_max", &MapSpec::x_max)
        .def_readwrite("nx", &MapSpec::nx)
        .def_readwrite("z_min", &MapSpec::z_min)
        .def_readwrite("z_max", &MapSpec::z_max)
        .def_readwrite("nz", &MapSpec::nz);

    py::class_<LandscapeSpec>(m, "LandscapeSpec")
        .def(py::init<>())
        .def_readwrite("z_lo", &LandscapeSpec::z_lo)
        .def_readwrite("z_hi", &LandscapeSpec::z_hi)
        .def_readwrite("x_hi", &LandscapeSpec::x_hi)
        .def_readwrite("with_saddle", &LandscapeSpec::with_saddle);

    py::class_<ScenarioConfig>(m, "ScenarioConfig")
        .def(py::init<>())
        .def_readwrite("trap", &ScenarioConfig::trap)
        .def_readwrite("gf_mf_trap", &ScenarioConfig::gf_mf_trap)
        .def_readwrite("n_atoms", &ScenarioConfig::n_atoms)
        .def_readwrite("attempt_rate", &ScenarioConfig::attempt_rate)
        .def_readwrite("rf_uncertainty", &ScenarioConfig::rf_uncertainty)
        .def_readwrite("ramp", &ScenarioConfig::ramp)
        .def_readwrite("sweep", &ScenarioConfig::sweep)
        .def_readwrite("cut", &ScenarioConfig::cut)
        .def_readwrite("map", &ScenarioConfig::map)
        .def_readwrite("landscape", &ScenarioConfig::landscape)
        .def_readwrite("threads", &ScenarioConfig::threads)
        .def("attempt_rate_or_default", &ScenarioConfig::attempt_rate_or_default)
        .def("sweep_z0_values", &ScenarioConfig::sweep_z0_values);

    m.def("paper_fig2_preset", &paper_fig2_preset);
    m.def("parse_config_text", &parse_config_text, py::arg("text"),
          py::arg("origin") = "<inline>");
    m.def("load_config", &load_config);
    m.def("serialize_config", &serialize_config);

    py::class_<ResultTable>(m, "ResultTable")
        .def_readonly("schema", &ResultTable::schema)
        .def_readonly("columns", &ResultTable::columns)
        .def_readonly("comments", &ResultTable::comments)
        .def_readonly("rows", &ResultTable::rows);

    m.def("render_csv", &render_csv);
    m.def("subcommand_names", [] { return subcommand_names(); });
    m.def("run_subcommand",
          py::overload_cast<const std::string&, const ScenarioConfig&, const std::string&>(
              &run_subcommand),
          py::arg("name"), py::arg("cfg"), py::arg("output_path") = std::string());
}
