#include <doctest.h>

#include <cmath>
#include <vector>

#include "surftrap/config.hpp"
#include "surftrap/landscape.hpp"

using namespace surftrap;

namespace {

const double kB = PhysicalConstants{}.kB;

TrapConfiguration fig2_trap(double z0) {
    TrapConfiguration cfg = paper_fig2_preset().trap;
    cfg.magnet.z0 = z0;
    return cfg;
}

SweepTable synthetic_table(double bp, double slope_left, double slope_right) {
    SweepTable table;
    for (int i = 0; i <= 40; ++i) {
        const double z0 = (-20.0 + i) * 1e-6;
        LandscapeReport r;
        r.has_trap = true;
        r.z_min = 2e-6 + (z0 < bp ? slope_left * (z0 - bp) : slope_right * (z0 - bp));
        r.u_min = 0.0;
        r.trap_depth = 1e-29;
        table.records.push_back({z0, r, ""});
    }
    return table;
}

} // namespace

TEST_SUITE_BEGIN("landscape");

TEST_CASE("gravity-only landscape has no stationary point") {
    TrapConfiguration cfg = fig2_trap(0.0);
    cfg.ew_enabled = false;
    cfg.surface.c4_override = 0.0;
    cfg.magnet.omega_x = cfg.magnet.omega_y = cfg.magnet.omega_z = 0.0;
    CHECK_THROWS_AS(find_minimum_on_axis(cfg), NoStationaryPoint);
}

TEST_CASE("tracking-regime minimum sits at z0 plus the gravitational sag") {
    const TrapConfiguration cfg = fig2_trap(30e-6);
    const LandscapeReport r = find_minimum_on_axis(cfg);
    CHECK(r.has_trap);
    // sag g/wz^2 = 6.21013 um at 200 Hz
    CHECK(r.z_min == doctest::Approx(30e-6 + 6.21013365979e-6).epsilon(3e-5));
    CHECK(r.z_barrier.has_value());
    CHECK(*r.z_barrier < r.z_min);
    CHECK(*r.u_barrier > r.u_min);
}

TEST_CASE("fig2 configuration holds a barrier a few hundred nanometers out") {
    const LandscapeReport r = find_minimum_on_axis(fig2_trap(-15e-6));
    CHECK(r.has_trap);
    REQUIRE(r.z_barrier.has_value());
    CHECK(*r.z_barrier > 100e-9);
    CHECK(*r.z_barrier < 500e-9);
    CHECK(*r.barrier_height > 0.0);
    CHECK(r.z_min < 2e-6); // pinned below two micrometers
}

TEST_CASE("refined minimum agrees with a dense-grid argmin") {
    const TrapConfiguration cfg = fig2_trap(-15e-6);
    const LandscapeReport r = find_minimum_on_axis(cfg);
    const TrapModel model(cfg);

    // 10 pm brute-force grid over a window around the reported minimum.
    const double step = 1e-11;
    double best_z = 0.0, best_u = 1e300;
    for (double z = r.z_min - 3e-9; z <= r.z_min + 3e-9; z += step) {
        const double u = model.total_on_axis(z);
        if (u < best_u) {
            best_u = u;
            best_z = z;
        }
    }
    CHECK(std::abs(best_z - r.z_min) <= step);
    CHECK(r.u_min <= best_u + 1e-45);

    // Same check for the barrier crest.
    REQUIRE(r.z_barrier.has_value());
    double best_zb = 0.0, best_ub = -1e300;
    for (double z = *r.z_barrier - 3e-9; z <= *r.z_barrier + 3e-9; z += step) {
        const double u = model.total_on_axis(z);
        if (u > best_ub) {
            best_ub = u;
            best_zb = z;
        }
    }
    CHECK(std::abs(best_zb - *r.z_barrier) <= step);
}

TEST_CASE("saddle points flank the axis near seventy micrometers") {
    const TrapConfiguration cfg = fig2_trap(-15e-6);
    const auto saddle = find_saddle_points(cfg);
    REQUIRE(saddle.has_value());
    CHECK(saddle->x > 55e-6);
    CHECK(saddle->x < 85e-6);

    const LandscapeReport r = find_minimum_on_axis(cfg);
    CHECK(saddle->u < *r.u_barrier); // escape over the saddle is cheaper
    CHECK(saddle->u > r.u_min);

    const LandscapeReport full = with_saddle(cfg, r);
    CHECK(full.saddle_x.has_value());
    CHECK(full.trap_depth == doctest::Approx(saddle->u - r.u_min));
    CHECK(full.trap_depth < *full.barrier_height);
}

TEST_CASE("uniform barrier has no transverse saddle") {
    TrapConfiguration cfg = fig2_trap(-15e-6);
    cfg.beam.waist_x = 1.0; // effectively uniform over the search window
    cfg.beam.waist_y = 1.0;
    const auto saddle = find_saddle_points(cfg, SearchWindow{0.0, 150e-6});
    CHECK_FALSE(saddle.has_value());
}

TEST_CASE("saddle search requires a barrier") {
    TrapConfiguration cfg = fig2_trap(30e-6);
    cfg.ew_enabled = false;
    cfg.surface.c4_override = 0.0;
    CHECK_THROWS_AS(find_saddle_points(cfg), NoSaddle);
}

TEST_CASE("sweep preserves order and flags opened traps in-row") {
    TrapConfiguration cfg = fig2_trap(0.0);
    cfg.ew_enabled = false;
    std::vector<double> z0s;
    for (int i = -8; i <= 4; ++i) z0s.push_back(i * 1e-6);
    const SweepTable table = sweep_z0(cfg, z0s);
    REQUIRE(table.records.size() == z0s.size());
    bool saw_open = false, saw_trapped = false;
    for (std::size_t i = 0; i < z0s.size(); ++i) {
        CHECK(table.records[i].z0 == z0s[i]);
        if (table.records[i].report) {
            if (table.records[i].report->has_trap) saw_trapped = true;
            else saw_open = true;
        }
    }
    CHECK(saw_open);    // deep z0: surface potential has opened the trap
    CHECK(saw_trapped); // far z0: ordinary magnetic trap
}

TEST_CASE("single-point sweep yields a table of length one") {
    const SweepTable t = sweep_z0(fig2_trap(0.0), std::vector<double>{10e-6});
    CHECK(t.records.size() == 1);
    CHECK(t.records[0].report->has_trap);
}

TEST_CASE("sweep is monotone with bounded slope") {
    TrapConfiguration cfg = fig2_trap(0.0);
    std::vector<double> z0s;
    for (int i = 0; i <= 40; ++i) z0s.push_back((-40.0 + 2.0 * i) * 1e-6);
    const SweepTable table = sweep_z0(cfg, z0s, kDefaultZWindow, 4);
    double prev_z0 = 0.0, prev_zmin = 0.0;
    bool have_prev = false;
    for (const auto& rec : table.records) {
        REQUIRE(rec.report.has_value());
        REQUIRE(rec.report->has_trap);
        if (have_prev) {
            const double dz = (rec.report->z_min - prev_zmin) / (rec.z0 - prev_z0);
            CHECK(dz >= 0.0);
            CHECK(dz <= 1.0 + 1e-3);
        }
        prev_z0 = rec.z0;
        prev_zmin = rec.report->z_min;
        have_prev = true;
    }
}

TEST_CASE("threaded sweep matches the serial sweep bitwise") {
    TrapConfiguration cfg = fig2_trap(0.0);
    std::vector<double> z0s;
    for (int i = 0; i <= 20; ++i) z0s.push_back((-30.0 + 3.0 * i) * 1e-6);
    const SweepTable serial = sweep_z0(cfg, z0s, kDefaultZWindow, 1);
    const SweepTable threaded = sweep_z0(cfg, z0s, kDefaultZWindow, 8);
    for (std::size_t i = 0; i < z0s.size(); ++i) {
        CHECK(serial.records[i].report->z_min == threaded.records[i].report->z_min);
        CHECK(serial.records[i].report->u_min == threaded.records[i].report->u_min);
    }
}

TEST_CASE("barrier height grows with beam power") {
    double prev = 0.0;
    for (double power : {0.3, 0.5, 0.8, 1.2}) {
        TrapConfiguration cfg = fig2_trap(-15e-6);
        cfg.beam.power = power;
        const LandscapeReport r = find_minimum_on_axis(cfg);
        REQUIRE(r.barrier_height.has_value());
        CHECK(*r.barrier_height > prev);
        prev = *r.barrier_height;
    }
}

TEST_CASE("two-regime fit recovers a noiseless piecewise line") {
    const double bp = -1e-6;
    const SweepTable table = synthetic_table(bp, 0.01, 1.0);
    const RegimeFit fit = fit_two_regimes(table);
    CHECK(fit.slope_i == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(fit.slope_ii == doctest::Approx(0.01).epsilon(1e-6));
    CHECK(std::abs(fit.breakpoint_z0 - bp) <= 1e-6); // within grid spacing
    CHECK(fit.residual_rms < 1e-12);
    CHECK(fit.slope_i > fit.slope_ii);
}

TEST_CASE("two-regime fit needs points in both regimes") {
    SweepTable tiny;
    for (int i = 0; i < 6; ++i) {
        LandscapeReport r;
        r.has_trap = true;
        r.z_min = i * 1e-6;
        tiny.records.push_back({i * 1e-6, r, ""});
    }
    CHECK_THROWS_AS(fit_two_regimes(tiny), InsufficientData);
}

TEST_CASE("fig2 sweep resolves the tracking and pinned regimes") {
    TrapConfiguration cfg = fig2_trap(0.0);
    std::vector<double> z0s;
    for (int i = 0; i <= 80; ++i) z0s.push_back((-40.0 + i) * 1e-6);
    const SweepTable table = sweep_z0(cfg, z0s, kDefaultZWindow, 4);
    const RegimeFit fit = fit_two_regimes(table);
    CHECK(fit.slope_i == doctest::Approx(1.0).epsilon(0.02));
    CHECK(fit.slope_ii <= 0.02);
    CHECK(fit.slope_ii >= 0.0);
    CHECK(fit.breakpoint_z0 > -40e-6);
    CHECK(fit.breakpoint_z0 < 40e-6);

    // z_min falls from ~46 um to a sub-2um plateau across the sweep.
    CHECK(table.records.back().report->z_min ==
          doctest::Approx(46.2e-6).epsilon(0.01));
    CHECK(table.records.front().report->z_min < 2e-6);
}

TEST_SUITE_END();
