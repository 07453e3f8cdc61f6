#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "surftrap/config.hpp"
#include "surftrap/loss.hpp"

using namespace surftrap;

namespace {

const PhysicalConstants kConsts{};
const double kB = kConsts.kB;

RampSpec paper_ramp(RampShape shape) {
    RampSpec r;
    r.z0_start = 40e-6;
    r.z0_end = -40e-6;
    r.tau = 0.2;
    r.hold = 0.0;
    r.return_time = 0.1;
    r.shape = shape;
    return r;
}

TrapConfiguration harmonic_trap() {
    TrapConfiguration cfg = paper_fig2_preset().trap;
    cfg.ew_enabled = false;
    cfg.surface.c4_override = 0.0;
    cfg.magnet.omega_x = cfg.magnet.omega_y = cfg.magnet.omega_z = kTwoPi * 100.0;
    cfg.magnet.z0 = 30e-6;
    return cfg;
}

} // namespace

TEST_SUITE_BEGIN("loss");

TEST_CASE("ramp endpoints and shapes") {
    const RampSpec sin2 = paper_ramp(RampShape::PaperSinSquared);
    CHECK(ramp_position(0.0, sin2) == sin2.z0_start);
    CHECK(ramp_position(sin2.tau / 2.0, sin2) == doctest::Approx(sin2.z0_end));
    // The printed sinusoid is periodic: back at the start at t = tau.
    CHECK(ramp_position(sin2.tau, sin2) == doctest::Approx(sin2.z0_start));

    const RampSpec half = paper_ramp(RampShape::MonotoneHalfPeriod);
    CHECK(ramp_position(0.0, half) == half.z0_start);
    CHECK(ramp_position(half.tau, half) == doctest::Approx(half.z0_end));
    double prev = ramp_position(0.0, half);
    for (int i = 1; i <= 50; ++i) {
        const double z = ramp_position(half.tau * i / 50.0, half);
        CHECK(z <= prev + 1e-18); // monotone toward the surface
        prev = z;
    }

    CHECK_THROWS_AS(ramp_position(-0.01, half), DomainError);
    CHECK_THROWS_AS(ramp_position(half.tau * 1.01, half), DomainError);
}

TEST_CASE("evaporation fraction limits") {
    const TrapConfiguration cfg = harmonic_trap();
    LandscapeReport report = find_minimum_on_axis(cfg);

    // Fully contained cloud.
    const double mu = tf_chemical_potential(cfg, 1e5);
    LandscapeReport deep = report;
    deep.trap_depth = 10.0 * mu;
    CHECK(evaporation_fraction(cfg, deep, mu) == 0.0);

    // Open trap loses everything.
    LandscapeReport open;
    open.has_trap = false;
    CHECK(evaporation_fraction(cfg, open, mu) == 1.0);
}

TEST_CASE("harmonic basin with depth mu/2 follows the five-halves law") {
    const TrapConfiguration cfg = harmonic_trap();
    LandscapeReport report = find_minimum_on_axis(cfg);
    const double mu = tf_chemical_potential(cfg, 1e5);
    report.trap_depth = 0.5 * mu;
    const double frac = evaporation_fraction(cfg, report, mu);
    // 1 - (1/2)^{5/2} = 0.823223 from N proportional to mu^{5/2}.
    CHECK(frac == doctest::Approx(0.823223304703).epsilon(2e-3));
}

TEST_CASE("wkb matches the rectangular-barrier closed form") {
    const double m = rb87_default().mass;
    const double v = 2e-6 * kB;
    const double length = 200e-9;
    const double a = 0.4e-6, b = a + length;
    auto rect = [&](double z) { return (z >= a && z <= b) ? v : 0.0; };
    for (double e_frac : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        const double e = e_frac * v;
        const double t = wkb_transmission_1d(rect, m, e, 0.0, 1.0e-6);
        const double closed =
            std::exp(-2.0 * length * std::sqrt(2.0 * m * (v - e)) / kConsts.hbar);
        CHECK(t == doctest::Approx(closed).epsilon(1e-3));
    }
    // Frozen spot value at E = 0.5 uK for V = 2 uK, L = 200 nm.
    CHECK(wkb_transmission_1d(rect, m, 0.5e-6 * kB, 0.0, 1.0e-6) ==
          doctest::Approx(9.38800330683e-5).epsilon(2e-3));
}

TEST_CASE("wkb transmission through the surface barrier") {
    const TrapConfiguration cfg = paper_fig2_preset().trap; // z0 = -15 um
    const LandscapeReport r = find_minimum_on_axis(cfg);
    REQUIRE(r.u_barrier.has_value());

    // Ground-level tunneling is deeply suppressed. Frozen implementation
    // value 1.90e-12, asserted as an order-of-magnitude band.
    const double t_floor = wkb_transmission(cfg, r.u_min);
    CHECK(t_floor < 1e-3);
    CHECK(t_floor == doctest::Approx(1.9026e-12).epsilon(0.05));

    // Approaching the crest the barrier integral vanishes: T -> 1.
    const double eps = 1e-4 * (*r.u_barrier - r.u_min);
    const double t_top = wkb_transmission(cfg, *r.u_barrier - eps);
    CHECK(t_top > 0.9);
    CHECK(t_top < 1.0 + 1e-12);

    CHECK_THROWS_AS(wkb_transmission(cfg, *r.u_barrier + eps), AboveBarrier);
    CHECK_THROWS_AS(wkb_transmission(cfg, r.u_min - 1e-29), DomainError);

    TrapConfiguration no_barrier = harmonic_trap();
    CHECK_THROWS_AS(wkb_transmission(no_barrier, 1e-30), NoBarrier);
}

TEST_CASE("wkb decreases with barrier height and with mass") {
    const double m = rb87_default().mass;
    const double length = 150e-9;
    const double a = 0.4e-6, b = a + length;
    const double e = 0.2e-6 * kB;
    double prev = 1.0;
    for (double v_uk : {1.0, 2.0, 4.0, 8.0}) {
        const double v = v_uk * 1e-6 * kB;
        auto rect = [&](double z) { return (z >= a && z <= b) ? v : 0.0; };
        const double t = wkb_transmission_1d(rect, m, e, 0.0, 1.0e-6);
        CHECK(t < prev);
        prev = t;
    }
    auto rect = [&](double z) { return (z >= a && z <= b) ? 2e-6 * kB : 0.0; };
    CHECK(wkb_transmission_1d(rect, 2.0 * m, e, 0.0, 1.0e-6) <
          wkb_transmission_1d(rect, m, e, 0.0, 1.0e-6));
}

TEST_CASE("survival far from the surface is unity") {
    const ScenarioConfig preset = paper_fig2_preset();
    const std::vector<double> z0s = {20e-6, 30e-6, 40e-6};
    const auto recs = survival_curve(preset.trap, paper_ramp(RampShape::MonotoneHalfPeriod),
                                     1e5, z0s, 200.0);
    for (const auto& r : recs) {
        CHECK(r.error.empty());
        CHECK(r.fraction == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("survival is monotone non-increasing toward the surface") {
    const ScenarioConfig preset = paper_fig2_preset();
    std::vector<double> z0s;
    for (int i = 0; i <= 16; ++i) z0s.push_back((-40.0 + 5.0 * i) * 1e-6);
    const auto recs = survival_curve(preset.trap, paper_ramp(RampShape::MonotoneHalfPeriod),
                                     1e5, z0s, 200.0, kDefaultZWindow, kDefaultXWindow, 4);
    for (std::size_t i = 1; i < recs.size(); ++i) {
        CHECK(recs[i - 1].fraction <= recs[i].fraction + 1e-9);
    }
    // Record identity: fraction = clamp(1 - evap - tunnel, 0, 1).
    for (const auto& r : recs) {
        CHECK(r.fraction ==
              doctest::Approx(std::clamp(1.0 - r.evap_loss - r.tunnel_loss, 0.0, 1.0)));
    }
}

TEST_CASE("without the beam the curve collapses to a step") {
    ScenarioConfig preset = paper_fig2_preset();
    preset.trap.ew_enabled = false;
    std::vector<double> z0s;
    for (int i = 0; i <= 24; ++i) z0s.push_back((-12.0 + i) * 1e-6);
    const auto recs = survival_curve(preset.trap, paper_ramp(RampShape::MonotoneHalfPeriod),
                                     1e5, z0s, 200.0, kDefaultZWindow, kDefaultXWindow, 4);
    CHECK(recs.front().fraction < 0.05); // deep side: all lost
    CHECK(recs.back().fraction > 0.95);  // far side: all kept
    for (std::size_t i = 1; i < recs.size(); ++i) {
        CHECK(recs[i - 1].fraction <= recs[i].fraction + 1e-9);
    }
}

TEST_CASE("more power weakly improves every survival fraction") {
    const ScenarioConfig preset = paper_fig2_preset();
    std::vector<double> z0s;
    for (int i = 0; i <= 8; ++i) z0s.push_back((-40.0 + 10.0 * i) * 1e-6);
    TrapConfiguration strong = preset.trap;
    strong.beam.power = 2.0 * preset.trap.beam.power;
    const auto weak_recs = survival_curve(
        preset.trap, paper_ramp(RampShape::MonotoneHalfPeriod), 1e5, z0s, 200.0,
        kDefaultZWindow, kDefaultXWindow, 4);
    const auto strong_recs = survival_curve(
        strong, paper_ramp(RampShape::MonotoneHalfPeriod), 1e5, z0s, 200.0,
        kDefaultZWindow, kDefaultXWindow, 4);
    for (std::size_t i = 0; i < z0s.size(); ++i) {
        CHECK(strong_recs[i].fraction >= weak_recs[i].fraction - 1e-12);
    }
}

TEST_SUITE_END();
