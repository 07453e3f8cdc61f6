#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "surftrap/config.hpp"
#include "surftrap/spectroscopy.hpp"

using namespace surftrap;

namespace {

const PhysicalConstants kConsts{};

// Forward model: B(z0) = b_offset + m wz^2 (z_ref - z0)^2 / (2 gfmf muB).
double parabola_field(double z0, double omega_z, double z_ref, double b_offset,
                      double gf_mf, const Species& sp) {
    const double dz = z_ref - z0;
    return b_offset + sp.mass * omega_z * omega_z * dz * dz / (2.0 * gf_mf * kConsts.muB);
}

std::vector<RfPoint> synthetic_points(double omega_z, double z_ref, double b_offset,
                                      double gf_mf, const Species& sp,
                                      double noise_sigma, std::uint64_t seed) {
    std::vector<RfPoint> pts;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    for (int i = 0; i <= 14; ++i) {
        const double z0 = (-30.0 + 1.5 * i) * 1e-6;
        double b = parabola_field(z0, omega_z, z_ref, b_offset, gf_mf, sp);
        if (noise_sigma > 0.0) b *= 1.0 + noise_sigma * nd(rng);
        pts.push_back(make_rf_point(z0, b, 1e3, sp));
    }
    return pts;
}

} // namespace

TEST_SUITE_BEGIN("spectroscopy");

TEST_CASE("rf resonance from the Zeeman relation") {
    const Species rb = rb87_default(); // gF dmF = 1/2
    CHECK(rf_resonance(1e-4, rb) == doctest::Approx(699812.247232).epsilon(1e-8));
    CHECK(rf_resonance(0.0, rb) == 0.0);
    CHECK(rf_resonance(2e-4, rb) == doctest::Approx(2.0 * rf_resonance(1e-4, rb)));
    CHECK_THROWS_AS(rf_resonance(-1e-5, rb), DomainError);

    const RfPoint p = make_rf_point(0.0, 1e-4, 500.0, rb);
    CHECK(p.rf_freq == rf_resonance(p.b_field, rb)); // locked relation
}

TEST_CASE("field at the atoms: vertex and arithmetic oracle") {
    TrapConfiguration cfg = paper_fig2_preset().trap;
    cfg.magnet.omega_z = kTwoPi * 195.0;
    cfg.magnet.z0 = -20e-6;
    cfg.magnet.b_offset = 1e-4;

    LandscapeReport pinned;
    pinned.has_trap = true;
    pinned.z_min = 0.5e-6;
    pinned.u_min = 0.0;

    const double b = field_at_atoms(cfg, pinned, 1.0);
    // m wz^2 (20.5 um)^2 / (2 muB): frozen 40-digit arithmetic value.
    CHECK(b - 1e-4 == doctest::Approx(4.90855436502e-6).epsilon(1e-9));

    // Vertex: z_min at the magnetic minimum means B_A = b_offset exactly.
    LandscapeReport at_vertex = pinned;
    at_vertex.z_min = cfg.magnet.z0;
    CHECK(field_at_atoms(cfg, at_vertex, 1.0) == 1e-4);

    LandscapeReport open;
    open.has_trap = false;
    open.z_min = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(field_at_atoms(cfg, open, 1.0), NoTrap);
}

TEST_CASE("field is constant through the tracking regime") {
    const ScenarioConfig preset = paper_fig2_preset();
    std::vector<double> bs;
    for (double z0 = 12e-6; z0 <= 40e-6; z0 += 4e-6) {
        TrapConfiguration cfg = preset.trap;
        cfg.magnet.z0 = z0;
        bs.push_back(field_at_atoms(cfg, find_minimum_on_axis(cfg), 1.0));
    }
    const auto [mn, mx] = std::minmax_element(bs.begin(), bs.end());
    CHECK((*mx - *mn) / *mn < 1e-4);
}

TEST_CASE("noiseless parabola recovered to a tenth of a percent") {
    const Species rb = rb87_default();
    const double omega_in = kTwoPi * 195.0;
    const auto pts = synthetic_points(omega_in, 1.0e-6, 1e-4, 1.0, rb, 0.0, 0);
    const QuadraticFitResult fit = fit_quadratic_rise(pts, rb, 1.0);
    CHECK(fit.omega_z == doctest::Approx(omega_in).epsilon(1e-3));
    CHECK(fit.z_ref == doctest::Approx(1.0e-6).epsilon(1e-6));
    CHECK(fit.b_offset == doctest::Approx(1e-4).epsilon(1e-9));

    // Round trip: the fitted model reproduces its own inputs.
    for (const auto& p : pts) {
        const double back =
            parabola_field(p.z0, fit.omega_z, fit.z_ref, fit.b_offset, 1.0, rb);
        CHECK(back == doctest::Approx(p.b_field).epsilon(1e-10));
    }
}

TEST_CASE("noisy parabolas recover the trap frequency within five percent") {
    const Species rb = rb87_default();
    const double omega_in = kTwoPi * 195.0;
    for (std::uint64_t draw = 1; draw <= 100; ++draw) {
        const auto pts = synthetic_points(omega_in, 1.0e-6, 1e-4, 1.0, rb, 0.05, draw);
        const QuadraticFitResult fit = fit_quadratic_rise(pts, rb, 1.0);
        CHECK(std::abs(fit.omega_z - omega_in) / omega_in < 0.05);
    }
}

TEST_CASE("flat data is a degenerate fit") {
    const Species rb = rb87_default();
    std::vector<RfPoint> flat;
    for (int i = 0; i < 8; ++i) {
        flat.push_back(make_rf_point(i * 1e-6, 1e-4, 1e3, rb));
    }
    CHECK_THROWS_AS(fit_quadratic_rise(flat, rb, 1.0), DegenerateFit);
    CHECK_THROWS_AS(
        fit_quadratic_rise(std::vector<RfPoint>(flat.begin(), flat.begin() + 3), rb, 1.0),
        InsufficientData);
}

TEST_CASE("cross-module closure recovers the configured trap frequency") {
    // Pipeline-generated B_A(z0) in the pinned regime, fit back to omega_z.
    const ScenarioConfig preset = paper_fig2_preset();
    std::vector<RfPoint> pts;
    for (double z0 = -40e-6; z0 <= -10e-6 + 1e-12; z0 += 2e-6) {
        TrapConfiguration cfg = preset.trap;
        cfg.magnet.z0 = z0;
        const LandscapeReport r = find_minimum_on_axis(cfg);
        pts.push_back(make_rf_point(z0, field_at_atoms(cfg, r, 1.0), 1e3,
                                    preset.trap.species));
    }
    const QuadraticFitResult fit = fit_quadratic_rise(pts, preset.trap.species, 1.0);
    CHECK(std::abs(fit.omega_z - kTwoPi * 200.0) / (kTwoPi * 200.0) < 0.03);
}

TEST_CASE("field is continuous across the regime boundary") {
    const ScenarioConfig preset = paper_fig2_preset();
    double prev_b = 0.0;
    bool have_prev = false;
    for (double z0 = -12e-6; z0 <= 8e-6 + 1e-12; z0 += 0.5e-6) {
        TrapConfiguration cfg = preset.trap;
        cfg.magnet.z0 = z0;
        const double b = field_at_atoms(cfg, find_minimum_on_axis(cfg), 1.0);
        if (have_prev) {
            CHECK(std::abs(b - prev_b) < 0.15 * std::max(prev_b, 1e-9));
        }
        prev_b = b;
        have_prev = true;
    }
}

TEST_SUITE_END();
