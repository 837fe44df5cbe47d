#include <cmath>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"
#include "susyces/scattering.hpp"
#include "susyces/verify.hpp"

using namespace susyces;
using testing::throws_code;

namespace {
constexpr double kPi = std::numbers::pi;

SolutionSample wave(double x, double omega, double delta)
{
    return {x, std::sin(omega * x + delta), omega * std::cos(omega * x + delta)};
}
}  // namespace

TEST_SUITE("scattering") {

TEST_CASE("coulomb_eta") {
    CHECK(coulomb_eta(1.0, 0.5) == 1.0);
    CHECK(coulomb_eta(2.0, 1.0) == 2.0);
    CHECK(throws_code([] { return coulomb_eta(0.0, 1.0); }, ErrorCode::InvalidParams));
    CHECK(throws_code([] { return coulomb_eta(1.0, -1.0); }, ErrorCode::InvalidParams));
    CHECK(checks::coulomb_eta_identity().passed);
}

TEST_CASE("reduce_mod_pi lands in (-pi/2, pi/2]") {
    CHECK(reduce_mod_pi(0.3) == doctest::Approx(0.3));
    CHECK(reduce_mod_pi(0.3 + 7.0 * kPi) == doctest::Approx(0.3));
    CHECK(reduce_mod_pi(kPi / 2.0) == doctest::Approx(kPi / 2.0));
    CHECK(reduce_mod_pi(-kPi / 2.0) == doctest::Approx(kPi / 2.0));
    for (double p = -20.0; p < 20.0; p += 0.37) {
        const double r = reduce_mod_pi(p);
        CHECK(r > -kPi / 2.0);
        CHECK(r <= kPi / 2.0);
        CHECK(std::abs(std::remainder(p - r, kPi)) < 1e-12);
    }
}

TEST_CASE("local_phase on free waves") {
    for (double x : {20.0, 33.3, 500.0}) {
        CHECK(std::abs(local_phase(wave(x, 1.0, 0.0), 1.0, 0.0).delta_raw) < 1e-12);
        CHECK(local_phase(wave(x, 1.0, 0.3), 1.0, 0.0).delta_raw == doctest::Approx(0.3).epsilon(1e-12));
    }
    // Only the phase mod pi is recoverable.
    CHECK(local_phase(wave(40.0, 2.0, 0.3 + kPi), 2.0, 0.0).delta_raw == doctest::Approx(0.3).epsilon(1e-12));
    const auto p = local_phase(wave(50.0, 1.0, 0.1), 1.0, 0.25);
    CHECK(p.coulomb_eta == 0.25);
    CHECK(p.x_eval == 50.0);
    CHECK(p.delta_log_corrected == doctest::Approx(reduce_mod_pi(0.1 + 0.25 * std::log(100.0))));
    // The imaginary part is read when asked for.
    SolutionSample s{30.0, Complex(0.0, std::sin(30.0 + 0.2)), Complex(0.0, std::cos(30.0 + 0.2))};
    CHECK(local_phase(s, 1.0, 0.0, SolutionPart::Imag).delta_raw == doctest::Approx(0.2));
}

TEST_CASE("local_phase errors") {
    CHECK(throws_code([] { return local_phase(wave(19.0, 1.0, 0.0), 1.0, 0.0); }, ErrorCode::TooCloseToTurningRegion));
    CHECK(throws_code([] { return local_phase(wave(9.0, 2.0, 0.0), 2.0, 0.0); }, ErrorCode::TooCloseToTurningRegion));
    const SolutionSample zero{30.0, 0.0, 0.0};
    CHECK(throws_code([&] { return local_phase(zero, 1.0, 0.0); }, ErrorCode::DegenerateSample));
}

TEST_CASE("phase relation for (1, 1) and (1/2, 2)") {
    for (auto [m, omega] : {std::pair{1.0, 1.0}, std::pair{0.5, 2.0}}) {
        const auto r = phase_difference(m, omega);
        CAPTURE(m);
        CHECK(r.converged);
        CHECK(r.diff_mod_pi >= 0.0);
        CHECK(r.diff_mod_pi < kPi);
        CHECK(std::abs(r.diff_mod_pi - kPi / 2.0) < 1e-3);
        CHECK(r.residual_to_half_pi == doctest::Approx(std::abs(r.diff_mod_pi - kPi / 2.0)));
        CHECK(r.x_sequence.size() == r.table.size());
        CHECK(r.x_sequence.back() <= 1e4);
        for (std::size_t k = 1; k < r.x_sequence.size(); ++k) {
            CHECK(r.x_sequence[k] == 2.0 * r.x_sequence[k - 1]);
        }
    }
}

TEST_CASE("residual decreases along the sequence") {
    PhaseConfig cfg;
    cfg.tolerance = 1e-9;  // never stop early, run the full doubling sequence
    const auto r = phase_difference(2.0, 0.5, cfg);
    REQUIRE(r.table.size() >= 6);
    CHECK(r.table.back().residual < r.table.front().residual);
    CHECK(r.table.back().residual < 1e-3);
    CHECK(!r.converged);  // 1e-9 is out of reach
}

TEST_CASE("too short a range does not converge") {
    PhaseConfig cfg;
    cfg.x_max = 50.0;
    const auto r = phase_difference(1.0, 1.0, cfg);
    CHECK(r.table.size() == 2);
    CHECK_FALSE(r.converged);
    cfg.x_max = 5.0;
    CHECK(throws_code([&] { return phase_difference(1.0, 1.0, cfg); }, ErrorCode::InvalidParams));
    CHECK(throws_code([] { return phase_difference(0.0, 1.0); }, ErrorCode::InvalidParams));
}

TEST_CASE("without the tail corrections the x = 1e4 residual misses 1e-3") {
    PhaseConfig plain;
    plain.short_range_tail = false;
    plain.local_wavenumber = false;
    plain.tolerance = 1e-12;
    const auto r = phase_difference(1.0, 1.0, plain);
    CHECK(r.table.back().residual > 1e-3);
}

TEST_CASE("imaginary part, scaling covariance, synthetic relation, drift") {
    CHECK(checks::phase_imag_consistency().passed);
    CHECK(checks::phase_scaling_covariance().passed);
    CHECK(checks::phase_synthetic_relation().passed);
    CHECK(checks::phase_log_drift().passed);
    CHECK(synthetic_superpotential_residual(0.7, 1.0, 0.2) < 1e-12);
    CHECK(throws_code([] { return synthetic_superpotential_residual(1.0, 0.0, 0.2); }, ErrorCode::InvalidParams));
}

TEST_CASE("short_range_tail_phase") {
    CHECK(short_range_tail_phase(Sector::Plus, 1.0, 1.0, 4.0) == -0.25);
    CHECK(short_range_tail_phase(Sector::Minus, 1.0, 1.0, 4.0) == 0.25);
}

}
